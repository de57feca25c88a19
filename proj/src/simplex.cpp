#include "dmt/simplex.hpp"

#include <algorithm>

#include "dmt/error.hpp"

namespace dmt {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::MalformedSimplex, "simplex has no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() < 0) {
    throw Error(ErrorKind::MalformedSimplex, "negative vertex id " + std::to_string(vertices_.front()));
  }
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw Error(ErrorKind::MalformedSimplex, "repeated vertex id " + std::to_string(*dup));
  }
}

Simplex Simplex::face(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k != i) out.push_back(vertices_[k]);
  }
  return Simplex(Trusted{}, std::move(out));
}

std::vector<Simplex> Simplex::faces() const {
  std::vector<Simplex> out;
  if (dim() == 0) return out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(face(i));
  return out;
}

bool Simplex::is_face_of(const Simplex& other) const {
  return vertices_.size() < other.vertices_.size() &&
         std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

int Simplex::incidence_in(const Simplex& coface) const {
  if (coface.vertices_.size() != vertices_.size() + 1) return 0;
  // Position of the single vertex of `coface` missing from *this.
  std::size_t i = 0;
  std::size_t missing = coface.vertices_.size();
  for (std::size_t k = 0; k < coface.vertices_.size(); ++k) {
    if (i < vertices_.size() && vertices_[i] == coface.vertices_[k]) {
      ++i;
    } else if (missing == coface.vertices_.size()) {
      missing = k;
    } else {
      return 0;
    }
  }
  if (i != vertices_.size()) return 0;
  return (missing % 2 == 0) ? 1 : -1;
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::string Simplex::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out + "]";
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                b.vertices_.begin(), b.vertices_.end());
}

std::string to_string(const CellSet& cells) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : cells) {
    if (!first) out += ' ';
    first = false;
    out += s.to_string();
  }
  return out + "}";
}

}  // namespace dmt
