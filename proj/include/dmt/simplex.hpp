#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace dmt {

using Vertex = std::int32_t;

/// A simplex in canonical form: strictly increasing vertex ids.
///
/// Simplices order first by dimension and then lexicographically, so sorted
/// containers list vertices, then edges, then triangles, and so on.
class Simplex {
 public:
  Simplex() = default;

  /// Sorts the ids. Throws MalformedSimplex on an empty list, a negative id
  /// or a repeated id.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  /// Codimension-1 face obtained by deleting the i-th vertex. Its incidence
  /// sign in the boundary is (-1)^i.
  Simplex face(std::size_t i) const;
  std::vector<Simplex> faces() const;

  /// Strict face relation (proper subset of vertices).
  bool is_face_of(const Simplex& other) const;

  /// Incidence number <d(coface), *this> for a codimension-1 face, 0 otherwise.
  int incidence_in(const Simplex& coface) const;

  bool contains(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  std::vector<Vertex> vertices_;
};

/// A set of cells, ordered by (dimension, vertex tuple).
using CellSet = std::set<Simplex>;

std::string to_string(const CellSet& cells);

}  // namespace dmt

template <>
struct std::hash<dmt::Simplex> {
  std::size_t operator()(const dmt::Simplex& s) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : s.vertices()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
