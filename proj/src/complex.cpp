#include "dmt/complex.hpp"

#include <algorithm>
#include <numeric>

#include "dmt/error.hpp"

namespace dmt {

SimplicialComplex::SimplicialComplex() : SimplicialComplex(from_sorted_closed({})) {}

SimplicialComplex SimplicialComplex::from_sorted_closed(std::vector<Simplex> cells) {
  auto data = std::make_shared<Data>();
  data->cells = std::move(cells);
  const auto n = data->cells.size();
  data->faces.resize(n);
  data->cofaces.resize(n);

  const int top = n == 0 ? -1 : data->cells.back().dim();
  data->dim_begin.assign(static_cast<std::size_t>(top + 2), 0);
  for (const auto& s : data->cells) {
    for (int p = s.dim() + 1; p <= top + 1; ++p) ++data->dim_begin[p];
  }

  for (Index i = 0; i < n; ++i) {
    for (const auto& face : data->cells[i].faces()) {
      auto it = std::lower_bound(data->cells.begin(), data->cells.end(), face);
      auto j = static_cast<Index>(it - data->cells.begin());
      data->faces[i].push_back(j);
      data->cofaces[j].push_back(i);
    }
  }
  for (auto& list : data->faces) std::sort(list.begin(), list.end());
  for (auto& list : data->cofaces) std::sort(list.begin(), list.end());
  return SimplicialComplex(std::move(data));
}

SimplicialComplex SimplicialComplex::closure(const CellSet& cells) {
  CellSet closed;
  std::vector<Simplex> stack(cells.begin(), cells.end());
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    if (closed.contains(s)) continue;
    for (auto& face : s.faces()) {
      if (!closed.contains(face)) stack.push_back(std::move(face));
    }
    closed.insert(std::move(s));
  }
  return from_sorted_closed(std::vector<Simplex>(closed.begin(), closed.end()));
}

SimplicialComplex SimplicialComplex::closure(std::span<const Simplex> cells) {
  return closure(CellSet(cells.begin(), cells.end()));
}

std::span<const Simplex> SimplicialComplex::cells_of_dim(int p) const {
  if (p < 0 || p > dimension()) return {};
  const auto& b = data_->dim_begin;
  return std::span<const Simplex>(data_->cells).subspan(b[p], b[p + 1] - b[p]);
}

SimplicialComplex::Index SimplicialComplex::dim_offset(int p) const {
  if (p < 0) return 0;
  if (p > dimension()) return size();
  return data_->dim_begin[p];
}

SimplicialComplex::Index SimplicialComplex::index_of(const Simplex& s) const noexcept {
  const auto& cells = data_->cells;
  auto it = std::lower_bound(cells.begin(), cells.end(), s);
  if (it == cells.end() || *it != s) return npos;
  return static_cast<Index>(it - cells.begin());
}

SimplicialComplex::Index SimplicialComplex::require_index(const Simplex& s) const {
  auto i = index_of(s);
  if (i == npos) throw Error(ErrorKind::SimplexNotInComplex, s.to_string() + " is not in the complex");
  return i;
}

CellSet SimplicialComplex::faces_of(const Simplex& s) const {
  CellSet out;
  for (auto j : faces_of(require_index(s))) out.insert(cell(j));
  return out;
}

CellSet SimplicialComplex::cofaces_of(const Simplex& s) const {
  CellSet out;
  for (auto j : cofaces_of(require_index(s))) out.insert(cell(j));
  return out;
}

std::vector<Simplex> SimplicialComplex::vertices() const {
  auto v = cells_of_dim(0);
  return {v.begin(), v.end()};
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.cells().begin(), other.cells().end(), cells().begin(), cells().end());
}

SimplicialComplex SimplicialComplex::without(const CellSet& removed) const {
  std::vector<Simplex> kept;
  kept.reserve(size());
  for (const auto& s : cells()) {
    if (!removed.contains(s)) kept.push_back(s);
  }
  return from_sorted_closed(std::move(kept));
}

std::size_t SimplicialComplex::component_count() const {
  const auto n = count_of_dim(0);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  const auto first_edge = dim_offset(1);
  for (std::size_t e = 0; e < count_of_dim(1); ++e) {
    auto f = faces_of(first_edge + e);
    auto a = find(f[0]);
    auto b = find(f[1]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.data_ == b.data_ || std::ranges::equal(a.cells(), b.cells());
}

SimplicialComplex build_complex(std::span<const Simplex> maximal_or_all) {
  if (maximal_or_all.empty()) throw Error(ErrorKind::EmptyInput, "no simplices given");
  return SimplicialComplex::closure(maximal_or_all);
}

SimplicialComplex build_complex(std::initializer_list<Simplex> maximal_or_all) {
  return build_complex(std::span<const Simplex>(maximal_or_all.begin(), maximal_or_all.size()));
}

int euler_characteristic(const SimplicialComplex& complex) {
  int chi = 0;
  for (int p = 0; p <= complex.dimension(); ++p) {
    const int n = static_cast<int>(complex.count_of_dim(p));
    chi += (p % 2 == 0) ? n : -n;
  }
  return chi;
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& complex) {
  return sub.is_subcomplex_of(complex);
}

bool is_face_closed(const CellSet& cells) {
  for (const auto& s : cells) {
    for (const auto& f : s.faces()) {
      if (!cells.contains(f)) return false;
    }
  }
  return true;
}

void for_each_subcomplex(const SimplicialComplex& complex,
                         const std::function<void(const SimplicialComplex&)>& visit,
                         std::size_t bound) {
  const auto n = complex.size();
  if (n > bound) {
    throw Error(ErrorKind::TooLargeForEnumeration,
                "complex has " + std::to_string(n) + " simplices, enumeration bound is " +
                    std::to_string(bound));
  }
  std::vector<bool> chosen(n, false);
  // Cells are sorted by dimension, so every face precedes its cofaces.
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == n) {
      CellSet cells;
      for (std::size_t k = 0; k < n; ++k) {
        if (chosen[k]) cells.insert(complex.cell(k));
      }
      visit(SimplicialComplex::closure(cells));
      return;
    }
    recurse(i + 1);
    auto faces = complex.faces_of(i);
    if (std::all_of(faces.begin(), faces.end(), [&](auto j) { return chosen[j]; })) {
      chosen[i] = true;
      recurse(i + 1);
      chosen[i] = false;
    }
  };
  recurse(0);
}

std::vector<SimplicialComplex> subcomplexes_of(const SimplicialComplex& complex, std::size_t bound) {
  std::vector<SimplicialComplex> out;
  for_each_subcomplex(complex, [&](const SimplicialComplex& sub) { out.push_back(sub); }, bound);
  return out;
}

}  // namespace dmt
