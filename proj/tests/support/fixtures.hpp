#pragma once

// Shared complexes, Morse functions and random instance generators for the
// unit and acceptance suites.

#include <map>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/detail/random.hpp"
#include "dmt/morse.hpp"

namespace dmt::testing {

inline SimplicialComplex point() { return build_complex({Simplex{0}}); }
inline SimplicialComplex edge() { return build_complex({Simplex{0, 1}}); }
inline SimplicialComplex full_triangle() { return build_complex({Simplex{0, 1, 2}}); }
inline SimplicialComplex triangle_boundary() {
  return build_complex({Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
}
inline SimplicialComplex two_triangles() {
  return build_complex({Simplex{0, 1, 2}, Simplex{1, 2, 3}});
}

/// Path 1 - 2 - 3 with f(1)=0, f(2)=3, f(3)=1, f(12)=2, f(23)=4.
inline SimplicialComplex p3_complex() { return build_complex({Simplex{1, 2}, Simplex{2, 3}}); }
inline MorseFunction p3_fixture() {
  return validate(p3_complex(), std::map<Simplex, double>{{Simplex{1}, 0},
                                                          {Simplex{2}, 3},
                                                          {Simplex{3}, 1},
                                                          {Simplex{1, 2}, 2},
                                                          {Simplex{2, 3}, 4}});
}

/// Full triangle on a=0, b=1, c=2 collapsing onto a.
inline MorseFunction collapsible_triangle() {
  return validate(full_triangle(), std::map<Simplex, double>{{Simplex{0}, 0},
                                                             {Simplex{1}, 2},
                                                             {Simplex{0, 1}, 1},
                                                             {Simplex{2}, 3},
                                                             {Simplex{0, 2}, 2.5},
                                                             {Simplex{1, 2}, 4},
                                                             {Simplex{0, 1, 2}, 3.5}});
}

/// Triangle boundary on a=0, b=1, c=2 with critical cells a and bc.
inline MorseFunction circle_fixture() {
  return validate(triangle_boundary(), std::map<Simplex, double>{{Simplex{0}, 0},
                                                                 {Simplex{1}, 2},
                                                                 {Simplex{0, 1}, 1},
                                                                 {Simplex{2}, 4},
                                                                 {Simplex{0, 2}, 3},
                                                                 {Simplex{1, 2}, 5}});
}

/// Random connected complex: a random spanning tree on the vertices plus
/// random higher simplices.
inline SimplicialComplex random_connected_complex(std::uint64_t seed, int min_vertices = 3,
                                                  int max_vertices = 8, int max_dim = 2) {
  detail::Rng rng(seed);
  const int n = min_vertices +
                static_cast<int>(detail::below(rng, static_cast<std::uint64_t>(max_vertices - min_vertices + 1)));
  std::vector<Simplex> generators;
  for (int v = 1; v < n; ++v) {
    generators.push_back(Simplex{static_cast<Vertex>(detail::below(rng, static_cast<std::uint64_t>(v))), v});
  }
  const int extra = static_cast<int>(detail::below(rng, 6));
  for (int k = 0; k < extra; ++k) {
    const int d = 1 + static_cast<int>(detail::below(rng, static_cast<std::uint64_t>(std::min(max_dim, n - 1))));
    std::vector<Vertex> pool;
    for (int v = 0; v < n; ++v) pool.push_back(v);
    detail::shuffle(pool, rng);
    pool.resize(static_cast<std::size_t>(d + 1));
    generators.emplace_back(pool);
  }
  return build_complex(generators);
}

}  // namespace dmt::testing
