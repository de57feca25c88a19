#include <doctest.h>

#include "dmt/chain.hpp"
#include "dmt/morse.hpp"
#include "support/fixtures.hpp"

using namespace dmt;
using namespace dmt::testing;

namespace {

using Pairs = std::vector<std::pair<Simplex, Simplex>>;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

std::vector<int> critical_counts(const MorseFunction& f) {
  std::vector<int> m(static_cast<std::size_t>(f.complex().dimension() + 1), 0);
  for (const auto& s : critical_cells(f)) ++m[static_cast<std::size_t>(s.dim())];
  return m;
}

}  // namespace

TEST_CASE("upper and lower sets on the P3 fixture") {
  auto f = p3_fixture();
  CHECK(upper_set(f, Simplex{2}) == CellSet{Simplex{1, 2}});
  CHECK(lower_set(f, Simplex{2, 3}).empty());
  CHECK(lower_set(f, Simplex{1, 2}) == CellSet{Simplex{2}});
  CHECK(upper_set(f, Simplex{1}).empty());
  auto lone = validate(point(), {7.0});
  CHECK(upper_set(lone, Simplex{0}).empty());
  CHECK(kind_of([&] { upper_set(f, Simplex{1, 3}); }) == ErrorKind::SimplexNotInComplex);
}

TEST_CASE("validate") {
  CHECK_NOTHROW(p3_fixture());
  try {
    validate(full_triangle(), std::vector<double>(7, 0.0));
    FAIL("constant function accepted");
  } catch (const MorseConditionError& e) {
    CHECK(e.kind() == ErrorKind::MorseConditionViolated);
    std::size_t vertex_violations = 0;
    for (const auto& v : e.violations()) vertex_violations += v.simplex.dim() == 0 && v.upper >= 2;
    CHECK(vertex_violations == 3);
  }
  auto lone = validate(point(), {7.0});
  CHECK(critical_cells(lone) == CellSet{Simplex{0}});
  CHECK(kind_of([] { validate(point(), std::map<Simplex, double>{}); }) == ErrorKind::MissingValue);
  CHECK(kind_of([] { validate(point(), std::vector<double>{NAN}); }) == ErrorKind::MissingValue);
}

TEST_CASE("critical cells and values") {
  auto f = p3_fixture();
  CHECK(critical_cells(f) == CellSet{Simplex{1}, Simplex{3}, Simplex{2, 3}});
  CHECK(critical_values(f) == std::vector<double>{0, 1, 4});
  CHECK(critical_cells(collapsible_triangle()) == CellSet{Simplex{0}});
  CHECK(critical_cells(circle_fixture()) == CellSet{Simplex{0}, Simplex{1, 2}});
}

TEST_CASE("gradient field") {
  auto v = gradient_field(p3_fixture());
  CHECK(v.pairs() == Pairs{{Simplex{2}, Simplex{1, 2}}});
  CHECK(v.critical_cells() == CellSet{Simplex{1}, Simplex{3}, Simplex{2, 3}});

  auto w = gradient_field(collapsible_triangle());
  CHECK(w.pairs() == Pairs{{Simplex{1}, Simplex{0, 1}}, {Simplex{2}, Simplex{0, 2}}, {Simplex{1, 2}, Simplex{0, 1, 2}}});
  CHECK(w.critical_cells() == CellSet{Simplex{0}});

  CHECK(gradient_field(validate(point(), {0.0})).pairs().empty());
}

TEST_CASE("V-paths and closed path detection") {
  auto v = gradient_field(p3_fixture());
  auto paths = v_paths_from(v, Simplex{2}, 0);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].cells == std::vector<Simplex>{Simplex{2}, Simplex{1, 2}, Simplex{1}});
  CHECK_FALSE(paths[0].is_closed());

  auto trivial = v_paths_from(v, Simplex{1}, 0);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].is_trivial());

  auto cyclic = GradientField::from_pairs(
      triangle_boundary(),
      {{Simplex{0}, Simplex{0, 1}}, {Simplex{1}, Simplex{1, 2}}, {Simplex{2}, Simplex{0, 2}}});
  CHECK(has_closed_path(cyclic));
  bool saw_closed = false;
  for (const auto& p : v_paths_from(cyclic, Simplex{0}, 0)) saw_closed = saw_closed || p.is_closed();
  CHECK(saw_closed);
  CHECK_FALSE(has_closed_path(v));
  CHECK(kind_of([&] { v_paths_from(v, Simplex{2}, 1); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] {
          GradientField::from_pairs(p3_complex(), {{Simplex{2}, Simplex{1, 2}}, {Simplex{2}, Simplex{2, 3}}});
        }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("equivalence") {
  auto f = p3_fixture();
  CHECK(are_equivalent(f, f));
  std::vector<double> scaled;
  for (double x : f.values()) scaled.push_back(2 * x + 1);
  CHECK(are_equivalent(f, validate(f.complex(), scaled)));

  auto flipped = validate(p3_complex(), std::map<Simplex, double>{{Simplex{1}, 0},
                                                                  {Simplex{2}, 3},
                                                                  {Simplex{3}, 1},
                                                                  {Simplex{1, 2}, 3.5},
                                                                  {Simplex{2, 3}, 4}});
  CHECK_FALSE(are_equivalent(f, flipped));
  CHECK(kind_of([&] { are_equivalent(f, collapsible_triangle()); }) == ErrorKind::ComplexMismatch);
}

TEST_CASE("make_injective") {
  auto f = p3_fixture();
  auto g = make_injective(f);
  CHECK(g.is_injective());
  CHECK(std::ranges::equal(g.values(), f.values()));

  auto lone = make_injective(validate(point(), {0.0}));
  CHECK(lone(Simplex{0}) == 0.0);

  auto tied = validate(edge(), std::map<Simplex, double>{{Simplex{0}, 0}, {Simplex{1}, 1}, {Simplex{0, 1}, 1}});
  auto h = make_injective(tied);
  CHECK(h.is_injective());
  CHECK(are_equivalent(tied, h));
  CHECK(gradient_field(h).pairs() == Pairs{{Simplex{1}, Simplex{0, 1}}});
  CHECK(critical_cells(h) == CellSet{Simplex{0}});
}

TEST_CASE("make_injective on random tie-heavy functions") {
  // Quantising an injective function to a few levels creates many ties; keep
  // only the quantisations that remain Morse.
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto k = random_complex(seed, 6, 2);
    auto f = random_morse(k, seed);
    std::vector<double> coarse;
    for (double x : f.values()) coarse.push_back(std::floor(x / 3.0));
    try {
      auto q = validate(k, coarse);
      auto g = make_injective(q);
      CHECK(g.is_injective());
      CHECK(are_equivalent(q, g));
      CHECK(critical_cells(q) == critical_cells(g));
      CHECK(gradient_field(q).pairs() == gradient_field(g).pairs());
      ++checked;
    } catch (const MorseConditionError&) {
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("random_morse") {
  auto f = random_morse(point(), 42);
  CHECK(f(Simplex{0}) == 0.0);
  CHECK(critical_cells(f) == CellSet{Simplex{0}});

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    auto g = random_morse(full_triangle(), seed);
    CHECK(g.is_injective());
    CHECK_FALSE(has_closed_path(gradient_field(g)));
  }
  auto a = random_morse(p3_complex(), 7);
  auto b = random_morse(p3_complex(), 7);
  CHECK(std::ranges::equal(a.values(), b.values()));
}

TEST_CASE("Morse invariants on random instances") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto k = random_complex(seed);
    auto f = random_morse(k, seed * 31 + 5, {0.7});
    auto v = gradient_field(f);
    // Exclusivity.
    for (const auto& s : k.cells()) CHECK((upper_set(f, s).empty() || lower_set(f, s).empty()));
    // Strict decrease along V-paths.
    for (const auto& s : k.cells()) {
      for (const auto& path : v_paths_from(v, s, s.dim())) {
        for (std::size_t i = 2; i < path.cells.size(); i += 2) {
          CHECK(f(path.cells[i]) < f(path.cells[i - 2]));
        }
      }
    }
    // Euler characteristic and weak Morse inequalities.
    auto m = critical_counts(f);
    int alternating = 0;
    for (std::size_t p = 0; p < m.size(); ++p) alternating += (p % 2 == 0) ? m[p] : -m[p];
    CHECK(alternating == euler_characteristic(k));
    auto betti = betti_numbers_mod2(k);
    for (std::size_t p = 0; p < betti.size(); ++p) CHECK(m[p] >= betti[p]);
    // The function rebuilt from its own field has the same gradient.
    CHECK(gradient_field(morse_function_from_field(v)).pairs() == v.pairs());
  }
}
