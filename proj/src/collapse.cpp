#include "dmt/collapse.hpp"

#include <algorithm>
#include <functional>

#include "dmt/chain.hpp"
#include "dmt/detail/collapse_search.hpp"

namespace dmt {

namespace {

using Index = SimplicialComplex::Index;
using detail::CollapseSearch;
using detail::Mask;

CollapseSequence to_sequence(const CollapseSearch& search, const SimplicialComplex& start,
                             const SimplicialComplex& end,
                             const std::vector<CollapseSearch::Step>& steps) {
  CollapseSequence out{start, end, {}};
  for (const auto& [sigma, tau] : steps) {
    out.steps.emplace_back(search.ambient().cell(sigma), search.ambient().cell(tau));
  }
  return out;
}

// Removes the pairs in order, checking each step; any failure is reported as
// a ProofFailure because callers derive the order from a theorem.
SimplicialComplex apply_pairs_or_fail(SimplicialComplex k, const std::vector<CollapsePair>& pairs,
                                      const char* what) {
  for (const auto& [sigma, tau] : pairs) {
    if (!is_free_face(k, sigma, tau)) {
      throw Error(ErrorKind::ProofFailure, std::string(what) + ": " + sigma.to_string() +
                                               " is not a free face of " + tau.to_string());
    }
    k = k.without({sigma, tau});
  }
  return k;
}

std::vector<int> padded(std::vector<int> betti, std::size_t size) {
  betti.resize(size, 0);
  return betti;
}

}  // namespace

FiltrationLevel level_subcomplex(const MorseFunction& f, double a) {
  FiltrationLevel out;
  out.threshold = a;
  const auto& k = f.complex();
  for (Index i = 0; i < k.size(); ++i) {
    if (f.value(i) <= a) out.sublevel.insert(k.cell(i));
  }
  out.level = SimplicialComplex::closure(out.sublevel);
  return out;
}

bool is_free_face(const SimplicialComplex& complex, const Simplex& sigma, const Simplex& tau) {
  if (sigma.dim() + 1 != tau.dim() || !sigma.is_face_of(tau)) return false;
  auto i = complex.index_of(sigma);
  if (i == SimplicialComplex::npos || !complex.contains(tau)) return false;
  auto cofaces = complex.cofaces_of(i);
  return cofaces.size() == 1 && complex.cell(cofaces[0]) == tau;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const Simplex& sigma,
                                      const Simplex& tau) {
  if (!is_free_face(complex, sigma, tau)) {
    throw Error(ErrorKind::NotFreeFace,
                sigma.to_string() + " is not a free face of " + tau.to_string());
  }
  return complex.without({sigma, tau});
}

SimplicialComplex replay(const CollapseSequence& sequence) {
  auto k = sequence.start;
  for (const auto& [sigma, tau] : sequence.steps) k = elementary_collapse(k, sigma, tau);
  return k;
}

bool replays(const CollapseSequence& sequence) {
  try {
    return replay(sequence) == sequence.end;
  } catch (const Error&) {
    return false;
  }
}

std::optional<CollapseSequence> collapses_to(const SimplicialComplex& complex,
                                             const SimplicialComplex& target,
                                             CollapseSearchOptions options) {
  if (!target.is_subcomplex_of(complex)) {
    throw Error(ErrorKind::PreconditionViolated, "target is not a subcomplex");
  }
  CollapseSearch search(complex, options.max_cells, options.guide);
  auto steps = search.path_to(search.full(), search.mask_of(target));
  if (!steps) return std::nullopt;
  return to_sequence(search, complex, target, *steps);
}

std::optional<CollapseSequence> collapse_to_vertex(const SimplicialComplex& complex,
                                                   CollapseSearchOptions options) {
  CollapseSearch search(complex, options.max_cells, options.guide);
  auto steps = search.path_to_vertex(search.full());
  if (!steps) return std::nullopt;
  CellSet removed;
  for (const auto& [a, b] : *steps) {
    removed.insert(complex.cell(a));
    removed.insert(complex.cell(b));
  }
  return to_sequence(search, complex, complex.without(removed), *steps);
}

bool is_collapsible(const SimplicialComplex& complex, CollapseSearchOptions options) {
  CollapseSearch search(complex, options.max_cells, options.guide);
  return search.collapsible(search.full());
}

std::vector<SimplicialComplex> collapse_reachable(const SimplicialComplex& complex,
                                                  CollapseSearchOptions options) {
  CollapseSearch search(complex, options.max_cells, options.guide);
  std::vector<SimplicialComplex> out;
  for (auto m : search.reachable(search.full())) out.push_back(search.complex_of(m));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::ranges::lexicographical_compare(a.cells(), b.cells());
  });
  return out;
}

CollapseSequence verify_dmt_a(const MorseFunction& f, double a, double b) {
  if (!(a < b)) throw Error(ErrorKind::PreconditionViolated, "window (a, b] needs a < b");
  for (double c : critical_values(f)) {
    if (a < c && c <= b) {
      throw Error(ErrorKind::CriticalValueInWindow,
                  "critical value " + std::to_string(c) + " lies in the window");
    }
  }
  const auto kb = level_subcomplex(f, b).level;
  const auto ka = level_subcomplex(f, a).level;
  const auto field = gradient_field(f);
  const auto& k = f.complex();

  std::vector<std::pair<Index, Index>> pairs;  // (lower, upper) ambient indices
  for (const auto& s : kb.cells()) {
    if (ka.contains(s)) continue;
    auto i = k.require_index(s);
    auto j = field.partner(i);
    if (j == GradientField::npos || !kb.contains(k.cell(j)) || ka.contains(k.cell(j))) {
      throw Error(ErrorKind::ProofFailure, s.to_string() + " has no partner inside the window");
    }
    if (j > i) pairs.emplace_back(i, j);
  }
  std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    const double vx = std::max(f.value(x.first), f.value(x.second));
    const double vy = std::max(f.value(y.first), f.value(y.second));
    if (vx != vy) return vx > vy;
    return x.second > y.second;
  });

  CollapseSequence out{kb, ka, {}};
  for (const auto& [i, j] : pairs) out.steps.emplace_back(k.cell(i), k.cell(j));
  if (!(apply_pairs_or_fail(kb, out.steps, "sublevel collapse") == ka)) {
    throw Error(ErrorKind::ProofFailure, "collapse did not end at the lower level");
  }
  return out;
}

BettiDelta verify_dmt_b(const MorseFunction& f, const Simplex& sigma, double a, double b) {
  const auto critical = critical_cells(f);
  if (!critical.contains(sigma)) {
    throw Error(ErrorKind::PreconditionViolated, sigma.to_string() + " is not critical");
  }
  const double value = f(sigma);
  if (!(a < value && value <= b)) {
    throw Error(ErrorKind::PreconditionViolated, "f(sigma) is not in the window (a, b]");
  }
  for (const auto& c : critical) {
    if (c != sigma && a < f(c) && f(c) <= b) {
      throw Error(ErrorKind::PreconditionViolated,
                  "another critical cell " + c.to_string() + " lies in the window");
    }
  }
  BettiDelta out;
  out.cell_dim = sigma.dim();
  out.before = betti_numbers_mod2(level_subcomplex(f, a).level);
  out.after = betti_numbers_mod2(level_subcomplex(f, b).level);
  const auto size = std::max({out.before.size(), out.after.size(), static_cast<std::size_t>(out.cell_dim + 1)});
  const auto before = padded(out.before, size);
  const auto after = padded(out.after, size);

  auto matches = [&](int degree, int change) {
    if (degree < 0) return false;
    for (std::size_t q = 0; q < size; ++q) {
      const int expected = before[q] + (static_cast<int>(q) == degree ? change : 0);
      if (after[q] != expected) return false;
    }
    return true;
  };
  const int p = out.cell_dim;
  if (matches(p, +1)) {
    out.degree = p;
    out.change = +1;
  } else if (matches(p - 1, -1)) {
    out.degree = p - 1;
    out.change = -1;
  } else {
    throw Error(ErrorKind::SignatureMismatch,
                "Betti numbers around " + sigma.to_string() + " do not match a cell attachment");
  }
  return out;
}

Simplex flow_terminal(const GradientField& field, const Simplex& vertex) {
  const auto& k = field.complex();
  auto i = k.require_index(vertex);
  for (std::size_t steps = 0; steps <= k.size(); ++steps) {
    auto e = field.upper_partner(i);
    if (e == GradientField::npos) return k.cell(i);
    auto ends = k.faces_of(e);
    i = ends[0] == i ? ends[1] : ends[0];
  }
  throw Error(ErrorKind::AcyclicityBug, "vertex V-path from " + vertex.to_string() + " does not end");
}

Basin basin(const GradientField& field, const MorseFunction& f, const Simplex& minimum) {
  const auto& k = field.complex();
  if (minimum.dim() != 0 || !k.contains(minimum) || !field.is_critical(k.require_index(minimum))) {
    throw Error(ErrorKind::NotACriticalVertex, minimum.to_string() + " is not a critical vertex");
  }
  // depth = number of pairs on the vertex's V-path.
  struct Member {
    std::size_t depth;
    double value;
    Simplex vertex;
    Simplex edge;
  };
  std::vector<Member> members;
  CellSet cells{minimum};
  for (const auto& v : k.cells_of_dim(0)) {
    if (v == minimum || flow_terminal(field, v) != minimum) continue;
    std::size_t depth = 0;
    for (auto i = k.require_index(v); field.upper_partner(i) != GradientField::npos; ++depth) {
      auto ends = k.faces_of(field.upper_partner(i));
      i = ends[0] == i ? ends[1] : ends[0];
    }
    auto e = k.cell(field.upper_partner(k.require_index(v)));
    members.push_back({depth, f(v), v, e});
    cells.insert(v);
    cells.insert(e);
  }
  std::sort(members.begin(), members.end(), [](const Member& x, const Member& y) {
    if (x.depth != y.depth) return x.depth > y.depth;
    if (x.value != y.value) return x.value > y.value;
    return x.vertex < y.vertex;
  });
  Basin out{minimum, SimplicialComplex::closure(cells), {}};
  out.witness.start = out.cells;
  out.witness.end = SimplicialComplex::closure(CellSet{minimum});
  for (const auto& m : members) out.witness.steps.emplace_back(m.vertex, m.edge);
  if (!(apply_pairs_or_fail(out.cells, out.witness.steps, "basin collapse") == out.witness.end)) {
    throw Error(ErrorKind::ProofFailure, "basin did not collapse onto its minimum");
  }
  return out;
}

BasinComparison compare_with_maximal_collapsing(const Basin& basin,
                                                const SimplicialComplex& complex,
                                                std::size_t bound) {
  CollapseSearch search(complex, std::min(bound, kMaxSearchCells));
  const Mask target = search.mask_of_cell(basin.minimum);
  std::vector<Mask> collapsing;
  for_each_subcomplex(
      complex,
      [&](const SimplicialComplex& sub) {
        Mask m = search.mask_of(sub);
        if ((m & target) && search.path_to(m, target)) collapsing.push_back(m);
      },
      bound);

  BasinComparison out;
  const Mask basin_mask = search.mask_of(basin.cells);
  for (Mask m : collapsing) {
    bool maximal = std::none_of(collapsing.begin(), collapsing.end(),
                                [&](Mask other) { return other != m && (m & ~other) == 0; });
    if (!maximal) continue;
    out.maximal.push_back(search.complex_of(m));
    if ((basin_mask & ~m) == 0) out.contained = true;
    if (m == basin_mask) out.basin_is_maximal = true;
  }
  return out;
}

}  // namespace dmt
