#include "dmt/category.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

namespace dmt {

namespace {

using detail::Mask;

CollapseSequence sequence_of(const detail::CollapseSearch& search, Mask from, Mask to,
                             const std::vector<detail::CollapseSearch::Step>& steps) {
  CollapseSequence out{search.complex_of(from), search.complex_of(to), {}};
  for (const auto& [a, b] : steps) out.steps.emplace_back(search.ambient().cell(a), search.ambient().cell(b));
  return out;
}

}  // namespace

CategorySolver::CategorySolver(const SimplicialComplex& ambient, std::size_t bound)
    : search_(ambient, std::min(bound, kMaxSearchCells)) {
  std::vector<Mask> collapsible;
  for_each_subcomplex(
      ambient,
      [&](const SimplicialComplex& sub) {
        const Mask m = search_.mask_of(sub);
        if (m != 0 && collapsible_in_ambient(m)) collapsible.push_back(m);
      },
      bound);
  std::sort(collapsible.begin(), collapsible.end(), [](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) > std::popcount(b);
    return a < b;
  });
  for (Mask m : collapsible) {
    if (std::none_of(maximal_.begin(), maximal_.end(), [&](Mask big) { return (m & ~big) == 0; })) {
      maximal_.push_back(m);
    }
  }
}

std::vector<SimplicialComplex> CategorySolver::maximal_collapsible() const {
  std::vector<SimplicialComplex> out;
  for (Mask m : maximal_) out.push_back(search_.complex_of(m));
  return out;
}

bool CategorySolver::cover_within(Mask uncovered, int depth, std::vector<Mask>& chosen) const {
  if (uncovered == 0) return true;
  if (depth == 0) return false;
  const Mask lowest = uncovered & (~uncovered + 1);
  for (Mask m : maximal_) {
    if (!(m & lowest)) continue;
    chosen.push_back(m);
    if (cover_within(uncovered & ~m, depth - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

int CategorySolver::cover_number(Mask target, int limit, std::vector<Mask>& chosen) const {
  for (int n = 0; n <= limit; ++n) {
    chosen.clear();
    if (cover_within(target, n, chosen)) return n;
  }
  return -1;
}

CategoryResult CategorySolver::dgcat(const SimplicialComplex& sub) {
  if (!sub.is_subcomplex_of(ambient())) {
    throw Error(ErrorKind::PreconditionViolated, "not a subcomplex of the ambient complex");
  }
  CategoryResult out;
  const Mask start = search_.mask_of(sub);
  if (start == 0) {
    out.collapse_witness = CollapseSequence{sub, sub, {}};
    return out;
  }
  auto reachable = search_.reachable(start);
  std::sort(reachable.begin(), reachable.end(), [](Mask a, Mask b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  int best = std::numeric_limits<int>::max();
  Mask best_target = 0;
  std::vector<Mask> best_cover;
  std::vector<Mask> chosen;
  for (Mask m : reachable) {
    const int limit = std::min(best - 1, std::popcount(m));
    const int n = cover_number(m, limit, chosen);
    if (n < 0) continue;
    best = n;
    best_target = m;
    best_cover = chosen;
    if (best == 1) break;
  }
  out.value = best - 1;
  out.collapsed = search_.complex_of(best_target);
  out.collapse_witness = sequence_of(search_, start, best_target, *search_.path_to(start, best_target));
  for (Mask u : best_cover) {
    out.cover.push_back(search_.complex_of(u));
    auto steps = *search_.path_to_vertex(u);
    Mask end = u;
    for (const auto& [a, b] : steps) end &= ~(Mask{1} << a) & ~(Mask{1} << b);
    out.cover_witnesses.push_back(sequence_of(search_, u, end, steps));
  }
  return out;
}

std::vector<CellSet> CategorySolver::collapse_family(const SimplicialComplex& sub) {
  std::vector<CellSet> out;
  for (Mask m : search_.reachable(search_.mask_of(sub))) out.push_back(search_.cells_of(m));
  return out;
}

CategoryResult dgcat(const SimplicialComplex& ambient, const SimplicialComplex& sub, std::size_t bound) {
  CategorySolver solver(ambient, bound);
  return solver.dgcat(sub);
}

namespace {

struct LevelData {
  double threshold;
  int dgcat;
  std::vector<CellSet> family;
};

std::vector<LevelData> level_data(const MorseFunction& f, std::size_t bound) {
  CategorySolver solver(f.complex(), bound);
  std::vector<LevelData> out;
  for (double a : f.distinct_values()) {
    const auto level = level_subcomplex(f, a).level;
    out.push_back({a, solver.dgcat(level).value, solver.collapse_family(level)});
  }
  return out;
}

std::vector<CellSet> gamma_from(const std::vector<LevelData>& levels, int k) {
  std::set<CellSet> members;
  for (const auto& l : levels) {
    if (l.dgcat >= k - 1) members.insert(l.family.begin(), l.family.end());
  }
  return {members.begin(), members.end()};
}

}  // namespace

std::vector<CellSet> gamma_family(const MorseFunction& f, int k, std::size_t bound) {
  return gamma_from(level_data(f, bound), k);
}

LsResult ls_minmax(const MorseFunction& f, std::size_t bound) {
  if (!f.is_injective()) throw Error(ErrorKind::PreconditionViolated, "f is not injective");
  const auto levels = level_data(f, bound);
  LsResult out;
  out.dgcat = levels.back().dgcat;
  out.critical_count = critical_cells(f).size();
  for (const auto& l : levels) out.levels.push_back({l.threshold, l.dgcat});
  for (int k = 1; k <= out.dgcat + 1; ++k) {
    const double c = minmax_value(MinMaxInstance{f, {}, gamma_from(levels, k)}).value;
    out.values.emplace_back(k, c);
  }
  return out;
}

bool ls_bound_check(const MorseFunction& f, std::size_t bound) {
  CategorySolver solver(f.complex(), bound);
  return static_cast<std::size_t>(solver.dgcat(f.complex()).value + 1) <= critical_cells(f).size();
}

MinMaxInstance ls_instance(const MorseFunction& f, int k, std::size_t bound) {
  return MinMaxInstance{f, {phi_bar_map(FlowOperator(f))}, gamma_family(f, k, bound)};
}

}  // namespace dmt
