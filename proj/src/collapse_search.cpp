#include "dmt/detail/collapse_search.hpp"

#include <algorithm>

#include "dmt/error.hpp"
#include "dmt/morse.hpp"

namespace dmt::detail {

CollapseSearch::CollapseSearch(const SimplicialComplex& ambient, std::size_t max_cells,
                               const MorseFunction* guide)
    : ambient_(ambient) {
  const auto n = ambient.size();
  if (n > std::min<std::size_t>(max_cells, 64)) {
    throw Error(ErrorKind::TooLargeForEnumeration,
                "complex has " + std::to_string(n) + " simplices, search bound is " +
                    std::to_string(std::min<std::size_t>(max_cells, 64)));
  }
  full_ = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  coface_mask_.resize(n, 0);
  priority_.resize(n, 0);
  for (Index i = 0; i < n; ++i) {
    for (auto j : ambient.cofaces_of(i)) coface_mask_[i] |= Mask{1} << j;
    if (ambient.cell(i).dim() % 2 == 1) odd_dim_ |= Mask{1} << i;
  }
  if (guide && guide->complex() == ambient) {
    for (Index i = 0; i < n; ++i) priority_[i] = guide->value(i);
  } else {
    // Without a guide prefer removing high-dimensional, late cells first.
    for (Index i = 0; i < n; ++i) priority_[i] = static_cast<double>(i);
  }
}

Mask CollapseSearch::mask_of(const SimplicialComplex& sub) const {
  Mask m = 0;
  for (const auto& s : sub.cells()) m |= Mask{1} << ambient_.require_index(s);
  return m;
}

CellSet CollapseSearch::cells_of(Mask m) const {
  CellSet out;
  for (; m; m &= m - 1) out.insert(ambient_.cell(static_cast<Index>(std::countr_zero(m))));
  return out;
}

SimplicialComplex CollapseSearch::complex_of(Mask m) const {
  return SimplicialComplex::closure(cells_of(m));
}

int CollapseSearch::euler(Mask m) const {
  return std::popcount(m & ~odd_dim_) - std::popcount(m & odd_dim_);
}

std::vector<CollapseSearch::Step> CollapseSearch::free_pairs(Mask m, Mask keep) const {
  std::vector<Step> out;
  for (Mask rest = m & ~keep; rest; rest &= rest - 1) {
    const auto sigma = static_cast<Index>(std::countr_zero(rest));
    const Mask up = coface_mask_[sigma] & m;
    if (std::popcount(up) != 1 || (up & keep)) continue;
    out.emplace_back(sigma, static_cast<Index>(std::countr_zero(up)));
  }
  std::sort(out.begin(), out.end(), [&](const Step& a, const Step& b) {
    const double pa = std::max(priority_[a.first], priority_[a.second]);
    const double pb = std::max(priority_[b.first], priority_[b.second]);
    if (pa != pb) return pa > pb;
    return a.second > b.second;
  });
  return out;
}

bool CollapseSearch::search(Mask m, Mask to, std::vector<Step>& steps,
                            std::unordered_set<Mask>& dead) {
  if (m == to) return true;
  if (dead.contains(m)) return false;
  for (const auto& step : free_pairs(m, to)) {
    steps.push_back(step);
    if (search(m & ~(Mask{1} << step.first) & ~(Mask{1} << step.second), to, steps, dead)) {
      return true;
    }
    steps.pop_back();
  }
  dead.insert(m);
  return false;
}

std::optional<std::vector<CollapseSearch::Step>> CollapseSearch::path_to(Mask from, Mask to) {
  if ((to & ~from) != 0 || euler(from) != euler(to)) return std::nullopt;
  std::vector<Step> steps;
  std::unordered_set<Mask> dead;
  if (!search(from, to, steps, dead)) return std::nullopt;
  return steps;
}

bool CollapseSearch::search_vertex(Mask m, std::vector<Step>& steps) {
  if (std::popcount(m) == 1) return true;
  if (m == 0 || euler(m) != 1 || not_collapsible_.contains(m)) return false;
  for (const auto& step : free_pairs(m)) {
    steps.push_back(step);
    if (search_vertex(m & ~(Mask{1} << step.first) & ~(Mask{1} << step.second), steps)) {
      collapsible_.insert(m);
      return true;
    }
    steps.pop_back();
  }
  not_collapsible_.insert(m);
  return false;
}

std::optional<std::vector<CollapseSearch::Step>> CollapseSearch::path_to_vertex(Mask from) {
  std::vector<Step> steps;
  if (!search_vertex(from, steps)) return std::nullopt;
  return steps;
}

bool CollapseSearch::collapsible(Mask m) {
  if (collapsible_.contains(m)) return true;
  std::vector<Step> steps;
  return search_vertex(m, steps);
}

std::vector<Mask> CollapseSearch::reachable(Mask from) {
  std::unordered_set<Mask> seen{from};
  std::vector<Mask> stack{from};
  while (!stack.empty()) {
    Mask m = stack.back();
    stack.pop_back();
    for (const auto& step : free_pairs(m)) {
      Mask next = m & ~(Mask{1} << step.first) & ~(Mask{1} << step.second);
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dmt::detail
