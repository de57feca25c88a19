#pragma once

#include <utility>
#include <vector>

#include "dmt/collapse.hpp"
#include "dmt/detail/collapse_search.hpp"
#include "dmt/minmax.hpp"

namespace dmt {

struct CategoryResult {
  /// dgcat_K(L); -1 for the empty subcomplex.
  int value = -1;
  /// L' with L collapsing onto L' that attains the minimum.
  SimplicialComplex collapsed;
  CollapseSequence collapse_witness;
  /// value + 1 collapsible subcomplexes of K covering `collapsed`.
  std::vector<SimplicialComplex> cover;
  std::vector<CollapseSequence> cover_witnesses;
};

/// Exact discrete geometric category of subcomplexes of one ambient complex.
/// All collapsible subcomplexes of K are enumerated once, so |K| is limited
/// by `bound` (TooLargeForEnumeration).
class CategorySolver {
 public:
  explicit CategorySolver(const SimplicialComplex& ambient,
                          std::size_t bound = kDefaultEnumerationBound);

  const SimplicialComplex& ambient() const { return search_.ambient(); }
  /// Inclusion-maximal collapsible subcomplexes of K.
  std::vector<SimplicialComplex> maximal_collapsible() const;
  /// Throws PreconditionViolated when `sub` is not a subcomplex of K.
  CategoryResult dgcat(const SimplicialComplex& sub);
  /// Every subcomplex reachable from `sub` by collapses, as cell sets.
  std::vector<CellSet> collapse_family(const SimplicialComplex& sub);

 private:
  using Mask = detail::Mask;

  // A cover member must collapse to a vertex inside itself.
  bool collapsible_in_ambient(Mask m) { return search_.collapsible(m); }
  bool cover_within(Mask uncovered, int depth, std::vector<Mask>& chosen) const;
  int cover_number(Mask target, int limit, std::vector<Mask>& chosen) const;

  detail::CollapseSearch search_;
  std::vector<Mask> maximal_;
};

CategoryResult dgcat(const SimplicialComplex& ambient, const SimplicialComplex& sub,
                     std::size_t bound = kDefaultEnumerationBound);

struct LsLevel {
  double threshold = 0;
  int dgcat = -1;
};

struct LsResult {
  int dgcat = -1;  // of K itself
  std::size_t critical_count = 0;
  std::vector<LsLevel> levels;
  /// (k, c_k) for k = 1 .. dgcat + 1.
  std::vector<std::pair<int, double>> values;
};

/// Gamma_k: subcomplexes L with K^a collapsing onto L for some a with
/// dgcat_K(K^a) >= k - 1, over the distinct values a of f.
std::vector<CellSet> gamma_family(const MorseFunction& f, int k,
                                  std::size_t bound = kDefaultEnumerationBound);

/// c_k = min over Gamma_k of max f. Throws PreconditionViolated for
/// non-injective f, TheoremViolation when some c_k is not critical.
LsResult ls_minmax(const MorseFunction& f, std::size_t bound = kDefaultEnumerationBound);

/// dgcat(K) + 1 <= number of critical cells.
bool ls_bound_check(const MorseFunction& f, std::size_t bound = kDefaultEnumerationBound);

/// H = {Phi-bar}, S = Gamma_k.
MinMaxInstance ls_instance(const MorseFunction& f, int k,
                           std::size_t bound = kDefaultEnumerationBound);

}  // namespace dmt
