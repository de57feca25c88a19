#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dmt/complex.hpp"

namespace dmt {
class MorseFunction;
}

namespace dmt::detail {

using Mask = std::uint64_t;

/// Exact collapse searches over subcomplexes of one ambient complex, with
/// subcomplexes encoded as bit masks of ambient cell indices.
class CollapseSearch {
 public:
  using Index = SimplicialComplex::Index;
  using Step = std::pair<Index, Index>;

  /// Throws TooLargeForEnumeration when |K| exceeds `max_cells` or 64.
  CollapseSearch(const SimplicialComplex& ambient, std::size_t max_cells,
                 const MorseFunction* guide = nullptr);

  const SimplicialComplex& ambient() const { return ambient_; }
  Mask full() const { return full_; }
  Mask mask_of(const SimplicialComplex& sub) const;
  Mask mask_of_cell(const Simplex& s) const { return Mask{1} << ambient_.require_index(s); }
  SimplicialComplex complex_of(Mask m) const;
  CellSet cells_of(Mask m) const;

  /// Free pairs of m whose cells lie outside `keep`.
  std::vector<Step> free_pairs(Mask m, Mask keep = 0) const;

  /// Steps collapsing `from` onto `to`, or nullopt. `to` must be a subcomplex
  /// contained in `from`.
  std::optional<std::vector<Step>> path_to(Mask from, Mask to);
  /// Steps collapsing `from` onto a single vertex, or nullopt.
  std::optional<std::vector<Step>> path_to_vertex(Mask from);
  bool collapsible(Mask m);
  /// All masks reachable from `from` by elementary collapses, `from` included.
  std::vector<Mask> reachable(Mask from);

  int euler(Mask m) const;

 private:
  bool search(Mask m, Mask to, std::vector<Step>& steps, std::unordered_set<Mask>& dead);
  bool search_vertex(Mask m, std::vector<Step>& steps);

  SimplicialComplex ambient_;
  Mask full_ = 0;
  std::vector<Mask> coface_mask_;
  std::vector<double> priority_;
  Mask odd_dim_ = 0;
  std::unordered_set<Mask> not_collapsible_;
  std::unordered_set<Mask> collapsible_;
};

}  // namespace dmt::detail
