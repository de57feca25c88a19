#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/morse.hpp"

namespace dmt {

/// Sublevel set L^a = {s : f(s) <= a} and its closure K^a.
struct FiltrationLevel {
  double threshold = 0;
  CellSet sublevel;
  SimplicialComplex level;
};

FiltrationLevel level_subcomplex(const MorseFunction& f, double a);

/// (free face, its unique coface).
using CollapsePair = std::pair<Simplex, Simplex>;

struct CollapseSequence {
  SimplicialComplex start;
  SimplicialComplex end;
  std::vector<CollapsePair> steps;
};

/// sigma is a codimension-1 face of tau and tau is its only coface in K.
bool is_free_face(const SimplicialComplex& complex, const Simplex& sigma, const Simplex& tau);

/// K \ {sigma, tau}. Throws NotFreeFace.
SimplicialComplex elementary_collapse(const SimplicialComplex& complex, const Simplex& sigma,
                                      const Simplex& tau);

/// Applies the steps to `start` and returns the result. Throws NotFreeFace on
/// an invalid step.
SimplicialComplex replay(const CollapseSequence& sequence);
/// True iff every step is valid and the result equals `end`.
bool replays(const CollapseSequence& sequence);

/// Largest ambient complex accepted by the exact searches (cells are tracked
/// in a 64-bit mask).
inline constexpr std::size_t kMaxSearchCells = 64;

struct CollapseSearchOptions {
  std::size_t max_cells = kMaxSearchCells;
  /// When set, free pairs with larger values are tried first.
  const MorseFunction* guide = nullptr;
};

/// Exact decision of K collapsing onto L by depth-first search with
/// backtracking over free-face choices. std::nullopt means not collapsible.
/// Throws PreconditionViolated if L is not a subcomplex of K and
/// TooLargeForEnumeration above the search bound.
std::optional<CollapseSequence> collapses_to(const SimplicialComplex& complex,
                                             const SimplicialComplex& target,
                                             CollapseSearchOptions options = {});

/// A collapse of K onto one of its vertices, if any exists.
std::optional<CollapseSequence> collapse_to_vertex(const SimplicialComplex& complex,
                                                   CollapseSearchOptions options = {});
bool is_collapsible(const SimplicialComplex& complex, CollapseSearchOptions options = {});

/// Every L' with L collapsing onto L' (L itself included), sorted.
std::vector<SimplicialComplex> collapse_reachable(const SimplicialComplex& complex,
                                                  CollapseSearchOptions options = {});

/// K^b collapsing onto K^a by removing the gradient pairs of K^b \ K^a in
/// decreasing order of value. Throws PreconditionViolated (a >= b),
/// CriticalValueInWindow, ProofFailure.
CollapseSequence verify_dmt_a(const MorseFunction& f, double a, double b);

/// Betti numbers (mod 2) of K^a and K^b around a single critical cell.
struct BettiDelta {
  std::vector<int> before;
  std::vector<int> after;
  int cell_dim = 0;
  /// Degree whose Betti number changed and by how much: (p, +1) or (p-1, -1).
  int degree = 0;
  int change = 0;
};

/// Checks that passing the critical cell `sigma` in (a, b] changes the Betti
/// numbers exactly like attaching a dim(sigma)-cell. Throws
/// PreconditionViolated, SignatureMismatch.
BettiDelta verify_dmt_b(const MorseFunction& f, const Simplex& sigma, double a, double b);

/// Gradient basin of a critical vertex: the vertices whose dimension-0
/// V-path ends at it together with the pairing edges along those paths.
struct Basin {
  Simplex minimum;
  SimplicialComplex cells;
  /// cells collapsing onto {minimum}.
  CollapseSequence witness;

  bool contains_vertex(Vertex v) const { return cells.contains(Simplex{v}); }
};

/// Throws NotACriticalVertex.
Basin basin(const GradientField& field, const MorseFunction& f, const Simplex& minimum);

/// Terminal vertex of the dimension-0 V-path starting at `vertex`.
Simplex flow_terminal(const GradientField& field, const Simplex& vertex);

/// Comparison of a gradient basin against the inclusion-maximal subcomplexes
/// of K that collapse onto the same vertex, found by brute force.
struct BasinComparison {
  std::vector<SimplicialComplex> maximal;
  /// Some maximal collapsing subcomplex contains the basin.
  bool contained = false;
  /// The basin is itself one of the maximal ones.
  bool basin_is_maximal = false;
};

BasinComparison compare_with_maximal_collapsing(const Basin& basin,
                                                const SimplicialComplex& complex,
                                                std::size_t bound = kDefaultEnumerationBound);

}  // namespace dmt
