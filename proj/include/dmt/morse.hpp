#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dmt/complex.hpp"
#include "dmt/error.hpp"

namespace dmt {

/// A discrete Morse function: a finite real value on every cell of a complex
/// such that every cell has at most one codimension-1 coface with smaller or
/// equal value (U) and at most one codimension-1 face with larger or equal
/// value (L). Only `validate` and the generators below create one.
class MorseFunction {
 public:
  const SimplicialComplex& complex() const noexcept { return complex_; }
  std::span<const double> values() const noexcept { return values_; }
  double value(SimplicialComplex::Index i) const { return values_[i]; }
  double operator()(const Simplex& s) const { return values_[complex_.require_index(s)]; }

  bool is_injective() const;
  double min_value() const;
  double max_value() const;
  /// Distinct values in increasing order.
  std::vector<double> distinct_values() const;

 private:
  friend MorseFunction validate(const SimplicialComplex&, std::vector<double>);
  MorseFunction(SimplicialComplex complex, std::vector<double> values)
      : complex_(std::move(complex)), values_(std::move(values)) {}

  SimplicialComplex complex_;
  std::vector<double> values_;
};

struct MorseViolation {
  Simplex simplex;
  std::size_t upper = 0;
  std::size_t lower = 0;
};

/// Thrown by `validate` with every offending simplex.
class MorseConditionError : public Error {
 public:
  explicit MorseConditionError(std::vector<MorseViolation> violations);
  const std::vector<MorseViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<MorseViolation> violations_;
};

/// Checks the Morse conditions. `values` is indexed like complex.cells().
/// Throws MorseConditionError, MissingValue (wrong length or non-finite).
MorseFunction validate(const SimplicialComplex& complex, std::vector<double> values);
/// Throws MissingValue naming the first cell without a value.
MorseFunction validate(const SimplicialComplex& complex, const std::map<Simplex, double>& values);

/// U(a): codimension-1 cofaces with value <= f(a). L(a): codimension-1 faces
/// with value >= f(a). Both take raw values so they can inspect candidates
/// that are not yet Morse.
CellSet upper_set(const MorseFunction& f, const Simplex& s);
CellSet lower_set(const MorseFunction& f, const Simplex& s);

CellSet critical_cells(const MorseFunction& f);
/// Values at critical cells, ascending, duplicates retained.
std::vector<double> critical_values(const MorseFunction& f);
bool is_critical_value(const MorseFunction& f, double value);

/// Acyclic matching of codimension-1 pairs (lower, upper) on the Hasse
/// diagram. `from_pairs` accepts any matching, cyclic or not, so that
/// acyclicity can be tested separately.
class GradientField {
 public:
  using Index = SimplicialComplex::Index;
  static constexpr Index npos = SimplicialComplex::npos;

  /// Throws PreconditionViolated when a cell is used twice or a pair is not a
  /// codimension-1 face relation, SimplexNotInComplex for foreign cells.
  static GradientField from_pairs(const SimplicialComplex& complex,
                                  const std::vector<std::pair<Simplex, Simplex>>& pairs);

  const SimplicialComplex& complex() const noexcept { return complex_; }
  /// Sorted by lower cell.
  std::vector<std::pair<Simplex, Simplex>> pairs() const;
  CellSet critical_cells() const;

  bool is_critical(Index i) const { return partner_[i] == npos; }
  Index partner(Index i) const { return partner_[i]; }
  /// The coface paired with i, if i is the lower member of a pair.
  Index upper_partner(Index i) const;
  /// The face paired with i, if i is the upper member of a pair.
  Index lower_partner(Index i) const;

  std::optional<Simplex> partner(const Simplex& s) const;

 private:
  GradientField(SimplicialComplex complex, std::vector<Index> partner)
      : complex_(std::move(complex)), partner_(std::move(partner)) {}
  SimplicialComplex complex_;
  std::vector<Index> partner_;
};

/// Pairs {(n, a) : L(a) = {n}} together with {(a, b) : U(a) = {b}}. Throws
/// AcyclicityBug if the result has a closed V-path, which cannot happen for a
/// validated function.
GradientField gradient_field(const MorseFunction& f);

/// a0 < b0 > a1 < b1 > ... > a_{r+1}; `cells` alternates p- and (p+1)-cells
/// and starts and ends with a p-cell.
struct VPath {
  std::vector<Simplex> cells;

  std::size_t pair_count() const { return cells.size() / 2; }
  const Simplex& start() const { return cells.front(); }
  const Simplex& end() const { return cells.back(); }
  bool is_trivial() const { return cells.size() == 1; }
  bool is_closed() const { return cells.size() > 1 && cells.front() == cells.back(); }
};

/// All maximal V-paths starting at `start` (dimension p). A path stops at a
/// cell that is not the lower member of a pair, or where it closes up.
std::vector<VPath> v_paths_from(const GradientField& field, const Simplex& start, int p);
/// Cycle search on the Hasse digraph with matched edges reversed.
bool has_closed_path(const GradientField& field);

/// Same strict order on every codimension-1 face relation. Throws
/// ComplexMismatch.
bool are_equivalent(const MorseFunction& f, const MorseFunction& g);

/// Injective function equivalent to f with the same critical cells and the
/// same gradient field. Returns f itself when it is already injective; ties
/// are split upward by small offsets that stay below the next distinct value.
MorseFunction make_injective(const MorseFunction& f);

struct RandomMorseOptions {
  /// Chance that a candidate pair is offered to the matching at all. Lower
  /// values leave more critical cells.
  double pair_probability = 0.8;
};

/// Random acyclic matching (candidate pairs in shuffled order, rejected when
/// they close a V-path) followed by values 0, 1, 2, ... along a random linear
/// extension of the modified Hasse digraph. Deterministic in `seed`; the
/// result is always valid and injective.
MorseFunction random_morse(const SimplicialComplex& complex, std::uint64_t seed,
                           RandomMorseOptions options = {});

/// Random complex on 1..max_vertices vertices: the vertices plus up to six
/// random simplices of dimension at most max_dim. Deterministic in `seed`.
SimplicialComplex random_complex(std::uint64_t seed, int max_vertices = 8, int max_dim = 3);

/// Values 0..n-1 along a linear extension consistent with an acyclic field.
/// Throws AcyclicityBug when the field has a closed V-path.
MorseFunction morse_function_from_field(const GradientField& field);

}  // namespace dmt
