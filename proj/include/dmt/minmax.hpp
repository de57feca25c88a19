#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dmt/flow.hpp"
#include "dmt/morse.hpp"

namespace dmt {

using SetMap = std::function<CellSet(const CellSet&)>;

struct NamedMap {
  std::string name;
  SetMap map;
};

/// Deformation maps H and a family S of cell sets for an injective f.
struct MinMaxInstance {
  MorseFunction f;
  std::vector<NamedMap> maps;
  std::vector<CellSet> family;
};

NamedMap identity_map();
/// S -> support union of phi over S.
NamedMap phi_map(const FlowOperator& flow);
/// S -> face closure of the above, as a cell set.
NamedMap phi_bar_map(const FlowOperator& flow);

struct MinMaxValue {
  double value = 0;
  CellSet witness;
};

/// min over S of max over S of f, with the first achieving member. Throws
/// EmptyFamily for an empty family or an empty member, TheoremViolation when
/// the value is not critical.
MinMaxValue minmax_value(const MinMaxInstance& inst);

struct ClosureFailure {
  std::string map;
  CellSet member;
  CellSet image;
};

struct MinMaxReport {
  double epsilon = 0;
  std::vector<double> regular_values;
  std::vector<ClosureFailure> closure_failures;
  std::vector<double> deformation_failures;

  bool ok() const { return closure_failures.empty() && deformation_failures.empty(); }
  /// Throws ClosureViolated, else DeformationViolated.
  void require() const;
};

/// Exhaustive check of both conditions: h(S) in the family for every h and S,
/// and for each regular value a in the image of f some h with
/// h(L^{a+eps}) contained in L^{a-eps}, eps being half the smallest gap
/// between distinct values. Throws PreconditionViolated if f is not injective.
MinMaxReport check_minmax_data(const MinMaxInstance& inst);

/// Edge path from `start` given by its edges in order.
struct EdgePath {
  Simplex start;
  Simplex target;  // the minimum whose basin the path ends in
  std::vector<Simplex> edges;

  std::vector<Simplex> vertices() const;
  Simplex end() const { return vertices().back(); }
  /// {start} together with the edges.
  CellSet cells() const;
  bool operator==(const EdgePath&) const = default;
};

/// Length first, then edges lexicographically.
bool path_less(const EdgePath& a, const EdgePath& b);

struct PathOptions {
  /// When false, vertices may repeat but edges may not.
  bool vertex_simple = true;
  /// Once the path enters the basin, edge values must strictly decrease.
  bool monotone_tail = true;
};

/// Empty string when `path` satisfies every path condition, else the reason.
std::string path_violation(const MorseFunction& f, const GradientField& field, const EdgePath& path,
                           PathOptions options = {});

/// All edge paths from v1 ending in the basin of v0, sorted by path_less.
/// Throws NotLocalMinima, PreconditionViolated when f(v0) >= f(v1),
/// NoPathExists.
std::vector<EdgePath> enumerate_paths(const MorseFunction& f, const GradientField& field,
                                      const Simplex& v1, const Simplex& v0,
                                      PathOptions options = {});

/// Phi applied to the cells of `path`, read back as a path and re-validated.
/// Throws ReassemblyFailure when the image is not a valid path.
EdgePath phi_on_path(const FlowOperator& flow, const EdgePath& path, PathOptions options = {});

struct MountainPass {
  double value = 0;
  Simplex edge;
  EdgePath witness;
  std::vector<EdgePath> paths;
  MinMaxInstance instance;
};

/// Min-max over the edge-path family with H = {Phi}. Non-injective f is
/// replaced by make_injective(f) first. Throws as enumerate_paths, and
/// TheoremViolation if the value is not a critical edge above f(v1).
MountainPass mountain_pass(const MorseFunction& f, const Simplex& v1, const Simplex& v0,
                           PathOptions options = {});

}  // namespace dmt
