#pragma once

#include <string>
#include <vector>

#include "dmt/chain.hpp"
#include "dmt/collapse.hpp"
#include "dmt/morse.hpp"

namespace dmt {

/// The chain-level gradient V and the discrete flow phi = Id + dV + Vd.
///
/// V(s) = -<d t, s> t when (s, t) is a gradient pair and 0 otherwise. Both a
/// functional form (apply_V, apply_flow on Chain, overflow-checked) and a
/// matrix form per dimension are kept; the matrices use the column
/// convention, so column j of phi_matrix(p) is phi of the j-th p-cell.
class FlowOperator {
 public:
  explicit FlowOperator(const MorseFunction& f);
  FlowOperator(GradientField field, MorseFunction f);

  const GradientField& field() const noexcept { return field_; }
  const MorseFunction& function() const noexcept { return f_; }
  const SimplicialComplex& complex() const noexcept { return f_.complex(); }

  /// V restricted to C_p -> C_{p+1}.
  const IntSparseMatrix& v_matrix(int p) const { return v_.at(static_cast<std::size_t>(p)); }
  /// phi restricted to C_p -> C_p.
  const IntSparseMatrix& phi_matrix(int p) const { return phi_.at(static_cast<std::size_t>(p)); }

 private:
  void build_matrices();

  GradientField field_;
  MorseFunction f_;
  std::vector<IntSparseMatrix> v_;
  std::vector<IntSparseMatrix> phi_;
};

Chain apply_V(const FlowOperator& flow, const Chain& c);
Chain apply_flow(const FlowOperator& flow, const Chain& c);

/// a_ij with phi(s_i) = sum_j a_ij s_j over the p-cells in sorted order
/// (rows are sources).
IntSparseMatrix flow_matrix(const FlowOperator& flow, int p);

struct FlowMatrixReport {
  int dim = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  /// Throws PropertyViolation listing the violations.
  void require() const;
};

/// Diagonal entries are 0 or 1, and 1 exactly on critical cells; a nonzero
/// off-diagonal a_ij forces f(s_j) < f(s_i). Also cross-checks the matrix
/// against apply_flow.
FlowMatrixReport check_flow_matrix(const FlowOperator& flow, int p);

/// Union of the supports of phi(s) over s in `cells`.
CellSet big_phi(const FlowOperator& flow, const CellSet& cells);
/// Face closure of big_phi.
SimplicialComplex big_phi_bar(const FlowOperator& flow, const CellSet& cells);

/// K^a collapsing onto big_phi_bar(K^a) by removing the gradient pairs of the
/// difference in decreasing order of value. Throws ProofFailure.
CollapseSequence verify_phibar_collapse(const FlowOperator& flow, double a);
CollapseSequence verify_phibar_collapse(const MorseFunction& f, double a);

}  // namespace dmt
