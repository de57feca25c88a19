#include "dmt/flow.hpp"

#include <algorithm>

namespace dmt {

namespace {
using Index = SimplicialComplex::Index;
}

FlowOperator::FlowOperator(const MorseFunction& f) : FlowOperator(gradient_field(f), f) {}

FlowOperator::FlowOperator(GradientField field, MorseFunction f)
    : field_(std::move(field)), f_(std::move(f)) {
  if (!(field_.complex() == f_.complex())) {
    throw Error(ErrorKind::ComplexMismatch, "gradient field and function live on different complexes");
  }
  build_matrices();
}

void FlowOperator::build_matrices() {
  const auto& k = complex();
  const int top = k.dimension();
  v_.clear();
  phi_.clear();
  for (int p = 0; p <= top; ++p) {
    IntSparseMatrix v(static_cast<Eigen::Index>(k.count_of_dim(p + 1)),
                      static_cast<Eigen::Index>(k.count_of_dim(p)));
    std::vector<Eigen::Triplet<Coefficient>> entries;
    const auto base = k.dim_offset(p);
    const auto up_base = k.dim_offset(p + 1);
    for (Index j = 0; j < k.count_of_dim(p); ++j) {
      const auto up = field_.upper_partner(base + j);
      if (up == GradientField::npos) continue;
      entries.emplace_back(static_cast<Eigen::Index>(up - up_base), static_cast<Eigen::Index>(j),
                           -k.cell(base + j).incidence_in(k.cell(up)));
    }
    v.setFromTriplets(entries.begin(), entries.end());
    v_.push_back(std::move(v));
  }
  for (int p = 0; p <= top; ++p) {
    const auto n = static_cast<Eigen::Index>(k.count_of_dim(p));
    IntSparseMatrix id(n, n);
    id.setIdentity();
    IntSparseMatrix phi = id;
    if (p < top) phi += IntSparseMatrix(boundary_matrix(k, p + 1) * v_[static_cast<std::size_t>(p)]);
    if (p > 0) phi += IntSparseMatrix(v_[static_cast<std::size_t>(p - 1)] * boundary_matrix(k, p));
    phi.prune(Coefficient{0});
    phi_.push_back(std::move(phi));
  }
}

Chain apply_V(const FlowOperator& flow, const Chain& c) {
  const auto& k = flow.complex();
  Chain out(c.dim() + 1);
  for (const auto& [s, coeff] : c.terms()) {
    const auto up = flow.field().upper_partner(k.require_index(s));
    if (up == GradientField::npos) continue;
    const auto& tau = k.cell(up);
    out.add(tau, checked_mul(coeff, -s.incidence_in(tau)));
  }
  return out;
}

Chain apply_flow(const FlowOperator& flow, const Chain& c) {
  Chain out = c;
  out += boundary(apply_V(flow, c));
  if (c.dim() > 0) out += apply_V(flow, boundary(c));
  return out;
}

IntSparseMatrix flow_matrix(const FlowOperator& flow, int p) {
  if (p < 0 || p > flow.complex().dimension()) {
    throw Error(ErrorKind::PreconditionViolated, "no cells of dimension " + std::to_string(p));
  }
  return flow.phi_matrix(p).transpose();
}

void FlowMatrixReport::require() const {
  if (ok()) return;
  std::string msg = "flow matrix in dimension " + std::to_string(dim) + ":";
  for (const auto& v : violations) msg += "\n  " + v;
  throw Error(ErrorKind::PropertyViolation, msg);
}

FlowMatrixReport check_flow_matrix(const FlowOperator& flow, int p) {
  FlowMatrixReport report;
  report.dim = p;
  const auto& k = flow.complex();
  const auto& f = flow.function();
  const auto cells = k.cells_of_dim(p);
  const auto base = k.dim_offset(p);
  const IntSparseMatrix a = flow_matrix(flow, p);

  Eigen::Matrix<Coefficient, Eigen::Dynamic, Eigen::Dynamic> dense = a;
  for (Index i = 0; i < cells.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const auto diag = dense(row, row);
    const bool critical = flow.field().is_critical(base + i);
    if (diag != 0 && diag != 1) {
      report.violations.push_back("diagonal entry " + std::to_string(diag) + " at " + cells[i].to_string());
    } else if ((diag == 1) != critical) {
      report.violations.push_back("diagonal entry " + std::to_string(diag) + " at " +
                                  (critical ? "critical " : "regular ") + cells[i].to_string());
    }
    for (Index j = 0; j < cells.size(); ++j) {
      const auto col = static_cast<Eigen::Index>(j);
      if (i != j && dense(row, col) != 0 && !(f.value(base + j) < f.value(base + i))) {
        report.violations.push_back("entry " + cells[i].to_string() + " -> " + cells[j].to_string() +
                                    " does not decrease f");
      }
    }
    // The matrix row must agree with the functional route.
    const auto image = apply_flow(flow, Chain::of(cells[i]));
    for (Index j = 0; j < cells.size(); ++j) {
      if (dense(row, static_cast<Eigen::Index>(j)) != image.coefficient(cells[j])) {
        report.violations.push_back("matrix and chain routes disagree on " + cells[i].to_string());
        break;
      }
    }
  }
  return report;
}

CellSet big_phi(const FlowOperator& flow, const CellSet& cells) {
  CellSet out;
  for (const auto& s : cells) {
    flow.complex().require_index(s);
    auto image = apply_flow(flow, Chain::of(s));
    for (const auto& [t, c] : image.terms()) out.insert(t);
  }
  return out;
}

SimplicialComplex big_phi_bar(const FlowOperator& flow, const CellSet& cells) {
  return SimplicialComplex::closure(big_phi(flow, cells));
}

CollapseSequence verify_phibar_collapse(const FlowOperator& flow, double a) {
  const auto& f = flow.function();
  const auto& k = f.complex();
  const auto level = level_subcomplex(f, a).level;
  const auto image = big_phi_bar(flow, level.cell_set());
  if (!image.is_subcomplex_of(level)) {
    throw Error(ErrorKind::ProofFailure, "flow image leaves the level subcomplex");
  }
  std::vector<std::pair<Index, Index>> pairs;
  for (const auto& s : level.cells()) {
    if (image.contains(s)) continue;
    const auto i = k.require_index(s);
    const auto j = flow.field().partner(i);
    if (j == GradientField::npos || !level.contains(k.cell(j)) || image.contains(k.cell(j))) {
      throw Error(ErrorKind::ProofFailure, s.to_string() + " is removed without its partner");
    }
    if (j > i) pairs.emplace_back(i, j);
  }
  std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    const double vx = std::max(f.value(x.first), f.value(x.second));
    const double vy = std::max(f.value(y.first), f.value(y.second));
    if (vx != vy) return vx > vy;
    return x.second > y.second;
  });
  CollapseSequence out{level, image, {}};
  auto current = level;
  for (const auto& [i, j] : pairs) {
    if (!is_free_face(current, k.cell(i), k.cell(j))) {
      throw Error(ErrorKind::ProofFailure,
                  k.cell(i).to_string() + " is not free in " + k.cell(j).to_string());
    }
    current = current.without({k.cell(i), k.cell(j)});
    out.steps.emplace_back(k.cell(i), k.cell(j));
  }
  if (!(current == image)) throw Error(ErrorKind::ProofFailure, "collapse did not reach the flow image");
  return out;
}

CollapseSequence verify_phibar_collapse(const MorseFunction& f, double a) {
  return verify_phibar_collapse(FlowOperator(f), a);
}

}  // namespace dmt
