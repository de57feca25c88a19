#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/SparseCore>

#include "dmt/complex.hpp"

namespace dmt {

using Coefficient = std::int64_t;
using IntSparseMatrix = Eigen::SparseMatrix<Coefficient>;

/// Overflow-checked integer arithmetic; throws Overflow instead of wrapping.
Coefficient checked_add(Coefficient a, Coefficient b);
Coefficient checked_mul(Coefficient a, Coefficient b);

/// Integer p-chain on canonically oriented simplices. Zero coefficients are
/// never stored, so two chains are equal iff their maps are equal.
class Chain {
 public:
  using Terms = std::map<Simplex, Coefficient>;

  explicit Chain(int dim = 0) : dim_(dim) {}
  Chain(int dim, std::initializer_list<std::pair<const Simplex, Coefficient>> terms);
  /// Unit chain 1*s.
  static Chain of(const Simplex& s) { return Chain(s.dim(), {{s, 1}}); }

  int dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(const Simplex& s) const;
  CellSet support() const;

  /// Adds c*s. Throws PreconditionViolated on a dimension mismatch.
  Chain& add(const Simplex& s, Coefficient c);
  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain& operator*=(Coefficient k);

  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Coefficient k, Chain a) { return a *= k; }
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int dim_;
  Terms terms_;
};

/// <a, b> with cells orthonormal.
Coefficient inner(const Chain& a, const Chain& b);

/// Simplicial boundary with alternating signs. A 0-chain maps to the zero
/// (-1)-chain.
Chain boundary(const Chain& c);

/// Matrix of d_p : C_p -> C_{p-1}; rows index (p-1)-cells and columns
/// p-cells, both in the complex's sorted order.
IntSparseMatrix boundary_matrix(const SimplicialComplex& complex, int p);

/// Chain <-> coefficient vector over the p-cells of `complex`.
Eigen::Matrix<Coefficient, Eigen::Dynamic, 1> to_vector(const SimplicialComplex& complex,
                                                        const Chain& c);
Chain from_vector(const SimplicialComplex& complex, int p,
                  const Eigen::Matrix<Coefficient, Eigen::Dynamic, 1>& v);

/// Rank over the two-element field.
std::size_t rank_mod2(const IntSparseMatrix& m);

/// Betti numbers over the two-element field; length dim K + 1 (empty for the
/// empty complex).
std::vector<int> betti_numbers_mod2(const SimplicialComplex& complex);

}  // namespace dmt
