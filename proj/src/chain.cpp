#include "dmt/chain.hpp"

#include <Eigen/Dense>

#include "dmt/error.hpp"

namespace dmt {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer chain overflow");
  return out;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::Overflow, "integer chain overflow");
  return out;
}

Chain::Chain(int dim, std::initializer_list<std::pair<const Simplex, Coefficient>> terms)
    : dim_(dim) {
  for (const auto& [s, c] : terms) add(s, c);
}

Coefficient Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

CellSet Chain::support() const {
  CellSet out;
  for (const auto& [s, c] : terms_) out.insert(s);
  return out;
}

Chain& Chain::add(const Simplex& s, Coefficient c) {
  if (s.dim() != dim_) {
    throw Error(ErrorKind::PreconditionViolated,
                "cell " + s.to_string() + " added to a " + std::to_string(dim_) + "-chain");
  }
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(s, 0);
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
  return *this;
}

Chain& Chain::operator+=(const Chain& other) {
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  for (const auto& [s, c] : other.terms_) add(s, checked_mul(c, -1));
  return *this;
}

Chain& Chain::operator*=(Coefficient k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c = checked_mul(c, k);
  return *this;
}

Coefficient inner(const Chain& a, const Chain& b) {
  if (a.dim() != b.dim()) return 0;
  Coefficient sum = 0;
  for (const auto& [s, c] : a.terms()) sum = checked_add(sum, checked_mul(c, b.coefficient(s)));
  return sum;
}

Chain boundary(const Chain& c) {
  Chain out(c.dim() - 1);
  if (c.dim() <= 0) return out;
  for (const auto& [s, coeff] : c.terms()) {
    for (std::size_t i = 0; i < s.vertices().size(); ++i) {
      out.add(s.face(i), i % 2 == 0 ? coeff : checked_mul(coeff, -1));
    }
  }
  return out;
}

IntSparseMatrix boundary_matrix(const SimplicialComplex& complex, int p) {
  const auto rows = static_cast<Eigen::Index>(complex.count_of_dim(p - 1));
  const auto cols = static_cast<Eigen::Index>(complex.count_of_dim(p));
  IntSparseMatrix m(rows, cols);
  if (p <= 0 || cols == 0) return m;
  std::vector<Eigen::Triplet<Coefficient>> entries;
  const auto row_base = complex.dim_offset(p - 1);
  const auto col_base = complex.dim_offset(p);
  for (Eigen::Index j = 0; j < cols; ++j) {
    const auto& s = complex.cell(col_base + j);
    for (auto face : complex.faces_of(col_base + j)) {
      entries.emplace_back(static_cast<Eigen::Index>(face - row_base), j,
                           complex.cell(face).incidence_in(s));
    }
  }
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

Eigen::Matrix<Coefficient, Eigen::Dynamic, 1> to_vector(const SimplicialComplex& complex,
                                                        const Chain& c) {
  Eigen::Matrix<Coefficient, Eigen::Dynamic, 1> v =
      Eigen::Matrix<Coefficient, Eigen::Dynamic, 1>::Zero(
          static_cast<Eigen::Index>(complex.count_of_dim(c.dim())));
  const auto base = complex.dim_offset(c.dim());
  for (const auto& [s, coeff] : c.terms()) {
    v(static_cast<Eigen::Index>(complex.require_index(s) - base)) = coeff;
  }
  return v;
}

Chain from_vector(const SimplicialComplex& complex, int p,
                  const Eigen::Matrix<Coefficient, Eigen::Dynamic, 1>& v) {
  Chain out(p);
  const auto cells = complex.cells_of_dim(p);
  for (Eigen::Index i = 0; i < v.size(); ++i) out.add(cells[static_cast<std::size_t>(i)], v(i));
  return out;
}

std::size_t rank_mod2(const IntSparseMatrix& m) {
  using Bits = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
  Bits a = Bits::Zero(m.rows(), m.cols());
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    for (IntSparseMatrix::InnerIterator it(m, k); it; ++it) {
      a(it.row(), it.col()) = static_cast<std::uint8_t>(((it.value() % 2) + 2) % 2);
    }
  }
  std::size_t rank = 0;
  for (Eigen::Index col = 0; col < a.cols() && static_cast<Eigen::Index>(rank) < a.rows(); ++col) {
    const auto r0 = static_cast<Eigen::Index>(rank);
    Eigen::Index pivot = -1;
    for (Eigen::Index r = r0; r < a.rows(); ++r) {
      if (a(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(r0));
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != r0 && a(r, col)) {
        for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) ^= a(r0, c);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<int> betti_numbers_mod2(const SimplicialComplex& complex) {
  const int top = complex.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[p] = rank d_p
  for (int p = 1; p <= top; ++p) ranks[p] = rank_mod2(boundary_matrix(complex, p));
  std::vector<int> betti;
  for (int p = 0; p <= top; ++p) {
    betti.push_back(static_cast<int>(complex.count_of_dim(p) - ranks[p] - ranks[p + 1]));
  }
  return betti;
}

}  // namespace dmt
