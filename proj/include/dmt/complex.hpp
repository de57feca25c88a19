#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "dmt/simplex.hpp"

namespace dmt {

/// Default bound on |K| for exhaustive subcomplex enumeration.
inline constexpr std::size_t kDefaultEnumerationBound = 14;

/// Finite face-closed set of simplices with codimension-1 incidence indices.
///
/// Cells are stored sorted by (dimension, vertex tuple) and addressed by their
/// position in that order. The object is immutable and copies share storage.
/// The empty complex is a valid value.
class SimplicialComplex {
 public:
  using Index = std::size_t;
  static constexpr Index npos = static_cast<Index>(-1);

  SimplicialComplex();

  /// Face closure of an arbitrary set of simplices (possibly empty).
  static SimplicialComplex closure(const CellSet& cells);
  static SimplicialComplex closure(std::span<const Simplex> cells);

  std::size_t size() const noexcept { return data_->cells.size(); }
  bool empty() const noexcept { return size() == 0; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(data_->dim_begin.size()) - 2; }

  std::span<const Simplex> cells() const noexcept { return data_->cells; }
  const Simplex& cell(Index i) const { return data_->cells[i]; }
  /// Cells of dimension p, contiguous and sorted.
  std::span<const Simplex> cells_of_dim(int p) const;
  std::size_t count_of_dim(int p) const { return cells_of_dim(p).size(); }
  /// First global index of dimension p.
  Index dim_offset(int p) const;

  Index index_of(const Simplex& s) const noexcept;
  /// Throws SimplexNotInComplex.
  Index require_index(const Simplex& s) const;
  bool contains(const Simplex& s) const noexcept { return index_of(s) != npos; }

  std::span<const Index> faces_of(Index i) const { return data_->faces[i]; }
  std::span<const Index> cofaces_of(Index i) const { return data_->cofaces[i]; }
  CellSet faces_of(const Simplex& s) const;
  CellSet cofaces_of(const Simplex& s) const;

  std::vector<Simplex> vertices() const;
  CellSet cell_set() const { return CellSet(cells().begin(), cells().end()); }

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Remove cells; the caller guarantees the result is face-closed.
  SimplicialComplex without(const CellSet& removed) const;

  /// Number of connected components (0 for the empty complex).
  std::size_t component_count() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  struct Data {
    std::vector<Simplex> cells;
    std::vector<std::vector<Index>> faces;
    std::vector<std::vector<Index>> cofaces;
    std::vector<Index> dim_begin;  // dim_begin[p]..dim_begin[p+1] are p-cells
  };

  explicit SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static SimplicialComplex from_sorted_closed(std::vector<Simplex> cells);

  std::shared_ptr<const Data> data_;
};

/// Face closure of the input with incidence indices. Throws EmptyInput.
SimplicialComplex build_complex(std::span<const Simplex> maximal_or_all);
SimplicialComplex build_complex(std::initializer_list<Simplex> maximal_or_all);

int euler_characteristic(const SimplicialComplex& complex);

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& complex);
/// True when every face of every member of `cells` is a member.
bool is_face_closed(const CellSet& cells);

/// Visits every face-closed subset of `complex` (the empty one included) in a
/// deterministic order. Throws TooLargeForEnumeration when |K| > bound.
void for_each_subcomplex(const SimplicialComplex& complex,
                         const std::function<void(const SimplicialComplex&)>& visit,
                         std::size_t bound = kDefaultEnumerationBound);
std::vector<SimplicialComplex> subcomplexes_of(const SimplicialComplex& complex,
                                               std::size_t bound = kDefaultEnumerationBound);

}  // namespace dmt
