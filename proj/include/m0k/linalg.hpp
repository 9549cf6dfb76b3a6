#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace m0k {

/// Sparse integer row: (column, value) pairs, strictly ascending columns,
/// no zero values.
using SparseRow = std::vector<std::pair<int, mpz_class>>;

/// Row-style Hermite normal form of an integer row lattice, built by
/// inserting rows one at a time.  Pivots are the leading (lowest) columns;
/// leading entries are positive and entries above a pivot are reduced into
/// [0, pivot).  The basis is canonical for the lattice, independent of
/// insertion order.
class HermiteForm {
 public:
  explicit HermiteForm(int ncols);

  /// Builds the canonical form from a batch of rows.
  static HermiteForm of(int ncols, const std::vector<SparseRow>& rows);

  void insert(const SparseRow& row);
  /// Back-reduces entries at pivot columns; insert() may be called again
  /// afterwards.  of() and the accessors below leave the form canonical.
  void canonicalize();

  int ncols() const { return ncols_; }
  int rank() const;
  /// Pivot rows sorted by pivot column; canonical after canonicalize().
  std::vector<SparseRow> basis() const;
  const std::vector<int>& pivot_row_of_col() const { return pivot_of_col_; }
  const SparseRow& row(int idx) const { return rows_[idx]; }

  /// Fully reduces a vector modulo the lattice: subtracts floor-quotient
  /// multiples of pivot rows, leaving entries at pivot columns in
  /// [0, pivot).  v is indexed by column.
  void reduce(std::vector<mpz_class>& v) const;

  /// Elementary divisors > 1 of the cokernel Z^ncols / lattice, ascending.
  /// Requires a canonical form.
  std::vector<mpz_class> torsion() const;

 private:
  int ncols_;
  std::vector<SparseRow> rows_;         // one per pivot
  std::vector<int> pivot_of_col_;       // column -> row index or -1
  bool canonical_ = true;
};

/// Diagonal of the Smith normal form (nonnegative, divisibility-chained,
/// padded with zeros up to min(rows, cols)).  Dense; meant for small
/// matrices and test oracles.
std::vector<mpz_class> smith_diagonal(std::vector<std::vector<mpz_class>> m);

}  // namespace m0k
