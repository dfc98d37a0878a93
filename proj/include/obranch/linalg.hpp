// Exact linear algebra over Q: reduced row echelon forms, kernels, images, inverses and a sparse echelon builder.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "obranch/rational.hpp"

namespace obranch {

/// In-place reduced row echelon form. Returns the pivot columns in increasing order.
std::vector<Eigen::Index> rref(MatQ& m);

Eigen::Index rank(MatQ m);

/// Kernel basis as columns. Column k equals 1 at free column free[k] and 0 at the other free columns.
struct Kernel {
  MatQ basis;
  std::vector<Eigen::Index> free;
};
Kernel kernel(const MatQ& m);

/// Basis for the column space, taken from the pivot columns of m.
MatQ column_space(const MatQ& m);

/// Throws std::domain_error on singular input.
MatQ inverse(const MatQ& m);

int bit_size(const Rational& x);

/// Sparse row as sorted (column, value) pairs.
using SparseRow = std::vector<std::pair<Eigen::Index, Rational>>;

/// Incremental row echelon builder for sparse homogeneous systems.
class SparseEchelon {
 public:
  explicit SparseEchelon(Eigen::Index ncols) : ncols_(ncols) {}
  /// Reduces the row and keeps it if it is independent. Returns true when kept.
  bool add_row(SparseRow row);
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots_.size()); }
  Eigen::Index ncols() const { return ncols_; }
  /// Kernel of the accumulated system, one basis vector per non-pivot column.
  std::vector<VecQ> kernel() const;

 private:
  Eigen::Index ncols_;
  std::map<Eigen::Index, SparseRow> pivots_;  ///< leading column -> row with leading coefficient 1
};

}  // namespace obranch
