#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "smc/matrix.hpp"

namespace smc {

/// Result of Gauss-Jordan elimination. Pivots are chosen leftmost.
struct RowEchelon {
  Matrix rref;                       ///< reduced row-echelon form, same shape as input
  std::vector<std::size_t> pivots;   ///< pivot column of row k, strictly increasing
  std::size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some X with A X = B (free variables set to 0), or nullopt when inconsistent.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b);

/// Subspace of F_p^n held in echelon coordinates: column k of `basis` has a 1
/// in row pivots[k] and 0 in every other pivot row, so the coordinates of a
/// vector of the subspace are its entries at the pivot rows.
struct Subspace {
  Matrix basis;                      ///< ambient x dim
  std::vector<std::size_t> pivots;   ///< size dim

  std::size_t ambient() const { return basis.rows(); }
  std::size_t dim() const { return basis.cols(); }
  /// dim x ambient selection matrix; left inverse of `basis` on the subspace.
  Matrix coords() const;
  bool contains(const Matrix& vectors) const;
};

/// Null space of m, basis indexed by free columns in column order.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// Span of the columns of m (alias of image, reads better at call sites).
inline Subspace span_of(const Matrix& m) { return image(m); }

/// Quotient F_p^n / S. The quotient basis is the standard basis vectors at
/// non-pivot coordinates of S.
struct Quotient {
  Matrix proj;      ///< dim x ambient, surjective, kernel = S
  Matrix section;   ///< ambient x dim, proj * section = I
  std::size_t dim() const { return proj.rows(); }
};

Quotient quotient(const Subspace& s);
/// Cokernel of m: quotient of the target by the column space.
inline Quotient cokernel(const Matrix& m) { return quotient(image(m)); }

/// Incremental row echelon form. Rows are reduced against stored rows on
/// insertion so memory stays at rank x cols regardless of how many equations
/// are pushed. An optional trailing column carries right-hand sides.
class Echelon {
 public:
  Echelon(std::size_t cols, Field f);

  /// Adds a row; returns true if it increased the rank.
  bool add_row(std::vector<Scalar> row);
  std::size_t rank() const { return pivot_rows_.size(); }
  std::size_t cols() const { return cols_; }
  /// True once some row reduced to 0 ... 0 | c with c != 0 (only meaningful
  /// when the last column is a right-hand side).
  bool inconsistent_rhs() const { return inconsistent_; }
  void mark_rhs_column() { rhs_ = true; }

  /// Stacked independent rows (rank x cols).
  Matrix matrix() const;

 private:
  std::size_t cols_;
  Field field_;
  bool rhs_ = false;
  bool inconsistent_ = false;
  std::vector<std::vector<Scalar>> pivot_rows_;
  std::vector<std::size_t> pivot_cols_;
};

bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);
/// Two-sided inverse of a square matrix; throws InvalidInput when singular.
Matrix inverse(const Matrix& m);

}  // namespace smc
