#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "smc/field.hpp"

namespace smc {

/// Dense row-major matrix over F_p. Entries are always canonical residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f);

  static Matrix zero(std::size_t rows, std::size_t cols, Field f) { return {rows, cols, f}; }
  static Matrix identity(std::size_t n, Field f);
  /// Entries are reduced mod p; rows must have equal length `cols`.
  static Matrix from_rows(std::size_t rows, std::size_t cols,
                          const std::vector<std::vector<long long>>& entries, Field f);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long long>> entries,
                          Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  const Field& field() const { return field_; }
  bool empty() const { return data_.empty(); }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) { at(r, c) = field_.reduce(v); }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Scalar>& data() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix operator-() const;
  Matrix scaled(Scalar s) const;

  /// Rows (resp. columns) picked by index, in the given order.
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Writes `m` with its top-left corner at (r0, c0).
  void place(std::size_t r0, std::size_t c0, const Matrix& m);
  /// Adds `m` into the region with top-left corner at (r0, c0).
  void accumulate(std::size_t r0, std::size_t c0, const Matrix& m);

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<Scalar> data_;
};

/// Throws FieldMismatch if the two fields differ.
void require_same_field(const Field& a, const Field& b, const char* where);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(std::span<const Matrix> blocks);
/// Same, but well defined (0x0 over `f`) for an empty list.
Matrix block_diag(std::span<const Matrix> blocks, Field f);
Matrix block_diag(const Matrix& a, const Matrix& b);
/// Kronecker product a ⊗ b, row index = ra * b.rows() + rb.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace smc
