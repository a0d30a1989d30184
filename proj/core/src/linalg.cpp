#include "smc/linalg.hpp"

#include <algorithm>

#include "smc/error.hpp"

namespace smc {
namespace {

// row_a -= s * row_b  (mod p), touching only columns from `from`.
void axpy(std::span<Scalar> a, std::span<const Scalar> b, Scalar s, const Field& f,
          std::size_t from = 0) {
  if (s == 0) return;
  const std::uint64_t p = f.p();
  const std::uint64_t neg = p - s;
  for (std::size_t c = from; c < a.size(); ++c) {
    if (b[c] == 0) continue;
    a[c] = static_cast<Scalar>((a[c] + neg * b[c]) % p);
  }
}

}  // namespace

RowEchelon row_reduce(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.rref;
  const Field& f = a.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      auto r1 = a.row(piv);
      auto r2 = a.row(row);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    const Scalar inv = f.inv(a(row, col));
    for (auto& v : a.row(row)) v = f.mul(v, inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != row && a(r, col) != 0) axpy(a.row(r), a.row(row), a(r, col), f, col);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Tall matrices: eliminate on the transpose-sized side.
  Echelon e(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    e.add_row(std::vector<Scalar>(src.begin(), src.end()));
    if (e.rank() == m.cols()) break;
  }
  return e.rank();
}

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "solve_linear");
  if (a.rows() != b.rows()) throw ShapeError("solve_linear: row counts of A and B differ");
  const RowEchelon e = row_reduce(hstack(a, b));
  Matrix x(a.cols(), b.cols(), a.field());
  for (std::size_t k = 0; k < e.rank(); ++k) {
    const std::size_t pc = e.pivots[k];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x.at(pc, c) = e.rref(k, a.cols() + c);
  }
  return x;
}

Matrix Subspace::coords() const {
  Matrix c(dim(), ambient(), basis.field());
  for (std::size_t k = 0; k < pivots.size(); ++k) c.at(k, pivots[k]) = 1;
  return c;
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient()) throw ShapeError("Subspace::contains: ambient mismatch");
  return basis * (coords() * vectors) == vectors;
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto pc : e.pivots) is_pivot[pc] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Subspace s{Matrix(m.cols(), free.size(), f), free};
  for (std::size_t k = 0; k < free.size(); ++k) {
    s.basis.at(free[k], k) = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) s.basis.at(e.pivots[r], k) = f.neg(e.rref(r, free[k]));
  }
  return s;
}

Subspace image(const Matrix& m) {
  const Field& f = m.field();
  const RowEchelon e = row_reduce(m.transpose());
  Subspace s{Matrix(m.rows(), e.rank(), f), e.pivots};
  for (std::size_t k = 0; k < e.rank(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) s.basis.at(r, k) = e.rref(k, r);
  return s;
}

Quotient quotient(const Subspace& s) {
  const Field& f = s.basis.field();
  const std::size_t n = s.ambient();
  std::vector<std::ptrdiff_t> slot(n, -1);
  std::vector<bool> is_pivot(n, false);
  for (auto pc : s.pivots) is_pivot[pc] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) {
      slot[i] = static_cast<std::ptrdiff_t>(rest.size());
      rest.push_back(i);
    }
  }
  Quotient q{Matrix(rest.size(), n, f), Matrix(n, rest.size(), f)};
  for (std::size_t j = 0; j < rest.size(); ++j) {
    q.proj.at(j, rest[j]) = 1;
    q.section.at(rest[j], j) = 1;
  }
  // e_c for a pivot coordinate c equals b_k - (b_k off the pivots), so its
  // class is -(b_k restricted to non-pivot coordinates).
  for (std::size_t k = 0; k < s.pivots.size(); ++k) {
    const std::size_t c = s.pivots[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (slot[i] >= 0 && s.basis(i, k) != 0)
        q.proj.at(static_cast<std::size_t>(slot[i]), c) = f.neg(s.basis(i, k));
    }
  }
  return q;
}

Echelon::Echelon(std::size_t cols, Field f) : cols_(cols), field_(f) {}

bool Echelon::add_row(std::vector<Scalar> row) {
  if (row.size() != cols_) throw ShapeError("Echelon::add_row: width mismatch");
  for (std::size_t k = 0; k < pivot_rows_.size(); ++k) {
    const Scalar s = row[pivot_cols_[k]];
    if (s != 0) axpy(row, pivot_rows_[k], s, field_, pivot_cols_[k]);
  }
  const std::size_t limit = rhs_ ? cols_ - 1 : cols_;
  std::size_t lead = 0;
  while (lead < limit && row[lead] == 0) ++lead;
  if (lead == limit) {
    if (rhs_ && row[limit] != 0) inconsistent_ = true;
    return false;
  }
  const Scalar inv = field_.inv(row[lead]);
  for (std::size_t c = lead; c < cols_; ++c) row[c] = field_.mul(row[c], inv);
  pivot_rows_.push_back(std::move(row));
  pivot_cols_.push_back(lead);
  return true;
}

Matrix Echelon::matrix() const {
  Matrix m(pivot_rows_.size(), cols_, field_);
  for (std::size_t r = 0; r < pivot_rows_.size(); ++r)
    std::copy(pivot_rows_[r].begin(), pivot_rows_[r].end(), m.row(r).begin());
  return m;
}

bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }
bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix is not square");
  auto x = solve_linear(m, Matrix::identity(m.rows(), m.field()));
  if (!x || !(m * *x == Matrix::identity(m.rows(), m.field()))) {
    throw InvalidInput("inverse: matrix is singular");
  }
  return *x;
}

}  // namespace smc
