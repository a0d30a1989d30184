#include "smc/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "smc/error.hpp"

namespace smc {

void require_same_field(const Field& a, const Field& b, const char* where) {
  if (a.p() != b.p()) {
    throw FieldMismatch(std::string(where) + ": mixing F_" + std::to_string(a.p()) + " and F_" +
                        std::to_string(b.p()));
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t rows, std::size_t cols,
                         const std::vector<std::vector<long long>>& entries, Field f) {
  if (entries.size() != rows) throw ShapeError("from_rows: row count mismatch");
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw ShapeError("from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entries[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long long>> entries,
                         Field f) {
  std::vector<std::vector<long long>> rows;
  for (const auto& r : entries) rows.emplace_back(r);
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return from_rows(rows.size(), cols, rows, f);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& v : m.data_) v = field_.neg(v);
  return m;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix m = *this;
  for (auto& v : m.data_) v = field_.mul(v, s);
  return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(idx.size(), cols_, field_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    auto src = row(idx[i]);
    std::copy(src.begin(), src.end(), m.row(i).begin());
  }
  return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix m(rows_, idx.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) m.at(r, i) = (*this)(r, idx[i]);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block: out of range");
  Matrix m(nr, nc, field_);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

void Matrix::place(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("place: out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) at(r0 + r, c0 + c) = m(r, c);
}

void Matrix::accumulate(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) {
    throw ShapeError("accumulate: out of range");
  }
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c)
      at(r0 + r, c0 + c) = field_.add((*this)(r0 + r, c0 + c), m(r, c));
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix +");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix +: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix -");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix -: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_, "matrix *");
  if (a.cols_ != b.rows_) {
    throw ShapeError("matrix *: " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                     " times " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  const std::uint64_t p = a.field_.p();
  Matrix m(a.rows_, b.cols_, a.field_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t s = a(r, k);
      if (s == 0) continue;
      auto brow = b.row(k);
      for (std::size_t c = 0; c < b.cols_; ++c) acc[c] = (acc[c] + s * brow[c]) % p;
    }
    for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, c) = static_cast<Scalar>(acc[c]);
  }
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "hstack");
  if (a.rows() != b.rows()) throw ShapeError("hstack: row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols(), a.field());
  m.place(0, 0, a);
  m.place(0, a.cols(), b);
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "vstack");
  if (a.cols() != b.cols()) throw ShapeError("vstack: column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols(), a.field());
  m.place(0, 0, a);
  m.place(a.rows(), 0, b);
  return m;
}

Matrix block_diag(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks.front().field(), b.field(), "block_diag");
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c, blocks.front().field());
  r = c = 0;
  for (const auto& b : blocks) {
    m.place(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix block_diag(std::span<const Matrix> blocks, Field f) {
  if (blocks.empty()) return Matrix(0, 0, f);
  return block_diag(blocks);
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  const Matrix parts[] = {a, b};
  return block_diag(parts);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "kron");
  const Field& f = a.field();
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), f);
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca) {
      const Scalar s = a(ra, ca);
      if (s == 0) continue;
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb)
          m.at(ra * b.rows() + rb, ca * b.cols() + cb) = f.mul(s, b(rb, cb));
    }
  return m;
}

}  // namespace smc
