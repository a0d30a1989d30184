#include "smc/linear_system.hpp"

#include "smc/error.hpp"
#include "smc/limits.hpp"

namespace smc {

MapSystem::MapSystem(Field f) : field_(f) {}

std::size_t MapSystem::add_unknown(const ChainComplex& source, const ChainComplex& target) {
  if (echelon_) throw InvalidInput("MapSystem: unknowns must precede constraints");
  require_same_field(field_, source.field(), "MapSystem");
  require_same_field(field_, target.field(), "MapSystem");
  Unknown u{source, target, 0, -1, {}, Matrix()};
  const auto [lo, hi] = support_union(source, target);
  u.lo = lo;
  u.hi = hi;
  std::size_t raw = 0;
  for (int t = lo; t <= hi; ++t) {
    u.raw_offset.push_back(raw);
    raw += target.dim(t) * source.dim(t);
  }
  raw_total_ += raw;
  if (raw_total_ > limits().system_unknowns)
    throw ResourceError("MapSystem: " + std::to_string(raw_total_) + " unknowns exceed the cap of " +
                        std::to_string(limits().system_unknowns));
  // δφ = dφ - φd restricted to degree 0; rows are Hom(A_t, B_{t-1}) row-major.
  std::size_t rows = 0;
  std::vector<std::size_t> row_offset;
  for (int t = lo; t <= hi; ++t) {
    row_offset.push_back(rows);
    rows += target.dim(t - 1) * source.dim(t);
  }
  Matrix delta(rows, raw, field_);
  for (int t = lo; t <= hi; ++t) {
    const std::size_t k = static_cast<std::size_t>(t - lo);
    const std::size_t a = source.dim(t);
    const std::size_t b1 = target.dim(t - 1);
    if (a == 0 || b1 == 0) continue;
    delta.accumulate(row_offset[k], u.raw_offset[k], kron(target.diff(t), Matrix::identity(a, field_)));
    if (k > 0) {
      const Matrix dt = source.diff(t).transpose();
      delta.accumulate(row_offset[k], u.raw_offset[k - 1], -kron(Matrix::identity(b1, field_), dt));
    }
  }
  u.basis = kernel(delta).basis;
  offsets_.push_back(offsets_.back() + u.basis.cols());
  unknowns_.push_back(std::move(u));
  return unknowns_.size() - 1;
}

MapSystem::Term MapSystem::term(std::size_t unknown, const std::optional<ChainMap>& left,
                                const std::optional<ChainMap>& right) const {
  const Unknown& u = unknowns_.at(unknown);
  return {unknown, left ? *left : ChainMap::identity(u.target), right ? *right : ChainMap::identity(u.source)};
}

void MapSystem::ensure_echelon() const {
  if (!echelon_) {
    echelon_.emplace(parameters() + 1, field_);
    echelon_->mark_rhs_column();
  }
}

void MapSystem::add_constraint(const std::vector<Term>& terms, const ChainComplex& from,
                               const ChainComplex& to, const std::optional<ChainMap>& rhs) {
  ensure_echelon();
  const std::size_t width = parameters() + 1;
  int lo = from.empty_support() ? 0 : from.lo(), hi = from.empty_support() ? -1 : from.hi();
  for (int t = lo; t <= hi; ++t) {
    const std::size_t d = from.dim(t), c = to.dim(t);
    if (d == 0 || c == 0) continue;
    Matrix block(c * d, width, field_);
    for (const auto& tm : terms) {
      const Unknown& u = unknowns_.at(tm.unknown);
      if (t < u.lo || t > u.hi) continue;
      const std::size_t k = static_cast<std::size_t>(t - u.lo);
      const std::size_t raw = u.target.dim(t) * u.source.dim(t);
      if (raw == 0 || u.basis.cols() == 0) continue;
      const Matrix coeff = kron(tm.left.block(t), tm.right.block(t).transpose());
      block.accumulate(0, offsets_[tm.unknown], coeff * u.basis.block(u.raw_offset[k], 0, raw, u.basis.cols()));
    }
    if (rhs) {
      const Matrix r = rhs->block(t);
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < d; ++j) block.at(i * d + j, width - 1) = r(i, j);
    }
    for (std::size_t r = 0; r < block.rows(); ++r) {
      auto row = block.row(r);
      bool zero = true;
      for (auto v : row)
        if (v != 0) {
          zero = false;
          break;
        }
      if (!zero) echelon_->add_row({row.begin(), row.end()});
    }
  }
}

std::size_t MapSystem::nullity() const {
  ensure_echelon();
  return parameters() - echelon_->rank();
}

bool MapSystem::consistent() const {
  ensure_echelon();
  return !echelon_->inconsistent_rhs();
}

ChainMap MapSystem::assemble(const Unknown& u, const Matrix& coeffs) const {
  const Matrix raw = u.basis.cols() == 0 ? Matrix(u.basis.rows(), 1, field_) : u.basis * coeffs;
  return ChainMap::from_fn(u.source, u.target, [&](int t) {
    Matrix m(u.target.dim(t), u.source.dim(t), field_);
    if (t < u.lo || t > u.hi) return m;
    const std::size_t off = u.raw_offset[static_cast<std::size_t>(t - u.lo)];
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = raw(off + i * m.cols() + j, 0);
    return m;
  });
}

std::optional<Matrix> MapSystem::particular() const {
  ensure_echelon();
  if (echelon_->inconsistent_rhs()) return std::nullopt;
  const Matrix e = echelon_->matrix();
  const std::size_t p = parameters();
  if (e.rows() == 0) return Matrix(p, 1, field_);
  return solve_linear(e.block(0, 0, e.rows(), p), e.block(0, p, e.rows(), 1));
}

std::vector<ChainMap> MapSystem::split(const Matrix& x) const {
  std::vector<ChainMap> out;
  for (std::size_t k = 0; k < unknowns_.size(); ++k) {
    const std::size_t m = offsets_[k + 1] - offsets_[k];
    out.push_back(assemble(unknowns_[k], x.block(offsets_[k], 0, m, 1)));
  }
  return out;
}

std::optional<std::vector<ChainMap>> MapSystem::solve() const {
  auto x = particular();
  if (!x) return std::nullopt;
  return split(*x);
}

std::optional<std::vector<ChainMap>> MapSystem::random_solution(std::mt19937_64& rng) const {
  auto x = particular();
  if (!x) return std::nullopt;
  const Matrix e = echelon_->matrix();
  const std::size_t p = parameters();
  const Subspace null = kernel(e.rows() == 0 ? Matrix(0, p, field_) : e.block(0, 0, e.rows(), p));
  Matrix r(null.dim(), 1, field_);
  for (std::size_t k = 0; k < null.dim(); ++k) r.set(k, 0, static_cast<long long>(rng() % field_.p()));
  return split(*x + null.basis * r);
}

SimplicialUnknown add_simplicial_unknown(MapSystem& sys, const SimplicialObject& x, const SimplicialObject& y) {
  if (x.truncation() != y.truncation()) throw InvalidInput("simplicial unknown: truncation mismatch");
  SimplicialUnknown u{x, y, {}};
  for (int n = 0; n <= x.truncation(); ++n) u.levels.push_back(sys.add_unknown(x.level(n), y.level(n)));
  return u;
}

MapSystem::Term level_term(const MapSystem& sys, const SimplicialUnknown& u, int n,
                           const std::optional<ChainMap>& left, const std::optional<ChainMap>& right) {
  return sys.term(u.levels.at(static_cast<std::size_t>(n)), left, right);
}

void add_naturality(MapSystem& sys, const SimplicialUnknown& u) {
  const SimplicialObject& x = u.source;
  const SimplicialObject& y = u.target;
  const int top = x.truncation();
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      sys.add_constraint({level_term(sys, u, n, y.face(n, i), std::nullopt),
                          level_term(sys, u, n - 1, std::nullopt, -x.face(n, i))},
                         x.level(n), y.level(n - 1));
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j)
      sys.add_constraint({level_term(sys, u, n, y.degeneracy(n, j), std::nullopt),
                          level_term(sys, u, n + 1, std::nullopt, -x.degeneracy(n, j))},
                         x.level(n), y.level(n + 1));
}

SimplicialMap extract(const SimplicialUnknown& u, const std::vector<ChainMap>& solution) {
  std::vector<ChainMap> levels;
  for (auto k : u.levels) levels.push_back(solution.at(k));
  return SimplicialMap(u.source, u.target, std::move(levels));
}

}  // namespace smc
