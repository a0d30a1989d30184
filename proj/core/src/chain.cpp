#include "smc/chain.hpp"

#include <algorithm>

#include "smc/error.hpp"
#include "smc/limits.hpp"

namespace smc {
namespace {

std::string deg(int t) { return "degree " + std::to_string(t); }

bool same_shape(const ChainComplex& a, const ChainComplex& b) {
  const auto [lo, hi] = support_union(a, b);
  for (int t = lo; t <= hi; ++t)
    if (a.dim(t) != b.dim(t)) return false;
  return true;
}

Matrix sign(const Matrix& m, int s) { return (s % 2 == 0) ? m : -m; }

}  // namespace

// ---- ChainComplex ------------------------------------------------------

ChainComplex::ChainComplex(Field f) : field_(f) {}

ChainComplex::ChainComplex(Field f, int lo, std::vector<std::size_t> dims,
                           std::vector<Matrix> diffs)
    : field_(f), lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (dims_.size() != diffs_.size()) throw ShapeError("ChainComplex: dims/diff count mismatch");
  if (dims_.empty()) lo_ = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const int t = lo_ + static_cast<int>(k);
    const Matrix& d = diffs_[k];
    require_same_field(field_, d.field(), "ChainComplex");
    if (d.rows() != dim(t - 1) || d.cols() != dims_[k]) {
      throw ShapeError("ChainComplex: diff at " + deg(t) + " is " + std::to_string(d.rows()) +
                       "x" + std::to_string(d.cols()) + ", expected " +
                       std::to_string(dim(t - 1)) + "x" + std::to_string(dims_[k]));
    }
    check_block(d.rows(), d.cols(), "ChainComplex");
  }
}

std::size_t ChainComplex::dim(int t) const {
  if (t < lo_ || t > hi()) return 0;
  return dims_[static_cast<std::size_t>(t - lo_)];
}

Matrix ChainComplex::diff(int t) const {
  if (t < lo_ || t > hi()) return Matrix(dim(t - 1), dim(t), field_);
  return diffs_[static_cast<std::size_t>(t - lo_)];
}

std::size_t ChainComplex::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims_) n += d;
  return n;
}

ChainComplex ChainComplex::trimmed() const {
  int a = lo_, b = hi();
  while (a <= b && dim(a) == 0) ++a;
  while (b >= a && dim(b) == 0) --b;
  if (a > b) return ChainComplex(field_);
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = a; t <= b; ++t) {
    dims.push_back(dim(t));
    diffs.push_back(t == a ? Matrix(0, dim(t), field_) : diff(t));
  }
  return ChainComplex(field_, a, std::move(dims), std::move(diffs));
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  if (a.field_.p() != b.field_.p()) return false;
  const auto [lo, hi] = support_union(a, b);
  for (int t = lo; t <= hi; ++t) {
    if (a.dim(t) != b.dim(t)) return false;
    if (!(a.diff(t) == b.diff(t))) return false;
  }
  return true;
}

std::pair<int, int> support_union(const ChainComplex& a, const ChainComplex& b) {
  if (a.empty_support() && b.empty_support()) return {0, -1};
  if (a.empty_support()) return {b.lo(), b.hi()};
  if (b.empty_support()) return {a.lo(), a.hi()};
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

// ---- ChainMap ----------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, int lo, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_field(source_.field(), target_.field(), "ChainMap");
  const auto [ulo, uhi] = support_union(source_, target_);
  lo_ = ulo;
  for (int t = ulo; t <= uhi; ++t) blocks_.emplace_back(target_.dim(t), source_.dim(t), field());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const int t = lo + static_cast<int>(k);
    const Matrix& m = blocks[k];
    if (m.rows() != target_.dim(t) || m.cols() != source_.dim(t)) {
      throw ShapeError("ChainMap: block at " + deg(t) + " is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " +
                       std::to_string(target_.dim(t)) + "x" + std::to_string(source_.dim(t)));
    }
    if (m.size() == 0) continue;
    require_same_field(field(), m.field(), "ChainMap");
    check_block(m.rows(), m.cols(), "ChainMap");
    blocks_[static_cast<std::size_t>(t - lo_)] = m;
  }
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  return ChainMap(source, target, 0, {});
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  return from_fn(c, c, [&](int t) { return Matrix::identity(c.dim(t), c.field()); });
}

Matrix ChainMap::block(int t) const {
  if (t < lo_ || t > hi()) return Matrix(target_.dim(t), source_.dim(t), field());
  return blocks_[static_cast<std::size_t>(t - lo_)];
}

bool ChainMap::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  for (int t = lo; t <= hi; ++t)
    if (!(a.block(t) == b.block(t))) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!same_shape(f.target(), g.source())) throw ShapeError("compose: f target != g source");
  return ChainMap::from_fn(f.source(), g.target(), [&](int t) { return g.block(t) * f.block(t); });
}

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  if (!same_shape(a.source(), b.source()) || !same_shape(a.target(), b.target())) {
    throw ShapeError("ChainMap +: endpoints differ");
  }
  return ChainMap::from_fn(a.source(), a.target(), [&](int t) { return a.block(t) + b.block(t); });
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
  if (!same_shape(a.source(), b.source()) || !same_shape(a.target(), b.target())) {
    throw ShapeError("ChainMap -: endpoints differ");
  }
  return ChainMap::from_fn(a.source(), a.target(), [&](int t) { return a.block(t) - b.block(t); });
}

ChainMap operator-(const ChainMap& a) {
  return ChainMap::from_fn(a.source(), a.target(), [&](int t) { return -a.block(t); });
}

// ---- standard objects ---------------------------------------------------

ChainComplex zero_complex(Field f) { return ChainComplex(f); }

ChainComplex sphere(Field f, int n) { return ChainComplex(f, n, {1}, {Matrix(0, 1, f)}); }

ChainComplex disk(Field f, int n) {
  return ChainComplex(f, n - 1, {1, 1}, {Matrix(0, 1, f), Matrix::identity(1, f)});
}

ChainMap sphere_into_disk(Field f, int n) {
  return ChainMap(sphere(f, n - 1), disk(f, n), n - 1, {Matrix::identity(1, f)});
}

ChainMap disk_onto_sphere(Field f, int n) {
  return ChainMap::from_fn(disk(f, n), sphere(f, n), [&](int t) {
    return t == n ? Matrix::identity(1, f) : Matrix(sphere(f, n).dim(t), disk(f, n).dim(t), f);
  });
}

// ---- validation ---------------------------------------------------------

Report validate_complex(const ChainComplex& c) {
  for (int t = c.lo() + 1; t <= c.hi(); ++t) {
    if (!(c.diff(t - 1) * c.diff(t)).is_zero()) {
      return Report::fail("d(" + std::to_string(t - 1) + ") o d(" + std::to_string(t) +
                          ") != 0 at " + deg(t));
    }
  }
  return Report::pass();
}

Report validate_map(const ChainMap& f) {
  if (auto r = validate_complex(f.source()); !r) return Report::fail("source: " + r.where);
  if (auto r = validate_complex(f.target()); !r) return Report::fail("target: " + r.where);
  const auto [lo, hi] = support_union(f.source(), f.target());
  for (int t = lo; t <= hi + 1; ++t) {
    if (!(f.target().diff(t) * f.block(t) == f.block(t - 1) * f.source().diff(t))) {
      return Report::fail("d o f != f o d at " + deg(t));
    }
  }
  return Report::pass();
}

void require_valid(const ChainComplex& c, const char* where) {
  if (auto r = validate_complex(c); !r) throw InvalidInput(std::string(where) + ": " + r.where);
}

void require_valid(const ChainMap& f, const char* where) {
  if (auto r = validate_map(f); !r) throw InvalidInput(std::string(where) + ": " + r.where);
}

// ---- homology -----------------------------------------------------------

std::map<int, std::size_t> homology_dims(const ChainComplex& c) {
  std::map<int, std::size_t> h;
  for (int t = c.lo(); t <= c.hi(); ++t) {
    const std::size_t z = c.dim(t) - rank(c.diff(t));
    const std::size_t b = rank(c.diff(t + 1));
    if (z > b) h[t] = z - b;
  }
  return h;
}

long long euler_characteristic(const ChainComplex& c) {
  long long x = 0;
  for (int t = c.lo(); t <= c.hi(); ++t)
    x += (t % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dim(t));
  return x;
}

long long euler_characteristic(const std::map<int, std::size_t>& h) {
  long long x = 0;
  for (const auto& [t, d] : h) x += (t % 2 == 0 ? 1 : -1) * static_cast<long long>(d);
  return x;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  const Field& fld = f.field();
  int lo = 0, hi = -1;
  if (!a.empty_support() || !b.empty_support()) {
    lo = b.empty_support() ? a.lo() + 1 : (a.empty_support() ? b.lo() : std::min(b.lo(), a.lo() + 1));
    hi = b.empty_support() ? a.hi() + 1 : (a.empty_support() ? b.hi() : std::max(b.hi(), a.hi() + 1));
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = lo; t <= hi; ++t) {
    dims.push_back(b.dim(t) + a.dim(t - 1));
    Matrix d(b.dim(t - 1) + a.dim(t - 2), b.dim(t) + a.dim(t - 1), fld);
    d.place(0, 0, b.diff(t));
    d.place(0, b.dim(t), f.block(t - 1));
    d.place(b.dim(t - 1), b.dim(t), -a.diff(t - 1));
    if (t == lo) d = Matrix(0, dims.back(), fld);
    diffs.push_back(std::move(d));
  }
  return ChainComplex(fld, lo, std::move(dims), std::move(diffs));
}

bool is_quasi_iso(const ChainMap& f) { return homology_dims(mapping_cone(f)).empty(); }

std::optional<int> first_cone_homology(const ChainMap& f) {
  const auto h = homology_dims(mapping_cone(f));
  if (h.empty()) return std::nullopt;
  return h.begin()->first;
}

std::size_t homology_rank(const ChainMap& f, int t) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  const Subspace z = kernel(a.diff(t));
  const Matrix images = f.block(t) * z.basis;
  const Matrix bounds = b.diff(t + 1);
  return rank(hstack(images, bounds)) - rank(bounds);
}

bool is_quasi_iso_by_homology(const ChainMap& f) {
  const auto ha = homology_dims(f.source());
  const auto hb = homology_dims(f.target());
  if (ha != hb) return false;
  for (const auto& [t, d] : ha)
    if (homology_rank(f, t) != d) return false;
  return true;
}

MonoEpi mono_epi(const ChainMap& f) {
  MonoEpi r;
  const auto [lo, hi] = support_union(f.source(), f.target());
  for (int t = lo; t <= hi; ++t) {
    const Matrix m = f.block(t);
    const std::size_t rk = rank(m);
    if (rk != m.cols() && r.mono) {
      r.mono = false;
      r.first_non_mono = t;
    }
    if (rk != m.rows() && r.epi) {
      r.epi = false;
      r.first_non_epi = t;
    }
  }
  return r;
}

// ---- sums ---------------------------------------------------------------

ChainComplex direct_sum(const std::vector<ChainComplex>& parts, Field f) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& c : parts) {
    require_same_field(f, c.field(), "direct_sum");
    if (c.empty_support()) continue;
    lo = any ? std::min(lo, c.lo()) : c.lo();
    hi = any ? std::max(hi, c.hi()) : c.hi();
    any = true;
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = lo; t <= hi; ++t) {
    std::size_t d = 0;
    std::vector<Matrix> blocks;
    for (const auto& c : parts) {
      d += c.dim(t);
      blocks.push_back(c.diff(t));
    }
    dims.push_back(d);
    Matrix m = block_diag(blocks, f);
    if (t == lo) m = Matrix(0, d, f);
    diffs.push_back(std::move(m));
  }
  return ChainComplex(f, lo, std::move(dims), std::move(diffs));
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  return direct_sum(std::vector<ChainComplex>{a, b}, a.field());
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  const ChainComplex src = direct_sum(f.source(), g.source());
  const ChainComplex tgt = direct_sum(f.target(), g.target());
  return ChainMap::from_fn(src, tgt, [&](int t) { return block_diag(f.block(t), g.block(t)); });
}

ChainMap summand_inclusion(const std::vector<ChainComplex>& parts, std::size_t k, Field f) {
  const ChainComplex sum = direct_sum(parts, f);
  return ChainMap::from_fn(parts[k], sum, [&](int t) {
    Matrix m(sum.dim(t), parts[k].dim(t), f);
    std::size_t off = 0;
    for (std::size_t j = 0; j < k; ++j) off += parts[j].dim(t);
    m.place(off, 0, Matrix::identity(parts[k].dim(t), f));
    return m;
  });
}

ChainMap summand_projection(const std::vector<ChainComplex>& parts, std::size_t k, Field f) {
  const ChainComplex sum = direct_sum(parts, f);
  return ChainMap::from_fn(sum, parts[k], [&](int t) {
    Matrix m(parts[k].dim(t), sum.dim(t), f);
    std::size_t off = 0;
    for (std::size_t j = 0; j < k; ++j) off += parts[j].dim(t);
    m.place(0, off, Matrix::identity(parts[k].dim(t), f));
    return m;
  });
}

ChainMap copair(const ChainMap& f, const ChainMap& g) {
  if (!same_shape(f.target(), g.target())) throw ShapeError("copair: targets differ");
  const ChainComplex src = direct_sum(f.source(), g.source());
  return ChainMap::from_fn(src, f.target(), [&](int t) { return hstack(f.block(t), g.block(t)); });
}

ChainMap pair(const ChainMap& f, const ChainMap& g) {
  if (!same_shape(f.source(), g.source())) throw ShapeError("pair: sources differ");
  const ChainComplex tgt = direct_sum(f.target(), g.target());
  return ChainMap::from_fn(f.source(), tgt, [&](int t) { return vstack(f.block(t), g.block(t)); });
}

// ---- kernels and cokernels ----------------------------------------------

Cokernel cokernel(const ChainMap& f) {
  const ChainComplex& y = f.target();
  const Field& fld = f.field();
  Cokernel out;
  for (int t = y.lo(); t <= y.hi(); ++t) out.degrees.emplace(t, smc::cokernel(f.block(t)));
  auto q = [&](int t) -> const Quotient* {
    auto it = out.degrees.find(t);
    return it == out.degrees.end() ? nullptr : &it->second;
  };
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = y.lo(); t <= y.hi(); ++t) {
    dims.push_back(q(t)->dim());
    if (t == y.lo() || q(t - 1) == nullptr) {
      diffs.emplace_back(0, q(t)->dim(), fld);
    } else {
      diffs.push_back(q(t - 1)->proj * y.diff(t) * q(t)->section);
    }
  }
  out.object = ChainComplex(fld, y.lo(), std::move(dims), std::move(diffs));
  out.projection = ChainMap::from_fn(y, out.object, [&](int t) {
    return q(t) ? q(t)->proj : Matrix(out.object.dim(t), y.dim(t), fld);
  });
  return out;
}

ChainMap Cokernel::descend(const ChainMap& h) const {
  return ChainMap::from_fn(object, h.target(), [&](int t) {
    auto it = degrees.find(t);
    if (it == degrees.end()) return Matrix(h.target().dim(t), object.dim(t), h.field());
    return h.block(t) * it->second.section;
  });
}

Kernel kernel(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const Field& fld = f.field();
  Kernel out;
  for (int t = x.lo(); t <= x.hi(); ++t) out.degrees.emplace(t, smc::kernel(f.block(t)));
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = x.lo(); t <= x.hi(); ++t) {
    const Subspace& s = out.degrees.at(t);
    dims.push_back(s.dim());
    if (t == x.lo()) {
      diffs.emplace_back(0, s.dim(), fld);
    } else {
      diffs.push_back(out.degrees.at(t - 1).coords() * x.diff(t) * s.basis);
    }
  }
  out.object = ChainComplex(fld, x.lo(), std::move(dims), std::move(diffs));
  out.inclusion = ChainMap::from_fn(out.object, x, [&](int t) {
    auto it = out.degrees.find(t);
    return it == out.degrees.end() ? Matrix(x.dim(t), 0, fld) : it->second.basis;
  });
  return out;
}

ChainMap Kernel::lift(const ChainMap& h) const {
  return ChainMap::from_fn(h.source(), object, [&](int t) {
    auto it = degrees.find(t);
    if (it == degrees.end()) return Matrix(object.dim(t), h.source().dim(t), h.field());
    return it->second.coords() * h.block(t);
  });
}

Pushout pushout(const ChainMap& f, const ChainMap& g) {
  if (!same_shape(f.source(), g.source())) throw ShapeError("pushout: span legs have different sources");
  const ChainMap span = pair(f, -g);
  Pushout po{cokernel(span), {}, {}};
  const std::vector<ChainComplex> parts{f.target(), g.target()};
  po.from_b = compose(po.coker.projection, summand_inclusion(parts, 0, f.field()));
  po.from_c = compose(po.coker.projection, summand_inclusion(parts, 1, f.field()));
  return po;
}

ChainMap Pushout::mediator(const ChainMap& u, const ChainMap& v) const {
  return coker.descend(copair(u, v));
}

Pullback pullback(const ChainMap& f, const ChainMap& g) {
  if (!same_shape(f.target(), g.target())) throw ShapeError("pullback: cospan legs have different targets");
  const ChainMap cospan = copair(f, -g);
  Pullback pb{kernel(cospan), {}, {}};
  const std::vector<ChainComplex> parts{f.source(), g.source()};
  pb.to_b = compose(summand_projection(parts, 0, f.field()), pb.ker.inclusion);
  pb.to_c = compose(summand_projection(parts, 1, f.field()), pb.ker.inclusion);
  return pb;
}

ChainMap Pullback::mediator(const ChainMap& u, const ChainMap& v) const {
  return ker.lift(pair(u, v));
}

// ---- hom complex ----------------------------------------------------------

namespace {

struct HomLayout {
  int lo = 0, hi = -1;
  // offset of the s-component inside Hom_t
  std::size_t offset(const ChainComplex& a, const ChainComplex& b, int t, int s) const {
    std::size_t off = 0;
    for (int r = a.lo(); r < s; ++r) off += a.dim(r) * b.dim(r + t);
    return off;
  }
};

HomLayout hom_layout(const ChainComplex& a, const ChainComplex& b) {
  if (a.empty_support() || b.empty_support()) return {};
  return {b.lo() - a.hi(), b.hi() - a.lo()};
}

std::size_t hom_dim_at(const ChainComplex& a, const ChainComplex& b, int t) {
  std::size_t n = 0;
  for (int s = a.lo(); s <= a.hi(); ++s) n += a.dim(s) * b.dim(s + t);
  return n;
}

}  // namespace

ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b) {
  require_same_field(a.field(), b.field(), "hom_complex");
  const Field& f = a.field();
  const HomLayout lay = hom_layout(a, b);
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = lay.lo; t <= lay.hi; ++t) {
    dims.push_back(hom_dim_at(a, b, t));
    Matrix d(hom_dim_at(a, b, t - 1), dims.back(), f);
    if (t != lay.lo) {
      const Scalar sgn = (t % 2 == 0) ? f.neg(1) : 1;  // -(-1)^t
      for (int s = a.lo(); s <= a.hi(); ++s) {
        const std::size_t rows = b.dim(s + t), cols = a.dim(s);
        if (rows * cols == 0) continue;
        const std::size_t src = lay.offset(a, b, t, s);
        // (δφ)_s gets d_B ∘ φ_s
        if (b.dim(s + t - 1) > 0) {
          d.accumulate(lay.offset(a, b, t - 1, s), src,
                       kron(b.diff(s + t), Matrix::identity(cols, f)));
        }
        // (δφ)_{s+1} gets -(-1)^t φ_s ∘ d_A(s+1)
        if (a.dim(s + 1) > 0) {
          d.accumulate(lay.offset(a, b, t - 1, s + 1), src,
                       kron(Matrix::identity(rows, f), a.diff(s + 1).transpose()).scaled(sgn));
        }
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(f, lay.lo, std::move(dims), std::move(diffs));
}

ChainMap hom_precompose(const ChainMap& g, const ChainComplex& b) {
  const ChainComplex& a2 = g.source();
  const ChainComplex& a = g.target();
  const Field& f = g.field();
  const ChainComplex src = hom_complex(a, b);
  const ChainComplex tgt = hom_complex(a2, b);
  const HomLayout ls = hom_layout(a, b), lt = hom_layout(a2, b);
  return ChainMap::from_fn(src, tgt, [&](int t) {
    Matrix m(tgt.dim(t), src.dim(t), f);
    for (int s = std::min(a.lo(), a2.lo()); s <= std::max(a.hi(), a2.hi()); ++s) {
      const std::size_t rows = b.dim(s + t);
      if (rows == 0 || a.dim(s) == 0 || a2.dim(s) == 0) continue;
      m.place(lt.offset(a2, b, t, s), ls.offset(a, b, t, s),
              kron(Matrix::identity(rows, f), g.block(s).transpose()));
    }
    return m;
  });
}

ChainMap hom_postcompose(const ChainComplex& a, const ChainMap& h) {
  const ChainComplex& b = h.source();
  const ChainComplex& b2 = h.target();
  const Field& f = h.field();
  const ChainComplex src = hom_complex(a, b);
  const ChainComplex tgt = hom_complex(a, b2);
  const HomLayout ls = hom_layout(a, b), lt = hom_layout(a, b2);
  return ChainMap::from_fn(src, tgt, [&](int t) {
    Matrix m(tgt.dim(t), src.dim(t), f);
    for (int s = a.lo(); s <= a.hi(); ++s) {
      if (a.dim(s) == 0 || b.dim(s + t) == 0 || b2.dim(s + t) == 0) continue;
      m.place(lt.offset(a, b2, t, s), ls.offset(a, b, t, s),
              kron(h.block(s + t), Matrix::identity(a.dim(s), f)));
    }
    return m;
  });
}

ChainMap hom_element_to_map(const ChainComplex& a, const ChainComplex& b, const Matrix& column) {
  const Field& f = a.field();
  if (column.cols() != 1 || column.rows() != hom_dim_at(a, b, 0)) {
    throw ShapeError("hom_element_to_map: expected a column of Hom_0");
  }
  const HomLayout lay = hom_layout(a, b);
  return ChainMap::from_fn(a, b, [&](int s) {
    Matrix m(b.dim(s), a.dim(s), f);
    if (m.size() == 0) return m;
    const std::size_t off = lay.offset(a, b, 0, s);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = column(off + r * m.cols() + c, 0);
    return m;
  });
}

Matrix map_to_hom_element(const ChainMap& g) {
  const ChainComplex& a = g.source();
  const ChainComplex& b = g.target();
  const HomLayout lay = hom_layout(a, b);
  Matrix col(hom_dim_at(a, b, 0), 1, g.field());
  for (int s = a.lo(); s <= a.hi(); ++s) {
    const Matrix m = g.block(s);
    if (m.size() == 0) continue;
    const std::size_t off = lay.offset(a, b, 0, s);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) col.at(off + r * m.cols() + c, 0) = m(r, c);
  }
  return col;
}

std::size_t chain_hom_dim(const ChainComplex& a, const ChainComplex& b) {
  const ChainComplex h = hom_complex(a, b);
  return h.dim(0) - rank(h.diff(0));
}

// ---- tensor -------------------------------------------------------------

std::size_t tensor_offset(const ChainComplex& a, const ChainComplex& b, int n, int s) {
  std::size_t off = 0;
  if (a.empty_support()) return off;
  for (int r = a.lo(); r < s; ++r) off += a.dim(r) * b.dim(n - r);
  return off;
}

std::size_t tensor_dim(const ChainComplex& a, const ChainComplex& b, int n) {
  std::size_t d = 0;
  if (a.empty_support()) return d;
  for (int s = a.lo(); s <= a.hi(); ++s) d += a.dim(s) * b.dim(n - s);
  return d;
}

Matrix tensor_diff_block(const ChainComplex& a, const ChainComplex& b, int n) {
  const Field& f = a.field();
  Matrix d(tensor_dim(a, b, n - 1), tensor_dim(a, b, n), f);
  if (d.size() == 0) return d;
  for (int s = a.lo(); s <= a.hi(); ++s) {
    const int t = n - s;
    if (a.dim(s) * b.dim(t) == 0) continue;
    const std::size_t src = tensor_offset(a, b, n, s);
    if (a.dim(s - 1) > 0) {
      d.accumulate(tensor_offset(a, b, n - 1, s - 1), src, kron(a.diff(s), Matrix::identity(b.dim(t), f)));
    }
    if (b.dim(t - 1) > 0) {
      d.accumulate(tensor_offset(a, b, n - 1, s), src,
                   sign(kron(Matrix::identity(a.dim(s), f), b.diff(t)), s));
    }
  }
  return d;
}

Matrix tensor_map_block(const ChainMap& g, const ChainMap& h, int n) {
  const ChainComplex& a = g.source();
  const ChainComplex& b = h.source();
  const ChainComplex& a2 = g.target();
  const ChainComplex& b2 = h.target();
  Matrix m(tensor_dim(a2, b2, n), tensor_dim(a, b, n), g.field());
  if (m.size() == 0) return m;
  for (int s = std::min(a.lo(), a2.lo()); s <= std::max(a.hi(), a2.hi()); ++s) {
    const int t = n - s;
    if (a.dim(s) * b.dim(t) == 0 || a2.dim(s) * b2.dim(t) == 0) continue;
    m.place(tensor_offset(a2, b2, n, s), tensor_offset(a, b, n, s), kron(g.block(s), h.block(t)));
  }
  return m;
}

ChainComplex tensor_complexes(const ChainComplex& a, const ChainComplex& b) {
  require_same_field(a.field(), b.field(), "tensor_complexes");
  const Field& f = a.field();
  if (a.empty_support() || b.empty_support()) return ChainComplex(f);
  const int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    dims.push_back(tensor_dim(a, b, n));
    diffs.push_back(n == lo ? Matrix(0, dims.back(), f) : tensor_diff_block(a, b, n));
  }
  return ChainComplex(f, lo, std::move(dims), std::move(diffs));
}

ChainMap tensor_maps(const ChainMap& g, const ChainMap& h) {
  const ChainComplex src = tensor_complexes(g.source(), h.source());
  const ChainComplex tgt = tensor_complexes(g.target(), h.target());
  return ChainMap::from_fn(src, tgt, [&](int n) { return tensor_map_block(g, h, n); });
}

ChainComplex shift(const ChainComplex& c, int k) {
  if (c.empty_support()) return c;
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = c.lo(); t <= c.hi(); ++t) {
    dims.push_back(c.dim(t));
    diffs.push_back(sign(c.diff(t), k));
  }
  return ChainComplex(c.field(), c.lo() + k, std::move(dims), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int k) {
  return ChainMap::from_fn(shift(f.source(), k), shift(f.target(), k),
                           [&](int t) { return f.block(t - k); });
}

}  // namespace smc
