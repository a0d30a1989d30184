#include "smc/reedy.hpp"

#include <algorithm>

#include "smc/error.hpp"

namespace smc {
namespace {

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

/// Complex on lo..hi from per-degree dims and differentials.
template <class Dim, class Diff>
ChainComplex assemble(const Field& f, int lo, int hi, Dim&& dim, Diff&& diff) {
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = lo; t <= hi; ++t) {
    dims.push_back(dim(t));
    diffs.push_back(t == lo ? Matrix(0, dims.back(), f) : diff(t));
  }
  return ChainComplex(f, lo, std::move(dims), std::move(diffs));
}

/// One linear relation family between two summands of a layout:
/// x ∈ parts(src) contributes e_a(x) - e_b(op x) (colimits) or the equation
/// x_b - op x_a = 0 (limits).
struct Relation {
  std::size_t a;
  std::size_t b;
  ChainMap op;
};

void require_level(const SimplicialObject& x, int n, const char* where) {
  if (n < 0 || n > x.truncation())
    throw InvalidInput(std::string(where) + ": level " + std::to_string(n) + " outside 0.." +
                       std::to_string(x.truncation()));
}

Matrix zero_if_missing(const Field& f, std::size_t r, std::size_t c) { return Matrix(r, c, f); }

}  // namespace

// ---- SummandLayout ----------------------------------------------------------------

SummandLayout::SummandLayout(std::vector<ChainComplex> p) : parts(std::move(p)) {
  bool any = false;
  for (const auto& c : parts) {
    if (c.empty_support()) continue;
    lo = any ? std::min(lo, c.lo()) : c.lo();
    hi = any ? std::max(hi, c.hi()) : c.hi();
    any = true;
  }
}

std::size_t SummandLayout::dim(int t) const {
  std::size_t d = 0;
  for (const auto& c : parts) d += c.dim(t);
  return d;
}

std::size_t SummandLayout::offset(int t, std::size_t k) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < k; ++j) d += parts[j].dim(t);
  return d;
}

Matrix SummandLayout::diff(int t, const Field& f) const {
  Matrix m(dim(t - 1), dim(t), f);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.place(r, c, p.diff(t));
    r += p.dim(t - 1);
    c += p.dim(t);
  }
  return m;
}

// ---- latching ------------------------------------------------------------------

Latching latching(const SimplicialObject& x, int n) {
  require_level(x, n, "latching");
  const Field& f = x.field();
  Latching out;
  out.n = n;
  std::map<std::pair<int, Monotone>, std::size_t> pos;  // keyed by (j, θ)
  std::vector<int>& level_of = out.levels;
  std::vector<ChainComplex> parts;
  for (int j = 0; j < n; ++j)
    for (auto& theta : monotone_maps(n, j)) {
      pos[{j, theta}] = out.index.size();
      out.index.push_back(std::move(theta));
      level_of.push_back(j);
      parts.push_back(x.level(j));
    }
  out.layout = SummandLayout(std::move(parts));

  // θ = u ∘ θ' for elementary u : [j'] -> [j]; x ∈ X_j at θ ~ X(u) x at θ'.
  std::vector<Relation> rel;
  for (std::size_t b = 0; b < out.index.size(); ++b) {
    const int jp = level_of[b];
    for (int i = 0; jp + 1 < n && i <= jp + 1; ++i)
      rel.push_back({pos.at({jp + 1, compose(coface(jp + 1, i), out.index[b])}), b, x.face(jp + 1, i)});
    for (int i = 0; jp >= 1 && i <= jp - 1; ++i)
      rel.push_back({pos.at({jp - 1, compose(codegeneracy(jp - 1, i), out.index[b])}), b, x.degeneracy(jp - 1, i)});
  }

  const SummandLayout& lay = out.layout;
  for (int t = lay.lo; t <= lay.hi; ++t) {
    std::size_t cols = 0;
    for (const auto& r : rel) cols += r.op.source().dim(t);
    Matrix m(lay.dim(t), cols, f);
    std::size_t c = 0;
    for (const auto& r : rel) {
      const std::size_t w = r.op.source().dim(t);
      if (w == 0) continue;
      m.place(lay.offset(t, r.a), c, Matrix::identity(w, f));
      m.place(lay.offset(t, r.b), c, -r.op.block(t));
      c += w;
    }
    out.degrees.emplace(t, cokernel(m));
  }
  out.object = assemble(
      f, lay.lo, lay.hi, [&](int t) { return out.degrees.at(t).dim(); },
      [&](int t) { return out.degrees.at(t - 1).proj * lay.diff(t, f) * out.degrees.at(t).section; });

  std::vector<ChainMap> structure;
  for (std::size_t k = 0; k < out.index.size(); ++k) structure.push_back(x.apply(out.index[k], level_of[k]));
  out.to_level = ChainMap::from_fn(out.object, x.level(n), [&](int t) {
    Matrix m(x.level(n).dim(t), lay.dim(t), f);
    for (std::size_t k = 0; k < structure.size(); ++k) m.place(0, lay.offset(t, k), structure[k].block(t));
    auto it = out.degrees.find(t);
    if (it == out.degrees.end()) return zero_if_missing(f, x.level(n).dim(t), 0);
    return m * it->second.section;
  });
  return out;
}

ChainMap Latching::inclusion(std::size_t k) const {
  const ChainComplex& part = layout.parts.at(k);
  return ChainMap::from_fn(part, object, [&](int t) {
    auto it = degrees.find(t);
    if (it == degrees.end()) return Matrix(object.dim(t), part.dim(t), part.field());
    return it->second.proj.block(0, layout.offset(t, k), it->second.dim(), part.dim(t));
  });
}

ChainMap latching_map(const SimplicialMap& f, const Latching& lx, const Latching& ly) {
  if (lx.n != ly.n) throw ShapeError("latching_map: levels differ");
  const Field& fld = f.field();
  return ChainMap::from_fn(lx.object, ly.object, [&](int t) {
    auto sx = lx.degrees.find(t);
    auto sy = ly.degrees.find(t);
    if (sx == lx.degrees.end() || sy == ly.degrees.end()) return Matrix(ly.object.dim(t), lx.object.dim(t), fld);
    Matrix big(ly.layout.dim(t), lx.layout.dim(t), fld);
    for (std::size_t k = 0; k < lx.index.size(); ++k) {
      const int j = lx.levels[k];
      big.place(ly.layout.offset(t, k), lx.layout.offset(t, k), f.level(j).block(t));
    }
    return sy->second.proj * big * sx->second.section;
  });
}

// ---- matching --------------------------------------------------------------------

Matching matching(const SimplicialObject& x, int n) {
  require_level(x, n, "matching");
  const Field& f = x.field();
  Matching out;
  out.n = n;
  std::map<Monotone, std::size_t> pos;
  std::vector<ChainComplex> parts;
  for (int j = 0; j < n; ++j)
    for (auto& alpha : monotone_maps(j, n)) {
      pos[alpha] = out.index.size();
      out.index.push_back(std::move(alpha));
      parts.push_back(x.level(j));
    }
  out.layout = SummandLayout(std::move(parts));

  // x_{α∘u} = X(u) x_α for elementary u : [j'] -> [j].
  std::vector<Relation> rel;
  for (std::size_t a = 0; a < out.index.size(); ++a) {
    const int j = static_cast<int>(out.index[a].size()) - 1;
    for (int i = 0; j >= 1 && i <= j; ++i)
      rel.push_back({a, pos.at(compose(out.index[a], coface(j, i))), x.face(j, i)});
    for (int i = 0; j + 1 < n && i <= j; ++i)
      rel.push_back({a, pos.at(compose(out.index[a], codegeneracy(j, i))), x.degeneracy(j, i)});
  }

  const SummandLayout& lay = out.layout;
  for (int t = lay.lo; t <= lay.hi; ++t) {
    std::size_t rows = 0;
    for (const auto& r : rel) rows += r.op.target().dim(t);
    Matrix m(rows, lay.dim(t), f);
    std::size_t row = 0;
    for (const auto& r : rel) {
      const std::size_t h = r.op.target().dim(t);
      if (h == 0) continue;
      m.place(row, lay.offset(t, r.b), Matrix::identity(h, f));
      m.accumulate(row, lay.offset(t, r.a), -r.op.block(t));
      row += h;
    }
    out.degrees.emplace(t, kernel(m));
  }
  out.object = assemble(
      f, lay.lo, lay.hi, [&](int t) { return out.degrees.at(t).dim(); },
      [&](int t) { return out.degrees.at(t - 1).coords() * lay.diff(t, f) * out.degrees.at(t).basis; });

  std::vector<ChainMap> structure;
  for (const auto& alpha : out.index) structure.push_back(x.apply(alpha, n));
  out.from_level = ChainMap::from_fn(x.level(n), out.object, [&](int t) {
    auto it = out.degrees.find(t);
    if (it == out.degrees.end()) return zero_if_missing(f, 0, x.level(n).dim(t));
    Matrix m(lay.dim(t), x.level(n).dim(t), f);
    for (std::size_t k = 0; k < structure.size(); ++k) m.place(lay.offset(t, k), 0, structure[k].block(t));
    return it->second.coords() * m;
  });
  return out;
}

ChainMap Matching::component(std::size_t k) const {
  const ChainComplex& part = layout.parts.at(k);
  return ChainMap::from_fn(object, part, [&](int t) {
    auto it = degrees.find(t);
    if (it == degrees.end()) return Matrix(part.dim(t), object.dim(t), part.field());
    return it->second.basis.block(layout.offset(t, k), 0, part.dim(t), it->second.dim());
  });
}

std::size_t Matching::find(const Monotone& alpha) const {
  auto it = std::find(index.begin(), index.end(), alpha);
  if (it == index.end()) throw InvalidInput("Matching::find: " + label(alpha) + " is not an object of the index category");
  return static_cast<std::size_t>(it - index.begin());
}

ChainMap matching_map(const SimplicialMap& f, const Matching& mx, const Matching& my) {
  if (mx.n != my.n) throw ShapeError("matching_map: levels differ");
  const Field& fld = f.field();
  return ChainMap::from_fn(mx.object, my.object, [&](int t) {
    auto sx = mx.degrees.find(t);
    auto sy = my.degrees.find(t);
    if (sx == mx.degrees.end() || sy == my.degrees.end()) return Matrix(my.object.dim(t), mx.object.dim(t), fld);
    Matrix big(my.layout.dim(t), mx.layout.dim(t), fld);
    for (std::size_t k = 0; k < mx.index.size(); ++k) {
      const int j = static_cast<int>(mx.index[k].size()) - 1;
      big.place(my.layout.offset(t, k), mx.layout.offset(t, k), f.level(j).block(t));
    }
    return sy->second.coords() * big * sx->second.basis;
  });
}

// ---- cotensor --------------------------------------------------------------------

Cotensor cotensor0(const SimplicialObject& x, const FinSimplicialSet& k) {
  if (x.truncation() != k.truncation()) throw ShapeError("cotensor0: truncation mismatch");
  const Field& f = x.field();
  Cotensor out;
  out.shape = k;
  out.degens = x.degeneracies();
  std::map<std::pair<int, std::size_t>, std::size_t> cell_of;
  std::vector<ChainComplex> parts;
  for (int n = 0; n <= k.truncation(); ++n)
    for (auto s : k.nondegenerate(n)) {
      cell_of[{n, s}] = out.cells.size();
      out.cells.emplace_back(n, s);
      parts.push_back(x.level(n));
    }
  out.layout = SummandLayout(std::move(parts));

  // d_i x_σ = X(s-word) x_σ' where d_i σ = s-word σ'.
  struct Eq {
    std::size_t cell;
    ChainMap face;
    std::size_t other;
    ChainMap degen;
  };
  std::vector<Eq> eqs;
  for (std::size_t c = 0; c < out.cells.size(); ++c) {
    const auto [n, s] = out.cells[c];
    for (int i = 0; n >= 1 && i <= n; ++i) {
      const auto dec = k.decompose(n - 1, k.face(n, i, s));
      ChainMap deg = ChainMap::identity(x.level(dec.level));
      int lv = dec.level;
      for (int j : dec.degeneracies) deg = compose(x.degeneracy(lv++, j), deg);
      eqs.push_back({c, x.face(n, i), cell_of.at({dec.level, dec.simplex}), std::move(deg)});
    }
  }

  const SummandLayout& lay = out.layout;
  for (int t = lay.lo; t <= lay.hi; ++t) {
    std::size_t rows = 0;
    for (const auto& e : eqs) rows += e.face.target().dim(t);
    Matrix m(rows, lay.dim(t), f);
    std::size_t row = 0;
    for (const auto& e : eqs) {
      const std::size_t h = e.face.target().dim(t);
      if (h == 0) continue;
      m.accumulate(row, lay.offset(t, e.cell), e.face.block(t));
      m.accumulate(row, lay.offset(t, e.other), -e.degen.block(t));
      row += h;
    }
    out.degrees.emplace(t, kernel(m));
  }
  out.object = assemble(
      f, lay.lo, lay.hi, [&](int t) { return out.degrees.at(t).dim(); },
      [&](int t) { return out.degrees.at(t - 1).coords() * lay.diff(t, f) * out.degrees.at(t).basis; });
  return out;
}

ChainMap Cotensor::component(int n, std::size_t simplex) const {
  const auto dec = shape.decompose(n, simplex);
  const auto it = std::find(cells.begin(), cells.end(), std::make_pair(dec.level, dec.simplex));
  const std::size_t c = static_cast<std::size_t>(it - cells.begin());
  const ChainComplex& part = layout.parts.at(c);
  ChainMap out = ChainMap::from_fn(object, part, [&](int t) {
    auto d = degrees.find(t);
    if (d == degrees.end()) return Matrix(part.dim(t), object.dim(t), part.field());
    return d->second.basis.block(layout.offset(t, c), 0, part.dim(t), d->second.dim());
  });
  int lv = dec.level;
  for (int j : dec.degeneracies) out = compose(degens.at(idx(lv)).at(idx(j)), out), ++lv;
  return out;
}

ChainMap Cotensor::lift(const ChainComplex& z,
                        const std::function<ChainMap(int, std::size_t)>& cell_map) const {
  std::vector<ChainMap> maps;
  for (const auto& [n, s] : cells) maps.push_back(cell_map(n, s));
  const Field& f = z.field();
  return ChainMap::from_fn(z, object, [&](int t) {
    auto d = degrees.find(t);
    if (d == degrees.end()) return Matrix(object.dim(t), z.dim(t), f);
    Matrix v(layout.dim(t), z.dim(t), f);
    for (std::size_t c = 0; c < maps.size(); ++c) v.place(layout.offset(t, c), 0, maps[c].block(t));
    if (!d->second.contains(v))
      throw InvalidInput("Cotensor::lift: family is not compatible in degree " + std::to_string(t));
    return d->second.coords() * v;
  });
}

ChainMap cotensor_restrict(const Cotensor& xl, const Cotensor& xk, const SSetMap& i) {
  return xk.lift(xl.object, [&](int n, std::size_t s) { return xl.component(n, i(n, s)); });
}

ChainMap cotensor_push(const Cotensor& xk, const Cotensor& yk, const SimplicialMap& f) {
  return yk.lift(xk.object, [&](int n, std::size_t s) { return compose(f.level(n), xk.component(n, s)); });
}

ChainMap level_to_simplex_cotensor(const SimplicialObject& x, int n, const Cotensor& simplex_cot) {
  return simplex_cot.lift(x.level(n), [&](int m, std::size_t s) {
    return x.apply(monotone_maps(m, n).at(s), n);
  });
}

ChainMap matching_to_boundary_cotensor(const Matching& m, const Cotensor& boundary_cot) {
  const int n = m.n;
  return boundary_cot.lift(m.object, [&](int l, std::size_t s) {
    std::vector<Monotone> faces;
    for (auto& a : monotone_maps(l, n))
      if (!is_surjective(a, n)) faces.push_back(std::move(a));
    return m.component(m.find(faces.at(s)));
  });
}

}  // namespace smc
