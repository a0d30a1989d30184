#include "smc/realization.hpp"

#include "smc/error.hpp"
#include "smc/linear_system.hpp"

namespace smc {

std::string to_string(TotalMode m) {
  switch (m) {
    case TotalMode::full: return "full";
    case TotalMode::normalized: return "normalized";
    case TotalMode::moore: return "moore";
  }
  return "?";
}

std::string to_string(Exactness e) { return e == Exactness::exact ? "exact" : "truncation-limited"; }

namespace {

/// Σ_k maps[k] ∘ proj_k : ⊕ sources -> target.
ChainMap sum_out(const std::vector<ChainMap>& maps, const ChainComplex& target) {
  std::vector<ChainComplex> parts;
  for (const auto& m : maps) parts.push_back(m.source());
  const ChainComplex src = direct_sum(parts, target.field());
  ChainMap out = ChainMap::zero(src, target);
  for (std::size_t k = 0; k < maps.size(); ++k)
    out = out + compose(maps[k], summand_projection(parts, k, target.field()));
  return out;
}

/// Σ_k incl_k ∘ maps[k] : source -> ⊕ targets.
ChainMap sum_in(const std::vector<ChainMap>& maps, const ChainComplex& source) {
  std::vector<ChainComplex> parts;
  for (const auto& m : maps) parts.push_back(m.target());
  const ChainComplex tgt = direct_sum(parts, source.field());
  ChainMap out = ChainMap::zero(source, tgt);
  for (std::size_t k = 0; k < maps.size(); ++k)
    out = out + compose(summand_inclusion(parts, k, source.field()), maps[k]);
  return out;
}

ChainMap alternating_face_sum(const SimplicialObject& x, int s) {
  ChainMap d = ChainMap::zero(x.level(s), x.level(s - 1));
  for (int i = 0; i <= s; ++i) d = (i % 2 == 0) ? d + x.face(s, i) : d - x.face(s, i);
  return d;
}

Cokernel degenerate_quotient(const SimplicialObject& x, int s) {
  if (s == 0) return cokernel(ChainMap::zero(zero_complex(x.field()), x.level(0)));
  std::vector<ChainMap> degs;
  for (int i = 0; i < s; ++i) degs.push_back(x.degeneracy(s - 1, i));
  return cokernel(sum_out(degs, x.level(s)));
}

Kernel moore_kernel(const SimplicialObject& x, int s) {
  if (s == 0) return kernel(ChainMap::zero(x.level(0), zero_complex(x.field())));
  std::vector<ChainMap> faces;
  for (int i = 1; i <= s; ++i) faces.push_back(x.face(s, i));
  return kernel(sum_in(faces, x.level(s)));
}

/// Columns of the double complex and horizontal maps h_s : C_s -> C_{s-1}.
struct Columns {
  std::vector<ChainComplex> cols;
  std::vector<ChainMap> horiz;  // horiz[s] for s >= 1; horiz[0] unused
  std::vector<Cokernel> cok;
  std::vector<Kernel> ker;
};

Columns columns(const SimplicialObject& x, TotalMode mode) {
  Columns c;
  const int n = x.truncation();
  for (int s = 0; s <= n; ++s) {
    switch (mode) {
      case TotalMode::full:
        c.cols.push_back(x.level(s));
        c.horiz.push_back(s == 0 ? ChainMap() : alternating_face_sum(x, s));
        break;
      case TotalMode::normalized:
        c.cok.push_back(degenerate_quotient(x, s));
        c.cols.push_back(c.cok.back().object);
        c.horiz.push_back(s == 0 ? ChainMap()
                                 : c.cok[s].descend(compose(c.cok[s - 1].projection, alternating_face_sum(x, s))));
        break;
      case TotalMode::moore:
        c.ker.push_back(moore_kernel(x, s));
        c.cols.push_back(c.ker.back().object);
        c.horiz.push_back(s == 0 ? ChainMap()
                                 : c.ker[s - 1].lift(compose(x.face(s, 0), c.ker[s].inclusion)));
        break;
    }
  }
  return c;
}

std::pair<int, int> total_range(const std::vector<ChainComplex>& cols) {
  int lo = 0, hi = -1;
  bool any = false;
  for (std::size_t s = 0; s < cols.size(); ++s) {
    if (cols[s].empty_support()) continue;
    const int a = cols[s].lo() + static_cast<int>(s), b = cols[s].hi() + static_cast<int>(s);
    lo = any ? std::min(lo, a) : a;
    hi = any ? std::max(hi, b) : b;
    any = true;
  }
  return {lo, hi};
}

std::size_t total_offset(const std::vector<ChainComplex>& cols, int n, int s) {
  std::size_t off = 0;
  for (int r = 0; r < s; ++r) off += cols[static_cast<std::size_t>(r)].dim(n - r);
  return off;
}

ChainComplex assemble(const Columns& c, const Field& f) {
  const auto& cols = c.cols;
  const int top = static_cast<int>(cols.size()) - 1;
  const auto [lo, hi] = total_range(cols);
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    dims.push_back(total_offset(cols, n, top + 1));
    Matrix d(total_offset(cols, n - 1, top + 1), dims.back(), f);
    for (int s = 0; s <= top; ++s) {
      const auto& col = cols[static_cast<std::size_t>(s)];
      const int t = n - s;
      if (col.dim(t) == 0) continue;
      const std::size_t src = total_offset(cols, n, s);
      if (col.dim(t - 1) > 0) {
        const Matrix v = col.diff(t);
        d.accumulate(total_offset(cols, n - 1, s), src, s % 2 == 0 ? v : -v);
      }
      if (s > 0 && cols[static_cast<std::size_t>(s - 1)].dim(t) > 0)
        d.accumulate(total_offset(cols, n - 1, s - 1), src, c.horiz[static_cast<std::size_t>(s)].block(t));
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(f, lo, std::move(dims), std::move(diffs));
}

}  // namespace

Exactness exactness(const SimplicialObject& x) {
  return degenerate_quotient(x, x.truncation()).object.is_zero() ? Exactness::exact
                                                                 : Exactness::truncation_limited;
}

TotalComplexReport total_complex(const SimplicialObject& x, TotalMode mode) {
  require_valid(x, "total_complex");
  TotalComplexReport r;
  r.complex = assemble(columns(x, mode), x.field());
  r.mode = mode;
  r.flag = exactness(x);
  require_valid(r.complex, "total_complex");
  return r;
}

ChainMap total_map(const SimplicialMap& f, TotalMode mode) {
  const Columns cx = columns(f.source(), mode);
  const Columns cy = columns(f.target(), mode);
  const ChainComplex tx = assemble(cx, f.field());
  const ChainComplex ty = assemble(cy, f.field());
  const int top = f.truncation();
  std::vector<ChainMap> col_maps;
  for (int s = 0; s <= top; ++s) {
    const auto k = static_cast<std::size_t>(s);
    switch (mode) {
      case TotalMode::full: col_maps.push_back(f.level(s)); break;
      case TotalMode::normalized:
        col_maps.push_back(cx.cok[k].descend(compose(cy.cok[k].projection, f.level(s))));
        break;
      case TotalMode::moore:
        col_maps.push_back(cy.ker[k].lift(compose(f.level(s), cx.ker[k].inclusion)));
        break;
    }
  }
  return ChainMap::from_fn(tx, ty, [&](int n) {
    Matrix m(ty.dim(n), tx.dim(n), f.field());
    for (int s = 0; s <= top; ++s) {
      const auto& g = col_maps[static_cast<std::size_t>(s)];
      if (g.source().dim(n - s) == 0 || g.target().dim(n - s) == 0) continue;
      m.place(total_offset(cy.cols, n, s), total_offset(cx.cols, n, s), g.block(n - s));
    }
    return m;
  });
}

RealizationVerdict realization_we(const SimplicialMap& f) {
  require_valid(f, "realization_we");
  RealizationVerdict v;
  v.we = is_quasi_iso(total_map(f, TotalMode::normalized));
  const bool exact =
      exactness(f.source()) == Exactness::exact && exactness(f.target()) == Exactness::exact;
  v.flag = exact ? Exactness::exact : Exactness::truncation_limited;
  return v;
}

ChainComplex realize(const SimplicialObject& y) {
  require_valid(y, "realize");
  const Field& f = y.field();
  const int top = y.truncation();
  std::vector<ChainComplex> cells;
  for (int n = 0; n <= top; ++n) cells.push_back(simplex_chains(n, f));
  auto piece = [&](int n) -> const ChainComplex& { return cells[static_cast<std::size_t>(n)]; };

  struct Relation {
    int n, m;      // θ : [m] -> [n]
    ChainMap act;  // Y(θ) : Y_n -> Y_m
    ChainMap push; // θ_* : N(Δ[m]) -> N(Δ[n])
  };
  std::vector<Relation> rels;
  for (int n = 0; n <= top; ++n) {
    for (int i = 0; n > 0 && i <= n; ++i)
      rels.push_back({n, n - 1, y.face(n, i), simplex_chain_map(coface(n, i), n, f)});
    for (int j = 0; n < top && j <= n; ++j)
      rels.push_back({n, n + 1, y.degeneracy(n, j), simplex_chain_map(codegeneracy(n, j), n, f)});
  }

  int lo = 0, hi = -1;
  bool any = false;
  for (int n = 0; n <= top; ++n) {
    const auto& yn = y.level(n);
    if (yn.empty_support()) continue;
    lo = any ? std::min(lo, yn.lo()) : yn.lo();
    hi = any ? std::max(hi, yn.hi() + n) : yn.hi() + n;
    any = true;
  }
  auto offset = [&](int t, int upto) {
    std::size_t off = 0;
    for (int n = 0; n < upto; ++n) off += tensor_dim(y.level(n), piece(n), t);
    return off;
  };

  std::map<int, Quotient> q;
  for (int t = lo - 1; t <= hi; ++t) {
    const std::size_t amb = offset(t, top + 1);
    std::size_t cols = 0;
    for (const auto& r : rels) cols += tensor_dim(y.level(r.n), piece(r.m), t);
    Matrix rel(amb, cols, f);
    std::size_t c = 0;
    for (const auto& r : rels) {
      const std::size_t w = tensor_dim(y.level(r.n), piece(r.m), t);
      if (w == 0) continue;
      const ChainMap id_m = ChainMap::identity(piece(r.m));
      const ChainMap id_y = ChainMap::identity(y.level(r.n));
      rel.accumulate(offset(t, r.m), c, tensor_map_block(r.act, id_m, t));
      rel.accumulate(offset(t, r.n), c, -tensor_map_block(id_y, r.push, t));
      c += w;
    }
    q.emplace(t, quotient(image(rel)));
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = lo; t <= hi; ++t) {
    Matrix d(offset(t - 1, top + 1), offset(t, top + 1), f);
    for (int n = 0; n <= top; ++n) {
      const Matrix b = tensor_diff_block(y.level(n), piece(n), t);
      if (b.size() > 0) d.place(offset(t - 1, n), offset(t, n), b);
    }
    dims.push_back(q.at(t).dim());
    diffs.push_back(q.at(t - 1).proj * d * q.at(t).section);
  }
  ChainComplex out(f, lo, std::move(dims), std::move(diffs));
  return any ? out.trimmed() : ChainComplex(f);
}

SimplicialObject sing(const ChainComplex& a, int truncation) {
  require_valid(a, "sing");
  const Field& f = a.field();
  std::vector<ChainComplex> levels;
  std::vector<std::vector<ChainMap>> faces(static_cast<std::size_t>(truncation) + 1);
  std::vector<std::vector<ChainMap>> degens(static_cast<std::size_t>(truncation) + 1);
  for (int n = 0; n <= truncation; ++n) levels.push_back(hom_complex(simplex_chains(n, f), a));
  for (int n = 0; n <= truncation; ++n) {
    for (int i = 0; n > 0 && i <= n; ++i)
      faces[static_cast<std::size_t>(n)].push_back(hom_precompose(simplex_chain_map(coface(n, i), n, f), a));
    for (int j = 0; n < truncation && j <= n; ++j)
      degens[static_cast<std::size_t>(n)].push_back(
          hom_precompose(simplex_chain_map(codegeneracy(n, j), n, f), a));
  }
  return SimplicialObject(truncation, std::move(levels), std::move(faces), std::move(degens));
}

SimplicialMap sing(const ChainMap& g, int truncation) {
  const Field& f = g.field();
  std::vector<ChainMap> levels;
  for (int n = 0; n <= truncation; ++n) levels.push_back(hom_postcompose(simplex_chains(n, f), g));
  return SimplicialMap(sing(g.source(), truncation), sing(g.target(), truncation), std::move(levels));
}

std::size_t hom_dim(const SimplicialObject& x, const SimplicialObject& y) {
  MapSystem sys(x.field());
  const SimplicialUnknown u = add_simplicial_unknown(sys, x, y);
  add_naturality(sys, u);
  return sys.nullity();
}

std::size_t mapping_level_dim(const SimplicialObject& x, const SimplicialObject& y, int n) {
  return hom_dim(tensor(x, standard_simplex(n, x.truncation())), y);
}

}  // namespace smc
