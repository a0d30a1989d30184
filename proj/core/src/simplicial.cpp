#include "smc/simplicial.hpp"

#include <functional>

#include "smc/error.hpp"

namespace smc {
namespace {

std::string at_level(int n) { return " at level " + std::to_string(n); }

std::size_t idx(int n) { return static_cast<std::size_t>(n); }

/// First chain degree where two parallel maps disagree.
std::optional<int> first_difference(const ChainMap& a, const ChainMap& b) {
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  for (int t = lo; t <= hi; ++t)
    if (!(a.block(t) == b.block(t))) return t;
  return std::nullopt;
}

/// Copies of `c` indexed by `count` simplices, simplex-major.
ChainComplex replicate(const ChainComplex& c, std::size_t count) {
  return direct_sum(std::vector<ChainComplex>(count, c), c.field());
}

/// Map ⊕_σ A -> ⊕_τ B placing φ in block (r(σ), σ).
ChainMap spread(const ChainMap& phi, const ChainComplex& src, const ChainComplex& tgt,
                std::size_t src_count, const std::function<std::size_t(std::size_t)>& r) {
  return ChainMap::from_fn(src, tgt, [&](int t) {
    Matrix m(tgt.dim(t), src.dim(t), phi.field());
    const Matrix b = phi.block(t);
    if (b.size() == 0) return m;
    for (std::size_t s = 0; s < src_count; ++s) m.place(r(s) * b.rows(), s * b.cols(), b);
    return m;
  });
}

template <class Op>
SimplicialObject build(int truncation, std::vector<ChainComplex> levels, Op&& op) {
  std::vector<std::vector<ChainMap>> faces(idx(truncation + 1)), degens(idx(truncation + 1));
  for (int n = 0; n <= truncation; ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i) faces[idx(n)].push_back(op(true, n, i));
    for (int i = 0; n < truncation && i <= n; ++i) degens[idx(n)].push_back(op(false, n, i));
  }
  return SimplicialObject(truncation, std::move(levels), std::move(faces), std::move(degens));
}

const ChainMap& structure(const SimplicialObject& x, bool is_face, int n, int i) {
  return is_face ? x.face(n, i) : x.degeneracy(n, i);
}

int target_level(bool is_face, int n) { return is_face ? n - 1 : n + 1; }

}  // namespace

// ---- SimplicialObject ------------------------------------------------------

SimplicialObject::SimplicialObject(int truncation, std::vector<ChainComplex> levels,
                                   std::vector<std::vector<ChainMap>> faces,
                                   std::vector<std::vector<ChainMap>> degeneracies)
    : truncation_(truncation),
      levels_(std::move(levels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (truncation_ < 0) throw InvalidInput("SimplicialObject: negative truncation");
  const std::size_t count = idx(truncation_ + 1);
  if (levels_.size() != count) throw ShapeError("SimplicialObject: expected N+1 levels");
  if (faces_.size() != count) throw ShapeError("SimplicialObject: expected N+1 face lists");
  if (degeneracies_.size() != count) throw ShapeError("SimplicialObject: expected N+1 degeneracy lists");
  const Field f = levels_.front().field();
  for (int n = 0; n <= truncation_; ++n) {
    require_same_field(f, levels_[idx(n)].field(), "SimplicialObject");
    if (faces_[idx(n)].size() != (n == 0 ? 0 : idx(n + 1)))
      throw ShapeError("SimplicialObject: wrong number of faces" + at_level(n));
    if (degeneracies_[idx(n)].size() != (n == truncation_ ? 0 : idx(n + 1)))
      throw ShapeError("SimplicialObject: wrong number of degeneracies" + at_level(n));
    for (const auto& d : faces_[idx(n)]) {
      if (!(d.source() == levels_[idx(n)]) || !(d.target() == levels_[idx(n - 1)]))
        throw ShapeError("SimplicialObject: face endpoints do not match levels" + at_level(n));
    }
    for (const auto& s : degeneracies_[idx(n)]) {
      if (!(s.source() == levels_[idx(n)]) || !(s.target() == levels_[idx(n + 1)]))
        throw ShapeError("SimplicialObject: degeneracy endpoints do not match levels" + at_level(n));
    }
  }
}

const ChainMap& SimplicialObject::face(int n, int i) const {
  return faces_.at(idx(n)).at(idx(i));
}

const ChainMap& SimplicialObject::degeneracy(int n, int i) const {
  return degeneracies_.at(idx(n)).at(idx(i));
}

ChainMap SimplicialObject::apply(const Monotone& theta, int n) const {
  const OperatorWord w = operator_word(theta, n);
  ChainMap out = ChainMap::identity(level(n));
  int lv = n;
  for (int i : w.faces) out = compose(face(lv--, i), out);
  for (int j : w.degeneracies) out = compose(degeneracy(lv++, j), out);
  return out;
}

bool SimplicialObject::is_zero() const {
  for (const auto& c : levels_)
    if (!c.is_zero()) return false;
  return true;
}

// ---- SimplicialMap ------------------------------------------------------------

SimplicialMap::SimplicialMap(SimplicialObject source, SimplicialObject target,
                             std::vector<ChainMap> levels)
    : source_(std::move(source)), target_(std::move(target)), levels_(std::move(levels)) {
  if (source_.truncation() != target_.truncation()) throw ShapeError("SimplicialMap: truncation mismatch");
  require_same_field(source_.field(), target_.field(), "SimplicialMap");
  if (levels_.size() != idx(source_.truncation() + 1)) throw ShapeError("SimplicialMap: expected N+1 levels");
  for (int n = 0; n <= source_.truncation(); ++n) {
    if (!(levels_[idx(n)].source() == source_.level(n)) || !(levels_[idx(n)].target() == target_.level(n)))
      throw ShapeError("SimplicialMap: level map endpoints do not match" + at_level(n));
  }
}

SimplicialMap SimplicialMap::identity(const SimplicialObject& x) {
  std::vector<ChainMap> lv;
  for (const auto& c : x.levels()) lv.push_back(ChainMap::identity(c));
  return SimplicialMap(x, x, std::move(lv));
}

SimplicialMap SimplicialMap::zero(const SimplicialObject& x, const SimplicialObject& y) {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= x.truncation(); ++n) lv.push_back(ChainMap::zero(x.level(n), y.level(n)));
  return SimplicialMap(x, y, std::move(lv));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!(f.target() == g.source())) throw ShapeError("compose: SimplicialMap endpoints differ");
  std::vector<ChainMap> lv;
  for (int n = 0; n <= f.truncation(); ++n) lv.push_back(compose(g.level(n), f.level(n)));
  return SimplicialMap(f.source(), g.target(), std::move(lv));
}

SimplicialMap operator+(const SimplicialMap& a, const SimplicialMap& b) {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= a.truncation(); ++n) lv.push_back(a.level(n) + b.level(n));
  return SimplicialMap(a.source(), a.target(), std::move(lv));
}

SimplicialMap operator-(const SimplicialMap& a) {
  std::vector<ChainMap> lv;
  for (const auto& m : a.levels()) lv.push_back(-m);
  return SimplicialMap(a.source(), a.target(), std::move(lv));
}

// ---- validation -------------------------------------------------------------

Report validate_sobj(const SimplicialObject& x) {
  const int N = x.truncation();
  for (int n = 0; n <= N; ++n) {
    if (auto r = validate_complex(x.level(n)); !r) return Report::fail("level " + std::to_string(n) + ": " + r.where);
    for (int i = 0; n >= 1 && i <= n; ++i)
      if (auto r = validate_map(x.face(n, i)); !r)
        return Report::fail("d_" + std::to_string(i) + at_level(n) + ": " + r.where);
    for (int i = 0; n < N && i <= n; ++i)
      if (auto r = validate_map(x.degeneracy(n, i)); !r)
        return Report::fail("s_" + std::to_string(i) + at_level(n) + ": " + r.where);
  }
  auto check = [](const char* id, int n, int i, int j, const ChainMap& a, const ChainMap& b) -> Report {
    if (auto t = first_difference(a, b))
      return Report::fail(std::string(id) + " fails at n=" + std::to_string(n) + " i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " degree=" + std::to_string(*t));
    return Report::pass();
  };
  for (int n = 0; n <= N; ++n) {
    if (n >= 2) {
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (auto r = check("d_i d_j = d_{j-1} d_i", n, i, j, compose(x.face(n - 1, i), x.face(n, j)),
                             compose(x.face(n - 1, j - 1), x.face(n, i)));
              !r)
            return r;
    }
    if (n + 2 <= N) {
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (auto r = check("s_i s_j = s_{j+1} s_i", n, i, j, compose(x.degeneracy(n + 1, i), x.degeneracy(n, j)),
                             compose(x.degeneracy(n + 1, j + 1), x.degeneracy(n, i)));
              !r)
            return r;
    }
    if (n + 1 <= N) {
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n + 1; ++i) {
          const ChainMap lhs = compose(x.face(n + 1, i), x.degeneracy(n, j));
          ChainMap rhs;
          if (i < j) {
            rhs = compose(x.degeneracy(n - 1, j - 1), x.face(n, i));
          } else if (i == j || i == j + 1) {
            rhs = ChainMap::identity(x.level(n));
          } else {
            rhs = compose(x.degeneracy(n - 1, j), x.face(n, i - 1));
          }
          if (auto r = check("d_i s_j", n + 1, i, j, lhs, rhs); !r) return r;
        }
      }
    }
  }
  return Report::pass();
}

Report validate_smap(const SimplicialMap& f) {
  if (auto r = validate_sobj(f.source()); !r) return Report::fail("source: " + r.where);
  if (auto r = validate_sobj(f.target()); !r) return Report::fail("target: " + r.where);
  const int N = f.truncation();
  for (int n = 0; n <= N; ++n) {
    if (auto r = validate_map(f.level(n)); !r) return Report::fail("f" + at_level(n) + ": " + r.where);
    for (int i = 0; n >= 1 && i <= n; ++i) {
      if (auto t = first_difference(compose(f.level(n - 1), f.source().face(n, i)),
                                    compose(f.target().face(n, i), f.level(n))))
        return Report::fail("map does not commute with d_" + std::to_string(i) + at_level(n) +
                            " degree=" + std::to_string(*t));
    }
    for (int i = 0; n < N && i <= n; ++i) {
      if (auto t = first_difference(compose(f.level(n + 1), f.source().degeneracy(n, i)),
                                    compose(f.target().degeneracy(n, i), f.level(n))))
        return Report::fail("map does not commute with s_" + std::to_string(i) + at_level(n) +
                            " degree=" + std::to_string(*t));
    }
  }
  return Report::pass();
}

void require_valid(const SimplicialObject& x, const char* where) {
  if (auto r = validate_sobj(x); !r) throw InvalidInput(std::string(where) + ": " + r.where);
}

void require_valid(const SimplicialMap& f, const char* where) {
  if (auto r = validate_smap(f); !r) throw InvalidInput(std::string(where) + ": " + r.where);
}

// ---- basic constructions --------------------------------------------------------

SimplicialObject zero_sobj(Field f, int truncation) { return constant(zero_complex(f), truncation); }

SimplicialObject constant(const ChainComplex& a, int truncation) {
  const ChainMap id = ChainMap::identity(a);
  return build(truncation, std::vector<ChainComplex>(idx(truncation + 1), a), [&](bool, int, int) { return id; });
}

SimplicialMap constant(const ChainMap& f, int truncation) {
  return SimplicialMap(constant(f.source(), truncation), constant(f.target(), truncation),
                       std::vector<ChainMap>(idx(truncation + 1), f));
}

SimplicialObject direct_sum(const SimplicialObject& x, const SimplicialObject& y) {
  if (x.truncation() != y.truncation()) throw ShapeError("direct_sum: truncation mismatch");
  std::vector<ChainComplex> levels;
  for (int n = 0; n <= x.truncation(); ++n) levels.push_back(direct_sum(x.level(n), y.level(n)));
  return build(x.truncation(), std::move(levels), [&](bool face, int n, int i) {
    return direct_sum(structure(x, face, n, i), structure(y, face, n, i));
  });
}

SimplicialMap direct_sum(const SimplicialMap& f, const SimplicialMap& g) {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= f.truncation(); ++n) lv.push_back(direct_sum(f.level(n), g.level(n)));
  return SimplicialMap(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()), std::move(lv));
}

SimplicialMap copair(const SimplicialMap& f, const SimplicialMap& g) {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= f.truncation(); ++n) lv.push_back(copair(f.level(n), g.level(n)));
  return SimplicialMap(direct_sum(f.source(), g.source()), f.target(), std::move(lv));
}

SimplicialMap pair(const SimplicialMap& f, const SimplicialMap& g) {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= f.truncation(); ++n) lv.push_back(pair(f.level(n), g.level(n)));
  return SimplicialMap(f.source(), direct_sum(f.target(), g.target()), std::move(lv));
}

SimplicialMap summand_inclusion(const SimplicialObject& x, const SimplicialObject& y, int k) {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= x.truncation(); ++n)
    lv.push_back(summand_inclusion({x.level(n), y.level(n)}, idx(k), x.field()));
  return SimplicialMap(k == 0 ? x : y, direct_sum(x, y), std::move(lv));
}

SimplicialMap summand_projection(const SimplicialObject& x, const SimplicialObject& y, int k) {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= x.truncation(); ++n)
    lv.push_back(summand_projection({x.level(n), y.level(n)}, idx(k), x.field()));
  return SimplicialMap(direct_sum(x, y), k == 0 ? x : y, std::move(lv));
}

// ---- tensors -------------------------------------------------------------------

SimplicialObject tensor(const SimplicialObject& x, const FinSimplicialSet& k) {
  if (x.truncation() != k.truncation()) throw ShapeError("tensor: truncation mismatch");
  std::vector<ChainComplex> levels;
  for (int n = 0; n <= x.truncation(); ++n) levels.push_back(replicate(x.level(n), k.size(n)));
  return build(x.truncation(), levels, [&](bool face, int n, int i) {
    const int m = target_level(face, n);
    return spread(structure(x, face, n, i), levels[idx(n)], levels[idx(m)], k.size(n),
                  [&](std::size_t s) { return face ? k.face(n, i, s) : k.degeneracy(n, i, s); });
  });
}

SimplicialObject tensor(const ChainComplex& a, const FinSimplicialSet& k) {
  return tensor(constant(a, k.truncation()), k);
}

SimplicialMap tensor(const SimplicialMap& f, const SSetMap& g) {
  if (f.truncation() != g.source().truncation()) throw ShapeError("tensor: truncation mismatch");
  const SimplicialObject src = tensor(f.source(), g.source());
  const SimplicialObject tgt = tensor(f.target(), g.target());
  std::vector<ChainMap> lv;
  for (int n = 0; n <= f.truncation(); ++n) {
    lv.push_back(spread(f.level(n), src.level(n), tgt.level(n), g.source().size(n),
                        [&](std::size_t s) { return g(n, s); }));
  }
  return SimplicialMap(src, tgt, std::move(lv));
}

SimplicialMap tensor(const SimplicialMap& f, const FinSimplicialSet& k) {
  return tensor(f, SSetMap::identity(k));
}

SimplicialMap tensor(const SimplicialObject& x, const SSetMap& g) {
  return tensor(SimplicialMap::identity(x), g);
}

// ---- kernels, cokernels, pushouts, pullbacks ---------------------------------------

SKernel kernel(const SimplicialMap& f) {
  const SimplicialObject& x = f.source();
  SKernel out;
  std::vector<ChainComplex> levels;
  for (int n = 0; n <= x.truncation(); ++n) {
    out.levels.push_back(kernel(f.level(n)));
    levels.push_back(out.levels.back().object);
  }
  out.object = build(x.truncation(), levels, [&](bool face, int n, int i) {
    const int m = target_level(face, n);
    return out.levels[idx(m)].lift(compose(structure(x, face, n, i), out.levels[idx(n)].inclusion));
  });
  std::vector<ChainMap> inc;
  for (const auto& k : out.levels) inc.push_back(k.inclusion);
  out.inclusion = SimplicialMap(out.object, x, std::move(inc));
  return out;
}

SimplicialMap SKernel::lift(const SimplicialMap& h) const {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= h.truncation(); ++n) lv.push_back(levels[idx(n)].lift(h.level(n)));
  return SimplicialMap(h.source(), object, std::move(lv));
}

SCokernel cokernel(const SimplicialMap& f) {
  const SimplicialObject& y = f.target();
  SCokernel out;
  std::vector<ChainComplex> levels;
  for (int n = 0; n <= y.truncation(); ++n) {
    out.levels.push_back(cokernel(f.level(n)));
    levels.push_back(out.levels.back().object);
  }
  out.object = build(y.truncation(), levels, [&](bool face, int n, int i) {
    const int m = target_level(face, n);
    return out.levels[idx(n)].descend(compose(out.levels[idx(m)].projection, structure(y, face, n, i)));
  });
  std::vector<ChainMap> proj;
  for (const auto& c : out.levels) proj.push_back(c.projection);
  out.projection = SimplicialMap(y, out.object, std::move(proj));
  return out;
}

SimplicialMap SCokernel::descend(const SimplicialMap& h) const {
  std::vector<ChainMap> lv;
  for (int n = 0; n <= h.truncation(); ++n) lv.push_back(levels[idx(n)].descend(h.level(n)));
  return SimplicialMap(object, h.target(), std::move(lv));
}

SPushout pushout_s(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.source() == g.source())) throw ShapeError("pushout_s: span legs have different sources");
  SPushout po{cokernel(pair(f, -g)), {}, {}};
  po.from_b = compose(po.coker.projection, summand_inclusion(f.target(), g.target(), 0));
  po.from_c = compose(po.coker.projection, summand_inclusion(f.target(), g.target(), 1));
  return po;
}

SimplicialMap SPushout::mediator(const SimplicialMap& u, const SimplicialMap& v) const {
  return coker.descend(copair(u, v));
}

SPullback pullback_s(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.target() == g.target())) throw ShapeError("pullback_s: cospan legs have different targets");
  SPullback pb{kernel(copair(f, -g)), {}, {}};
  pb.to_b = compose(summand_projection(f.source(), g.source(), 0), pb.ker.inclusion);
  pb.to_c = compose(summand_projection(f.source(), g.source(), 1), pb.ker.inclusion);
  return pb;
}

SimplicialMap SPullback::mediator(const SimplicialMap& u, const SimplicialMap& v) const {
  return ker.lift(pair(u, v));
}

// ---- homotopical and prolongation ---------------------------------------------------

Report is_homotopically_constant(const SimplicialObject& x) {
  for (int n = 0; n <= x.truncation(); ++n) {
    for (int i = 0; n >= 1 && i <= n; ++i)
      if (!is_quasi_iso(x.face(n, i))) return Report::fail("d_" + std::to_string(i) + at_level(n));
    for (int i = 0; n < x.truncation() && i <= n; ++i)
      if (!is_quasi_iso(x.degeneracy(n, i))) return Report::fail("s_" + std::to_string(i) + at_level(n));
  }
  return Report::pass();
}

SimplicialObject prolong_shift(const SimplicialObject& x, int k) {
  std::vector<ChainComplex> levels;
  for (const auto& c : x.levels()) levels.push_back(shift(c, k));
  return build(x.truncation(), std::move(levels),
               [&](bool face, int n, int i) { return shift(structure(x, face, n, i), k); });
}

SimplicialMap prolong_shift(const SimplicialMap& f, int k) {
  std::vector<ChainMap> lv;
  for (const auto& m : f.levels()) lv.push_back(shift(m, k));
  return SimplicialMap(prolong_shift(f.source(), k), prolong_shift(f.target(), k), std::move(lv));
}

SimplicialObject prolong_tensor(const SimplicialObject& x, const ChainComplex& a) {
  const ChainMap id = ChainMap::identity(a);
  std::vector<ChainComplex> levels;
  for (const auto& c : x.levels()) levels.push_back(tensor_complexes(c, a));
  return build(x.truncation(), std::move(levels),
               [&](bool face, int n, int i) { return tensor_maps(structure(x, face, n, i), id); });
}

SimplicialMap prolong_tensor(const SimplicialMap& f, const ChainComplex& a) {
  const ChainMap id = ChainMap::identity(a);
  std::vector<ChainMap> lv;
  for (const auto& m : f.levels()) lv.push_back(tensor_maps(m, id));
  return SimplicialMap(prolong_tensor(f.source(), a), prolong_tensor(f.target(), a), std::move(lv));
}

SimplicialMap prolong_tensor(const SimplicialObject& x, const ChainMap& g) {
  std::vector<ChainMap> lv;
  for (const auto& c : x.levels()) lv.push_back(tensor_maps(ChainMap::identity(c), g));
  return SimplicialMap(prolong_tensor(x, g.source()), prolong_tensor(x, g.target()), std::move(lv));
}

}  // namespace smc
