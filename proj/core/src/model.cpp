#include "smc/model.hpp"

#include <stdexcept>

#include "smc/error.hpp"
#include "smc/linear_system.hpp"

namespace smc {

std::optional<Witness> level_we_failure(const SimplicialMap& f) {
  for (int n = 0; n <= f.truncation(); ++n)
    if (auto d = first_cone_homology(f.level(n))) return Witness{n, d, std::nullopt, "level map not a quasi-isomorphism"};
  return std::nullopt;
}

RelativeLatching relative_latching(const SimplicialMap& f, int n) {
  if (n < 0 || n > f.truncation()) throw InvalidInput("relative_latching: level out of range");
  Latching lx = latching(f.source(), n), ly = latching(f.target(), n);
  Pushout po = pushout(lx.to_level, latching_map(f, lx, ly));
  ChainMap map = po.mediator(f.level(n), ly.to_level);
  return {std::move(lx), std::move(ly), std::move(po), std::move(map)};
}

RelativeMatching relative_matching(const SimplicialMap& f, int n) {
  if (n < 0 || n > f.truncation()) throw InvalidInput("relative_matching: level out of range");
  Matching mx = matching(f.source(), n), my = matching(f.target(), n);
  Pullback pb = pullback(my.from_level, matching_map(f, mx, my));
  ChainMap map = pb.mediator(f.level(n), mx.from_level);
  RelativeMatching r{std::move(mx), std::move(my), std::move(pb), std::move(map)};
  return r;
}

std::optional<Witness> reedy_cof_failure(const SimplicialMap& f) {
  for (int n = 0; n <= f.truncation(); ++n) {
    const MonoEpi me = mono_epi(relative_latching_map(f, n));
    if (!me.mono) return Witness{n, me.first_non_mono, std::nullopt, "relative latching map not mono"};
  }
  return std::nullopt;
}

std::optional<Witness> reedy_fib_failure(const SimplicialMap& f) {
  for (int n = 0; n <= f.truncation(); ++n) {
    const MonoEpi me = mono_epi(relative_matching_map(f, n));
    if (!me.epi) return Witness{n, me.first_non_epi, std::nullopt, "relative matching map not epi"};
  }
  return std::nullopt;
}

std::optional<Witness> equifibered_failure(const SimplicialMap& f) {
  const SimplicialObject& x = f.source();
  const SimplicialObject& y = f.target();
  for (int m = 0; m < f.truncation(); ++m)
    for (int i = 0; i <= m + 1; ++i) {
      const Pullback pb = pullback(f.level(m), y.face(m + 1, i));
      const ChainMap g = pb.mediator(x.face(m + 1, i), f.level(m + 1));
      if (auto d = first_cone_homology(g))
        return Witness{m + 1, d, i, "X_{m+1} -> X_m x_{Y_m} Y_{m+1} not a quasi-isomorphism"};
    }
  return std::nullopt;
}

Classification classify(const SimplicialMap& f) {
  require_valid(f, "classify");
  Classification c;
  c.level_we_witness = level_we_failure(f);
  c.level_we = !c.level_we_witness;
  c.reedy_cof_witness = reedy_cof_failure(f);
  c.reedy_cof = !c.reedy_cof_witness;
  c.reedy_fib_witness = reedy_fib_failure(f);
  c.reedy_fib = !c.reedy_fib_witness;
  if (c.reedy_fib) {
    c.equifibered_witness = equifibered_failure(f);
  } else {
    c.equifibered_witness = *c.reedy_fib_witness;
    c.equifibered_witness->reason = "not a Reedy fibration";
  }
  c.equifibered = !c.equifibered_witness;
  const RealizationVerdict v = realization_we(f);
  c.realization_we = v.we;
  c.realization_flag = v.flag;
  if (!v.we) {
    c.realization_witness =
        Witness{f.truncation(), first_cone_homology(total_map(f, TotalMode::normalized)), std::nullopt,
                "normalized total map not a quasi-isomorphism"};
  }
  return c;
}

PushoutProduct pushout_product_data(const SimplicialMap& f, const SSetMap& i) {
  if (!i.injective()) throw InvalidInput("pushout_product: simplicial set map is not injective");
  const SimplicialObject& x = f.source();
  const SimplicialObject& y = f.target();
  SPushout po = pushout_s(tensor(x, i), tensor(f, i.source()));
  SimplicialMap map = po.mediator(tensor(f, i.target()), tensor(y, i));
  return {std::move(po), std::move(map)};
}

SimplicialMap pushout_product(const SimplicialMap& f, const SSetMap& i) { return pushout_product_data(f, i).map; }

SimplicialMap pushout_product(const ChainMap& f, const SSetMap& i) {
  return pushout_product(constant(f, i.source().truncation()), i);
}

CotensorMap cotensor_map_data(const SimplicialMap& f, const SSetMap& i) {
  if (!i.injective()) throw InvalidInput("cotensor_map: simplicial set map is not injective");
  Cotensor xl = cotensor0(f.source(), i.target()), xk = cotensor0(f.source(), i.source());
  Cotensor yl = cotensor0(f.target(), i.target()), yk = cotensor0(f.target(), i.source());
  Pullback pb = pullback(cotensor_restrict(yl, yk, i), cotensor_push(xk, yk, f));
  ChainMap map = pb.mediator(cotensor_push(xl, yl, f), cotensor_restrict(xl, xk, i));
  CotensorMap c{std::move(xl), std::move(xk), std::move(yl), std::move(yk), std::move(pb), std::move(map)};
  return c;
}

ChainMap cotensor_map(const SimplicialMap& f, const SSetMap& i) { return cotensor_map_data(f, i).map; }

LiftResult rlp(const LiftingProblem& q) {
  if (!(compose(q.p, q.top) == compose(q.bottom, q.i))) throw InvalidInput("rlp: square does not commute");
  const SimplicialObject& b = q.i.target();
  const SimplicialObject& x = q.p.source();
  MapSystem sys(b.field());
  const SimplicialUnknown h = add_simplicial_unknown(sys, b, x);
  add_naturality(sys, h);
  for (int n = 0; n <= b.truncation(); ++n) {
    sys.add_constraint({level_term(sys, h, n, std::nullopt, q.i.level(n))}, q.i.source().level(n), x.level(n),
                       q.top.level(n));
    sys.add_constraint({level_term(sys, h, n, q.p.level(n), std::nullopt)}, b.level(n), q.p.target().level(n),
                       q.bottom.level(n));
  }
  auto sol = sys.solve();
  if (!sol) return {};
  SimplicialMap w = extract(h, *sol);
  if (!validate_smap(w) || !(compose(w, q.i) == q.top) || !(compose(q.p, w) == q.bottom))
    throw std::logic_error("rlp: solver returned a lift that does not re-substitute");
  return {true, std::move(w)};
}

bool lifts_against(const SimplicialMap& i, const SimplicialMap& p) {
  const SimplicialObject& a = i.source();
  const SimplicialObject& b = i.target();
  const SimplicialObject& x = p.source();
  const SimplicialObject& y = p.target();
  const int top = a.truncation();
  // Every square lifts iff h ↦ (h∘i, p∘h) maps Hom(B, X) onto the squares.
  const std::size_t all = hom_dim(b, x);
  MapSystem ker(a.field());
  const SimplicialUnknown h = add_simplicial_unknown(ker, b, x);
  add_naturality(ker, h);
  for (int n = 0; n <= top; ++n) {
    ker.add_constraint({level_term(ker, h, n, std::nullopt, i.level(n))}, a.level(n), x.level(n));
    ker.add_constraint({level_term(ker, h, n, p.level(n), std::nullopt)}, b.level(n), y.level(n));
  }
  MapSystem sq(a.field());
  const SimplicialUnknown u = add_simplicial_unknown(sq, a, x);
  const SimplicialUnknown v = add_simplicial_unknown(sq, b, y);
  add_naturality(sq, u);
  add_naturality(sq, v);
  for (int n = 0; n <= top; ++n)
    sq.add_constraint({level_term(sq, u, n, p.level(n), std::nullopt),
                       level_term(sq, v, n, std::nullopt, -i.level(n))},
                      a.level(n), y.level(n));
  return all - ker.nullity() == sq.nullity();
}

std::vector<NamedInjection> builtin_injections(int max_n, int truncation) {
  std::vector<NamedInjection> out;
  const int top = std::min(max_n, truncation);
  out.push_back({"empty->D[0]", from_empty(standard_simplex(0, truncation))});
  for (int n = 1; n <= top; ++n) out.push_back({"i_" + std::to_string(n), boundary_inclusion(n, truncation)});
  for (int n = 1; n <= top; ++n)
    for (int k = 0; k <= n; ++k)
      out.push_back({"horn(" + std::to_string(n) + "," + std::to_string(k) + ")", horn_inclusion(n, k, truncation)});
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      out.push_back({"d_" + std::to_string(i) + ":[" + std::to_string(n - 1) + "]->[" + std::to_string(n) + "]",
                     face_inclusion(n - 1, i, truncation)});
  return out;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::Jprime: return "J'";
    case Family::Jsecond: return "J''";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "I") return Family::I;
  if (s == "J'" || s == "Jprime" || s == "J1") return Family::Jprime;
  if (s == "J''" || s == "Jsecond" || s == "J2") return Family::Jsecond;
  throw InvalidInput("unknown generator family '" + s + "' (expected I, J', J'')");
}

namespace {

std::string sphere_label(int m) { return "S^" + std::to_string(m - 1) + "->D^" + std::to_string(m); }

}  // namespace

GeneratorFamily generators(Family family, const Window& w, int truncation, const Field& f) {
  if (w.deg_lo > w.deg_hi || w.n_lo > w.n_hi || w.n_lo < 0) throw InvalidInput("generators: empty window");
  GeneratorFamily out{family, w, truncation, {}};
  const int n_hi = std::min(w.n_hi, truncation);
  for (int m = w.deg_lo; m <= w.deg_hi; ++m) {
    const ChainMap c = family == Family::Jprime ? ChainMap::zero(zero_complex(f), disk(f, m)) : sphere_into_disk(f, m);
    const std::string cl = family == Family::Jprime ? "0->D^" + std::to_string(m) : sphere_label(m);
    for (int n = w.n_lo; n <= n_hi; ++n) {
      if (family != Family::Jsecond) {
        const SSetMap i = boundary_inclusion(n, truncation);
        out.members.push_back({pushout_product(c, i), cl, "i_" + std::to_string(n), m, n, -1, i.weak_equivalence()});
        continue;
      }
      for (int k = 0; n >= 1 && k <= n; ++k) {
        const SSetMap i = face_inclusion(n - 1, k, truncation);
        out.members.push_back({pushout_product(c, i), cl,
                               "d_" + std::to_string(k) + ":[" + std::to_string(n - 1) + "]->[" + std::to_string(n) + "]",
                               m, n, k, i.weak_equivalence()});
      }
    }
  }
  if (out.members.empty()) throw InvalidInput("generators: window yields no members");
  return out;
}

JInjectivityReport check_j_injective_vs_equifibered(const SimplicialMap& p, const std::vector<GeneratorFamily>& families) {
  JInjectivityReport r;
  if (!families.empty()) r.window = families.front().window;
  for (const auto& fam : families)
    for (const auto& g : fam.members) {
      ++r.checked;
      if (!lifts_against(g.map, p)) {
        r.all_lift = false;
        if (!r.first_failure) r.first_failure = to_string(fam.family) + " " + g.label();
      }
    }
  r.equifibered = classify(p).equifibered;
  return r;
}

}  // namespace smc
