#include "smc/sample.hpp"

#include <stdexcept>

#include "smc/error.hpp"
#include "smc/linear_system.hpp"

namespace smc {

std::string to_string(SampleKind k) {
  switch (k) {
    case SampleKind::random_sobj: return "random_sobj";
    case SampleKind::random_map: return "random_map";
    case SampleKind::reedy_fibration: return "reedy_fibration";
    case SampleKind::equifibered_fibration: return "equifibered_fibration";
    case SampleKind::reedy_trivial_fibration: return "reedy_trivial_fibration";
    case SampleKind::reedy_cofibration: return "reedy_cofibration";
    case SampleKind::skeletal_sobj: return "skeletal_sobj";
  }
  return "?";
}

SampleKind parse_sample_kind(const std::string& s) {
  for (auto k : {SampleKind::random_sobj, SampleKind::random_map, SampleKind::reedy_fibration,
                 SampleKind::equifibered_fibration, SampleKind::reedy_trivial_fibration,
                 SampleKind::reedy_cofibration, SampleKind::skeletal_sobj})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown sample kind '" + s + "'");
}

namespace {

int pick(Rng& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

Matrix random_invertible(Rng& rng, std::size_t n, const Field& f) {
  for (;;) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<long long>(rng() % f.p()));
    if (rank(m) == n) return m;
  }
}

FinSimplicialSet random_sset(Rng& rng, int truncation, bool skeletal) {
  // Skeletal choices have no nondegenerate simplices at the top level.
  const int top = skeletal ? truncation - 1 : std::min(truncation, 2);
  const int n = pick(rng, 0, std::max(0, top));
  switch (pick(rng, 0, 2)) {
    case 0: return standard_simplex(n, truncation);
    case 1: return boundary(std::min(n + 1, std::max(1, top + 1)), truncation);
    default: return n >= 1 ? horn(n, pick(rng, 0, n), truncation) : standard_simplex(0, truncation);
  }
}

SimplicialMap project_first(const SimplicialObject& y, const SimplicialObject& w) {
  return summand_projection(y, w, 0);
}

}  // namespace

ChainComplex random_complex(Rng& rng, const SampleParams& p, bool acyclic) {
  const Field& f = p.field;
  std::vector<ChainComplex> parts;
  const int cells = pick(rng, 1, static_cast<int>(std::max<std::size_t>(1, p.max_cells)));
  for (int k = 0; k < cells; ++k) {
    const bool use_disk = acyclic || pick(rng, 0, 1) == 1;
    if (use_disk && p.deg_hi > p.deg_lo) {
      parts.push_back(disk(f, pick(rng, p.deg_lo + 1, p.deg_hi)));
    } else if (use_disk) {
      parts.push_back(disk(f, p.deg_hi));
    } else {
      parts.push_back(sphere(f, pick(rng, p.deg_lo, p.deg_hi)));
    }
  }
  const ChainComplex c = direct_sum(parts, f);
  if (c.empty_support()) return c;
  std::map<int, Matrix> basis;
  for (int t = c.lo() - 1; t <= c.hi(); ++t) basis.emplace(t, random_invertible(rng, c.dim(t), f));
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int t = c.lo(); t <= c.hi(); ++t) {
    dims.push_back(c.dim(t));
    diffs.push_back(basis.at(t - 1) * c.diff(t) * inverse(basis.at(t)));
  }
  return ChainComplex(f, c.lo(), std::move(dims), std::move(diffs));
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& a, const ChainComplex& b) {
  MapSystem sys(a.field());
  sys.add_unknown(a, b);
  return sys.random_solution(rng)->front();
}

ChainMap random_mono(Rng& rng, const SampleParams& p, const ChainComplex& a, bool quasi_iso) {
  const ChainComplex c = random_complex(rng, p, quasi_iso);
  return pair(ChainMap::identity(a), random_chain_map(rng, a, c));
}

ChainMap random_epi(Rng& rng, const SampleParams& p, const ChainComplex& a, bool quasi_iso) {
  const ChainComplex c = random_complex(rng, p, quasi_iso);
  return copair(ChainMap::identity(a), random_chain_map(rng, c, a));
}

SimplicialMap random_smap(Rng& rng, const SimplicialObject& x, const SimplicialObject& y) {
  MapSystem sys(x.field());
  const SimplicialUnknown u = add_simplicial_unknown(sys, x, y);
  add_naturality(sys, u);
  return extract(u, *sys.random_solution(rng));
}

SimplicialObject interval_kernel(const Field& f, int truncation) {
  const SSetMap collapse = simplex_map({0, 0}, 0, truncation);
  return kernel(tensor(constant(sphere(f, 0), truncation), collapse)).object;
}

SimplicialObject reduced_interval(const Field& f, int truncation) {
  return cokernel(tensor(constant(sphere(f, 0), truncation), horn_inclusion(1, 0, truncation))).object;
}

SimplicialObject random_skeletal_sobj(Rng& rng, const SampleParams& p) {
  const int n = p.truncation;
  switch (pick(rng, 0, 3)) {
    case 0: return constant(random_complex(rng, p), n);
    case 1: return tensor(random_complex(rng, p), random_sset(rng, n, true));
    case 2: return n >= 2 ? prolong_tensor(interval_kernel(p.field, n), random_complex(rng, p))
                          : constant(random_complex(rng, p), n);
    default:
      return direct_sum(tensor(random_complex(rng, p), random_sset(rng, n, true)), constant(random_complex(rng, p), n));
  }
}

SimplicialObject random_sobj(Rng& rng, const SampleParams& p) {
  const int n = p.truncation;
  switch (pick(rng, 0, 4)) {
    case 0: return constant(random_complex(rng, p), n);
    case 1: return tensor(random_complex(rng, p), random_sset(rng, n, false));
    case 2: {
      SampleParams small = p;
      small.max_cells = 1;
      return sing(random_complex(rng, small), n);
    }
    case 3: return prolong_tensor(reduced_interval(p.field, n), random_complex(rng, p));
    default: {
      const SimplicialMap i = tensor(constant(random_mono(rng, p, random_complex(rng, p), false), n),
                                     random_sset(rng, n, false));
      return pushout_s(i, random_smap(rng, i.source(), random_skeletal_sobj(rng, p))).object();
    }
  }
}

namespace {

/// Equifibered Reedy fibrations; `trivial` restricts to level equivalences,
/// `exact` to objects of exact flag.
SimplicialMap equifibered_candidate(Rng& rng, const SampleParams& p, bool trivial, bool exact) {
  const int n = p.truncation;
  const bool can_exact = n >= 2;
  const int choice = pick(rng, 0, 5);
  if (!exact && (choice == 0 || !can_exact)) {
    SampleParams small = p;
    small.max_cells = 1;
    return sing(random_epi(rng, small, random_complex(rng, small), trivial || pick(rng, 0, 1) == 1), n);
  }
  const SimplicialObject u = interval_kernel(p.field, n);
  switch (choice) {
    case 1: return SimplicialMap::zero(prolong_tensor(u, random_complex(rng, p, true)), zero_sobj(p.field, n));
    case 2: return prolong_tensor(u, random_epi(rng, p, random_complex(rng, p), true));
    case 3: {
      const SimplicialObject y = exact ? random_skeletal_sobj(rng, p) : random_sobj(rng, p);
      return project_first(y, prolong_tensor(u, random_complex(rng, p, true)));
    }
    case 4: {
      const SimplicialObject y = exact ? random_skeletal_sobj(rng, p) : random_sobj(rng, p);
      return SimplicialMap::identity(y);
    }
    default: {
      // Pullback of a projection along a random map.
      const SimplicialObject y = random_skeletal_sobj(rng, p);
      const SimplicialMap q = project_first(y, prolong_tensor(u, random_complex(rng, p, true)));
      const SimplicialObject z = random_skeletal_sobj(rng, p);
      const SPullback pb = pullback_s(q, random_smap(rng, z, y));
      return pb.to_c;
    }
  }
}

SimplicialMap fibration_candidate(Rng& rng, const SampleParams& p) {
  const int n = p.truncation;
  if (n >= 2 && pick(rng, 0, 2) == 0) {
    // U ⊗ g for an epi g that need not be a quasi-isomorphism.
    return prolong_tensor(interval_kernel(p.field, n),
                          random_epi(rng, p, random_complex(rng, p), false));
  }
  if (pick(rng, 0, 1) == 0) {
    SampleParams small = p;
    small.max_cells = 1;
    const SimplicialMap a = sing(random_epi(rng, small, random_complex(rng, small), false), n);
    return direct_sum(a, SimplicialMap::identity(random_sobj(rng, p)));
  }
  return equifibered_candidate(rng, p, false, false);
}

SimplicialMap cofibration_candidate(Rng& rng, const SampleParams& p) {
  const int n = p.truncation;
  const bool trivial = pick(rng, 0, 2) == 0;
  switch (pick(rng, 0, 3)) {
    case 0:
      return tensor(constant(random_mono(rng, p, random_complex(rng, p), trivial), n), random_sset(rng, n, false));
    case 1: {
      const SSetMap i = pick(rng, 0, 1) == 0 ? boundary_inclusion(pick(rng, 0, std::min(n, 2)), n)
                                             : horn_inclusion(pick(rng, 1, std::min(n, 2)), 0, n);
      return pushout_product(random_mono(rng, p, random_complex(rng, p), trivial), i);
    }
    case 2: return SimplicialMap::zero(zero_sobj(p.field, n), tensor(random_complex(rng, p, trivial), random_sset(rng, n, false)));
    default: {
      // Up to three pushouts of generators along random attaching maps.
      const Window w{p.deg_lo, p.deg_hi, 0, std::min(n, 2)};
      const GeneratorFamily fam = generators(trivial ? Family::Jprime : Family::I, w, n, p.field);
      const SimplicialObject start = random_skeletal_sobj(rng, p);
      SimplicialMap total = SimplicialMap::identity(start);
      const int stages = pick(rng, 1, 3);
      for (int s = 0; s < stages; ++s) {
        const Generator& g = fam.members[rng() % fam.members.size()];
        const SimplicialMap attach = random_smap(rng, g.map.source(), total.target());
        const SPushout po = pushout_s(g.map, attach);
        total = compose(po.from_c, total);
      }
      return total;
    }
  }
}

bool all_dims_zero(const SampleParams& p) { return p.max_cells == 0; }

}  // namespace

namespace {

SimplicialMap draw(SampleKind kind, const SampleParams& p, Rng& rng) {
  auto check = [&](const SimplicialMap& f, bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("sample: produced a map outside the class ") + what);
    return f;
  };
  switch (kind) {
    case SampleKind::random_sobj: {
      const SimplicialMap f = SimplicialMap::identity(random_sobj(rng, p));
      return check(f, bool(validate_sobj(f.source())), "random_sobj");
    }
    case SampleKind::skeletal_sobj: {
      const SimplicialMap f = SimplicialMap::identity(random_skeletal_sobj(rng, p));
      return check(f, exactness(f.source()) == Exactness::exact, "skeletal_sobj");
    }
    case SampleKind::random_map: {
      const SimplicialObject x = random_sobj(rng, p);
      const SimplicialObject y = random_sobj(rng, p);
      const SimplicialMap f = random_smap(rng, x, y);
      return check(f, bool(validate_smap(f)), "random_map");
    }
    case SampleKind::reedy_fibration: {
      const SimplicialMap f = fibration_candidate(rng, p);
      return check(f, !reedy_fib_failure(f), "reedy_fibration");
    }
    case SampleKind::equifibered_fibration: {
      const SimplicialMap f = equifibered_candidate(rng, p, false, p.exact_only || pick(rng, 0, 1) == 0);
      return check(f, !reedy_fib_failure(f) && !equifibered_failure(f), "equifibered_fibration");
    }
    case SampleKind::reedy_trivial_fibration: {
      const SimplicialMap f = equifibered_candidate(rng, p, true, p.exact_only);
      return check(f, !reedy_fib_failure(f) && !level_we_failure(f), "reedy_trivial_fibration");
    }
    case SampleKind::reedy_cofibration: {
      const SimplicialMap f = cofibration_candidate(rng, p);
      return check(f, !reedy_cof_failure(f), "reedy_cofibration");
    }
  }
  throw InvalidInput("sample: unknown kind");
}

}  // namespace

SimplicialMap sample(SampleKind kind, const SampleParams& p, std::uint64_t seed) {
  if (p.truncation < 1 || p.deg_lo > p.deg_hi) throw InvalidInput("sample: bad parameters");
  if (all_dims_zero(p)) return SimplicialMap::identity(zero_sobj(p.field, p.truncation));
  Rng rng(seed);
  auto small = [&](const SimplicialObject& x) {
    for (const auto& c : x.levels())
      if (c.total_dim() > p.max_level_dim) return false;
    return true;
  };
  // Draws that exceed the size bounds are replaced by the next draw of the same stream.
  constexpr int kAttempts = 64;
  for (int attempt = 1;; ++attempt) {
    try {
      SimplicialMap f = draw(kind, p, rng);
      if (small(f.source()) && small(f.target())) return f;
    } catch (const ResourceError&) {
      if (attempt == kAttempts) throw;
    }
    if (attempt == kAttempts)
      throw ResourceError("sample: no draw within " + std::to_string(p.max_level_dim) + " dimensions per level after " +
                          std::to_string(kAttempts) + " attempts");
  }
}

}  // namespace smc
