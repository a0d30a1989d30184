#include "smc/harness.hpp"

#include <sstream>

#include "smc/error.hpp"

namespace smc {

std::string to_string(Structure s) { return s == Structure::reedy ? "reedy" : "realization"; }

bool Sm7Report::ok() const {
  return cofibration && level_trivial.value_or(true) && (!acyclic_asserted || acyclic.value_or(true));
}

Sm7Report check_sm7(const SimplicialMap& f, const SSetMap& i, Structure structure) {
  if (reedy_cof_failure(f)) throw InvalidInput("check_sm7: f is not a Reedy cofibration");
  if (!i.injective()) throw InvalidInput("check_sm7: i is not injective");
  Sm7Report r;
  r.structure = structure;
  r.box = classify(pushout_product(f, i));
  r.cofibration = r.box.reedy_cof;
  if (!r.cofibration) r.witness = r.box.reedy_cof_witness;
  if (!level_we_failure(f)) {
    r.level_trivial = r.box.level_we;
    if (!r.box.level_we && !r.witness) r.witness = r.box.level_we_witness;
  }
  if (i.weak_equivalence() == WeakEquivalence::yes) {
    if (structure == Structure::realization) {
      r.acyclic = r.box.realization_we;
      r.acyclic_asserted = true;
      if (!r.box.realization_we && !r.witness) r.witness = r.box.realization_witness;
    } else {
      r.acyclic = r.box.level_we;
      r.expected_failure = !r.box.level_we;
      if (!r.box.level_we && !r.witness) r.witness = r.box.level_we_witness;
    }
  }
  return r;
}

Report check_lem_match(const SimplicialMap& f, int n) {
  const int top = f.truncation();
  if (n < 0 || n > top) throw InvalidInput("check_lem_match: level out of range");
  const RelativeMatching rm = relative_matching(f, n);
  const CotensorMap cm = cotensor_map_data(f, boundary_inclusion(n, top));
  const ChainMap iso_x = level_to_simplex_cotensor(f.source(), n, cm.xl);
  ChainMap phi;
  try {
    phi = cm.pullback.mediator(compose(level_to_simplex_cotensor(f.target(), n, cm.yl), rm.pullback.to_b),
                               compose(matching_to_boundary_cotensor(rm.mx, cm.xk), rm.pullback.to_c));
  } catch (const InvalidInput& e) {
    return Report::fail("n=" + std::to_string(n) + ": pullback comparison is not a cone: " + e.what());
  }
  const MonoEpi a = mono_epi(iso_x), b = mono_epi(phi);
  if (!(a.mono && a.epi)) return Report::fail("n=" + std::to_string(n) + ": X_n -> X^D[n] not an isomorphism");
  if (!(b.mono && b.epi)) return Report::fail("n=" + std::to_string(n) + ": pullback comparison not an isomorphism");
  if (!(compose(cm.map, iso_x) == compose(phi, rm.map)))
    return Report::fail("n=" + std::to_string(n) + ": square with the relative matching map does not commute");
  return Report::pass();
}

Report check_matching_cotensor(const SimplicialObject& x, int n) {
  const Matching m = matching(x, n);
  const Cotensor c = cotensor0(x, boundary(n, x.truncation()));
  const ChainMap iso = matching_to_boundary_cotensor(m, c);
  const MonoEpi me = mono_epi(iso);
  if (!me.mono || !me.epi) return Report::fail("n=" + std::to_string(n) + ": canonical map not an isomorphism");
  if (homology_dims(m.object) != homology_dims(c.object))
    return Report::fail("n=" + std::to_string(n) + ": homology dimensions differ");
  return Report::pass();
}

namespace {

std::string window_text(const HarnessOptions& o, bool with_degrees) {
  std::ostringstream s;
  s << "N=" << o.params.truncation << ", n<=" << o.max_n;
  if (with_degrees) s << ", degrees " << o.window.deg_lo << ".." << o.window.deg_hi;
  return s.str();
}

CheckReport start(const std::string& name, const HarnessOptions& o, bool with_degrees) {
  CheckReport r;
  r.property = name;
  r.seed = o.seed;
  r.window = window_text(o, with_degrees);
  return r;
}

std::string where(const std::optional<Witness>& w) {
  if (!w) return "?";
  std::string s = "level " + std::to_string(w->level);
  if (w->degree) s += " degree " + std::to_string(*w->degree);
  if (w->index) s += " face " + std::to_string(*w->index);
  return s;
}

}  // namespace

CheckReport check_realization_axiom(const HarnessOptions& o, const Classifier& classifier) {
  CheckReport r = start("realization-axiom", o, false);
  SampleParams p = o.params;
  p.exact_only = true;
  for (std::uint64_t k = 0; r.premise < o.samples && r.draws < 8 * o.samples; ++k) {
    const std::uint64_t s = o.seed + k;
    const SimplicialMap f = sample(SampleKind::equifibered_fibration, p, s);
    ++r.draws;
    const Classification c = classifier(f);
    if (!(c.equifibered && c.realization_we && c.realization_flag == Exactness::exact)) continue;
    ++r.premise;
    if (!c.level_we) {
      ++r.violations;
      r.details.push_back("seed " + std::to_string(s) + ": not a level equivalence at " + where(c.level_we_witness));
    }
  }
  return r;
}

CheckReport check_lem_match_sampled(const HarnessOptions& o) {
  CheckReport r = start("lem-match", o, false);
  for (std::uint64_t k = 0; k < o.samples; ++k) {
    const std::uint64_t s = o.seed + k;
    const SimplicialMap f = sample(SampleKind::random_map, o.params, s);
    ++r.draws;
    for (int n = 0; n <= std::min(o.max_n, f.truncation()); ++n) {
      ++r.premise;
      if (auto rep = check_lem_match(f, n); !rep) {
        ++r.violations;
        r.details.push_back("seed " + std::to_string(s) + ": " + rep.where);
      }
    }
  }
  return r;
}

CheckReport check_prop_proof(const HarnessOptions& o) {
  CheckReport r = start("prop-proof", o, false);
  const auto injections = builtin_injections(o.max_n, o.params.truncation);
  for (std::uint64_t k = 0; k < o.samples; ++k) {
    const std::uint64_t s = o.seed + k;
    const SampleKind kind = k % 2 == 0 ? SampleKind::reedy_fibration : SampleKind::reedy_trivial_fibration;
    const SimplicialMap g = sample(kind, o.params, s);
    ++r.draws;
    const bool trivial = !level_we_failure(g);
    for (const auto& i : injections) {
      ++r.premise;
      const ChainMap c = cotensor_map(g, i.map);
      const MonoEpi me = mono_epi(c);
      if (!me.epi) {
        ++r.violations;
        r.details.push_back("seed " + std::to_string(s) + " " + i.name + ": cotensor map not epi at degree " +
                            std::to_string(me.first_non_epi.value_or(0)));
      } else if (trivial && !is_quasi_iso(c)) {
        ++r.violations;
        r.details.push_back("seed " + std::to_string(s) + " " + i.name + ": cotensor map not a quasi-isomorphism");
      }
    }
  }
  return r;
}

CheckReport check_prop_i_cof(const HarnessOptions& o) {
  CheckReport r = start("prop-i-cof", o, false);
  for (std::uint64_t k = 0; k < o.samples; ++k) {
    const std::uint64_t s = o.seed + k;
    const SimplicialMap g = sample(SampleKind::reedy_trivial_fibration, o.params, s);
    ++r.draws;
    ++r.premise;
    const Classification c = classify(g);
    if (!c.equifibered) {
      ++r.violations;
      r.details.push_back("seed " + std::to_string(s) + ": not equifibered at " + where(c.equifibered_witness));
    }
    if (!c.realization_we) {
      ++r.violations;
      r.details.push_back("seed " + std::to_string(s) + ": not a realization equivalence");
    }
  }
  return r;
}

CheckReport check_sm7_sampled(const HarnessOptions& o, Structure structure) {
  CheckReport r = start("sm7 (" + to_string(structure) + ")", o, false);
  const auto injections = builtin_injections(o.max_n, o.params.truncation);
  std::size_t expected = 0;
  for (std::uint64_t k = 0; k < o.samples; ++k) {
    const std::uint64_t s = o.seed + k;
    const SimplicialMap f = sample(SampleKind::reedy_cofibration, o.params, s);
    ++r.draws;
    for (const auto& i : injections) {
      ++r.premise;
      const Sm7Report rep = check_sm7(f, i.map, structure);
      if (rep.expected_failure) ++expected;
      if (!rep.ok()) {
        ++r.violations;
        r.details.push_back("seed " + std::to_string(s) + " " + i.name + ": fails at " + where(rep.witness));
      }
    }
  }
  if (structure == Structure::reedy)
    r.notes.push_back(std::to_string(expected) + " pairs fail part (3) for the Reedy structure (not claimed)");
  return r;
}

CheckReport check_j_necessity(const HarnessOptions& o) {
  CheckReport r = start("j-necessity", o, true);
  const int n_top = o.params.truncation;
  Window w = o.window;
  w.n_hi = std::min(w.n_hi, o.max_n);
  const std::vector<GeneratorFamily> fams = {generators(Family::Jprime, w, n_top, o.params.field),
                                             generators(Family::Jsecond, w, n_top, o.params.field)};
  for (std::uint64_t k = 0; k < o.samples; ++k) {
    const std::uint64_t s = o.seed + k;
    const SimplicialMap p = sample(SampleKind::equifibered_fibration, o.params, s);
    ++r.draws;
    for (const auto& fam : fams)
      for (const auto& g : fam.members) {
        ++r.premise;
        if (!lifts_against(g.map, p)) {
          ++r.violations;
          r.details.push_back("seed " + std::to_string(s) + ": no lift against " + to_string(fam.family) + " " + g.label());
        }
      }
  }
  // Converse direction: Reedy fibrations that are not equifibered.
  std::size_t non_equi = 0, caught = 0;
  for (std::uint64_t k = 0; k < o.samples && non_equi < 5; ++k) {
    const SimplicialMap p = sample(SampleKind::reedy_fibration, o.params, o.seed + 7919 + k);
    if (!equifibered_failure(p)) continue;
    ++non_equi;
    const JInjectivityReport rep = check_j_injective_vs_equifibered(p, fams);
    if (!rep.all_lift) ++caught;
  }
  r.notes.push_back("converse: " + std::to_string(caught) + " of " + std::to_string(non_equi) +
                    " non-equifibered Reedy fibrations fail some lift in the window");
  return r;
}

}  // namespace smc
