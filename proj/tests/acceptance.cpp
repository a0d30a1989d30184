// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "smc/error.hpp"
#include "smc/harness.hpp"
#include "smc/io.hpp"
#include "smc/limits.hpp"

namespace {

using namespace smc;

const Field F(101);

struct Outcome {
  bool pass = false;
  std::string detail;
};

SampleParams params(int truncation, std::size_t max_level_dim = 8) {
  SampleParams p;
  p.truncation = truncation;
  p.field = F;
  p.max_level_dim = max_level_dim;
  return p;
}

HarnessOptions options(int truncation, std::size_t samples, std::uint64_t seed, int max_n) {
  HarnessOptions o;
  o.params = params(truncation);
  o.samples = samples;
  o.seed = seed;
  o.max_n = max_n;
  return o;
}

std::string counts(const CheckReport& r) {
  return std::to_string(r.draws) + " draws, " + std::to_string(r.premise) + " checked, " +
         std::to_string(r.violations) + " violations" + (r.details.empty() ? "" : "; first: " + r.details.front());
}

// random_sobj itself has no size bound; the sampler redraws oversized levels.
SimplicialObject bounded_sobj(const SampleParams& p, std::uint64_t seed) {
  return sample(SampleKind::random_sobj, p, seed).source();
}

// 1. Constructor outputs of every kind validate.
Outcome structural() {
  // Six dimensions per level keeps X ⊗ ∂Δ[2] (nine 2-simplices) under the block cap.
  const SampleParams p = params(2, 6);
  const std::vector<FinSimplicialSet> shapes = {standard_simplex(1, 2), boundary(2, 2), horn(2, 1, 2)};
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (std::uint64_t seed = 1; checked < 200; ++seed) {
    Rng rng(seed);
    Report r;
    switch (seed % 5) {
      case 0: {
        const ChainComplex a = random_complex(rng, p);
        r = validate_complex(a);
        if (r) r = validate_sobj(constant(a, p.truncation));
        break;
      }
      case 1: r = validate_sobj(tensor(bounded_sobj(p, seed), shapes[seed % shapes.size()])); break;
      case 2: r = validate_sobj(sing(random_complex(rng, p), p.truncation)); break;
      case 3: {
        const SimplicialMap f = sample(SampleKind::random_map, p, seed);
        const SimplicialMap g = random_smap(rng, f.source(), bounded_sobj(p, seed + 1000));
        r = validate_sobj(pushout_s(f, g).object());
        break;
      }
      default: {
        static const SampleKind kinds[] = {SampleKind::reedy_cofibration, SampleKind::reedy_fibration,
                                           SampleKind::equifibered_fibration, SampleKind::reedy_trivial_fibration};
        r = validate_smap(sample(kinds[(seed / 5) % 4], p, seed));
      }
    }
    ++checked;
    if (!r) {
      if (first.empty()) first = "seed " + std::to_string(seed) + ": " + r.where;
      ++bad;
    }
  }
  return {bad == 0, std::to_string(checked - bad) + "/" + std::to_string(checked) + " valid" +
                        (first.empty() ? "" : "; first: " + first)};
}

// 2. Relative matching map against the cotensor description.
Outcome lem_match() {
  const CheckReport r = check_lem_match_sampled(options(3, 50, 1, 3));
  return {r.ok() && r.draws == 50 && r.premise == 200, counts(r)};
}

// 3. Matching object against the boundary cotensor.
Outcome matching_cotensor() {
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const SimplicialObject x = sample(SampleKind::random_sobj, params(3), seed).source();
    for (int n = 0; n <= 3; ++n, ++checked) {
      if (auto r = check_matching_cotensor(x, n); !r) {
        if (first.empty()) first = "seed " + std::to_string(seed) + ": " + r.where;
        ++bad;
      }
    }
  }
  return {bad == 0 && checked == 120, std::to_string(checked) + " (X, n) pairs, " + std::to_string(bad) +
                                          " failures" + (first.empty() ? "" : "; first: " + first)};
}

// 4. f □ i is a Reedy cofibration, and level trivial when f is.
Outcome sm7_parts() {
  const SampleParams p = params(2, 4);
  const auto injections = builtin_injections(2, 2);
  std::size_t pairs = 0, part2 = 0, bad = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const SimplicialMap f = sample(SampleKind::reedy_cofibration, p, seed);
    for (const auto& i : injections) {
      const Sm7Report rep = check_sm7(f, i.map, Structure::reedy);
      ++pairs;
      if (rep.level_trivial) ++part2;
      if (!rep.cofibration || rep.level_trivial == false) {
        if (first.empty()) first = "seed " + std::to_string(seed) + " " + i.name;
        ++bad;
      }
    }
  }
  return {bad == 0 && injections.size() == 13 && pairs == 650,
          std::to_string(pairs) + " pairs over " + std::to_string(injections.size()) + " injections, " +
              std::to_string(part2) + " with level-trivial f, " + std::to_string(bad) + " failures" +
              (first.empty() ? "" : "; first: " + first)};
}

// 5. 0 -> cS⁰ against Λ⁰[1] -> Δ[1], with homology counted by hand.
Outcome counterexample() {
  const int N = 2;
  const io::Sm7Pair pair = io::reedy_sm7_pair(N, F);
  const SimplicialMap box = pushout_product(pair.f, pair.i);
  const Classification c = classify(box);

  // Level 0: the source is S⁰ over the one vertex of Λ⁰[1], the target S⁰
  // over both vertices of Δ[1].
  const std::map<int, std::size_t> point{{0, 1}}, two_points{{0, 2}};
  // Realizations: N(Λ⁰[1]) ⊗ S⁰ is a point; N(Δ[1]) ⊗ S⁰ is the interval
  // v0, v1 <- e with d e = v1 - v0, connected and acyclic above degree 0.
  const ChainComplex interval(F, 0, {2, 1}, {Matrix(0, 2, F), Matrix::from_rows({{-1}, {1}}, F)});
  const bool oracle = homology_dims(interval) == point &&
                      homology_dims(box.source().level(0)) == point &&
                      homology_dims(box.target().level(0)) == two_points &&
                      homology_dims(total_complex(box.source(), TotalMode::normalized).complex) == point &&
                      homology_dims(total_complex(box.target(), TotalMode::normalized).complex) ==
                          homology_dims(interval);
  const bool pass = !c.level_we && c.realization_we && c.realization_flag == Exactness::exact && oracle;
  return {pass, std::string("level_we=") + (c.level_we ? "true" : "false") +
                    " realization_we=" + (c.realization_we ? "true" : "false") +
                    " flag=" + to_string(c.realization_flag) + " oracle=" + (oracle ? "agrees" : "disagrees")};
}

// 6. Equifibered realization equivalences are level equivalences.
Outcome realization_axiom() {
  const CheckReport r = check_realization_axiom(options(2, 100, 1, 2));
  return {r.ok() && r.premise == 100, counts(r)};
}

// 7. Reedy trivial fibrations are equifibered realization equivalences.
Outcome prop_i_cof() {
  const CheckReport r = check_prop_i_cof(options(2, 100, 1, 2));
  return {r.ok() && r.draws == 100, counts(r)};
}

// 8. Equifibered fibrations lift against J' ∪ J''.
Outcome j_necessity() {
  HarnessOptions o = options(2, 50, 1, 2);
  o.window = Window{-1, 3, 0, 2};
  const CheckReport r = check_j_necessity(o);
  std::string d = counts(r);
  for (const auto& n : r.notes) d += "; " + n;
  return {r.ok() && r.draws == 50 && r.premise > 0, d};
}

// 9. Both adjunctions on hom dimensions.
Outcome adjunctions() {
  const SampleParams p = params(2, 4);
  std::size_t pairs = 0, bad = 0, capped = 0;
  for (std::uint64_t seed = 1; pairs < 30 && seed <= 300; ++seed) {
    Rng rng(seed);
    const ChainComplex a = random_complex(rng, p);
    const SimplicialObject y = sample(SampleKind::random_sobj, p, seed).source();
    try {
      const bool left = hom_dim(constant(a, p.truncation), y) == chain_hom_dim(a, y.level(0));
      const bool right = hom_dim(y, sing(a, p.truncation)) == chain_hom_dim(realize(y), a);
      ++pairs;
      if (!left || !right) ++bad;
    } catch (const ResourceError&) {
      ++capped;
    }
  }
  return {pairs == 30 && bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches, " +
                                       std::to_string(capped) + " skipped at the cap"};
}

// 10. Realization against the normalized total complex.
Outcome realize_vs_total() {
  std::size_t checked = 0, bad = 0, inexact = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const SimplicialObject y = sample(SampleKind::skeletal_sobj, params(2), seed).source();
    if (exactness(y) != Exactness::exact) ++inexact;
    ++checked;
    if (homology_dims(realize(y)) != homology_dims(total_complex(y, TotalMode::normalized).complex)) ++bad;
  }
  return {bad == 0 && inexact == 0 && checked == 30,
          std::to_string(checked) + " samples, " + std::to_string(inexact) + " inexact, " +
              std::to_string(bad) + " mismatches"};
}

// 11. sing(A) and cA are homotopically constant; a non-constant control is not.
Outcome homotopically_constant() {
  const SampleParams p = params(2);
  std::size_t bad = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    const ChainComplex a = random_complex(rng, p);
    if (!is_homotopically_constant(sing(a, p.truncation)) || !is_homotopically_constant(constant(a, p.truncation)))
      ++bad;
  }
  const bool control = !is_homotopically_constant(tensor(sphere(F, 0), boundary(2, 2))).ok;
  return {bad == 0 && control, "20 complexes, " + std::to_string(bad) + " misclassified, control " +
                                   (control ? "rejected" : "accepted")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"structural soundness", structural},
      {"relative matching = cotensor map", lem_match},
      {"matching object = boundary cotensor", matching_cotensor},
      {"pushout product parts (1)(2)", sm7_parts},
      {"reedy-sm7 counterexample", counterexample},
      {"realization axiom", realization_axiom},
      {"trivial fibrations equifibered", prop_i_cof},
      {"equifibered lifts against J'+J''", j_necessity},
      {"adjunction identities", adjunctions},
      {"realize = normalized total", realize_vs_total},
      {"homotopically constant detection", homotopically_constant},
  };
  int failed = 0, k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("%s  [%2d] %-38s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", k - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
