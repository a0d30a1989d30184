#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smc/model.hpp"
#include "smc/sample.hpp"

namespace smc {

enum class Structure { reedy, realization };
std::string to_string(Structure s);

/// Pushout-product axiom for f □ i. Parts (1) and (2) are always asserted;
/// part (3) only for structure = realization and i a weak equivalence.
struct Sm7Report {
  Structure structure = Structure::reedy;
  bool cofibration = true;              ///< (1)
  std::optional<bool> level_trivial;    ///< (2), when f is a level equivalence
  std::optional<bool> acyclic;          ///< (3), when i is a weak equivalence
  bool acyclic_asserted = false;
  bool expected_failure = false;        ///< (3) fails where it is not claimed
  std::optional<Witness> witness;
  Classification box;
  bool ok() const;
};
/// Throws InvalidInput unless f is a Reedy cofibration and i is injective.
Sm7Report check_sm7(const SimplicialMap& f, const SSetMap& i, Structure structure);

/// f^{□ i_n} agrees with the relative matching map under X_n ≅ X^{Δ[n]}
/// and Y_n ×_{M_n Y} M_n X ≅ Y^{Δ[n]} ×_{Y^{∂Δ[n]}} X^{∂Δ[n]}.
Report check_lem_match(const SimplicialMap& f, int n);
/// cotensor0(X, ∂Δ[n]) ≅ M_n X through the canonical map, homology included.
Report check_matching_cotensor(const SimplicialObject& x, int n);

/// Outcome of a sampled property run.
struct CheckReport {
  std::string property;
  std::uint64_t seed = 0;
  std::size_t draws = 0;
  std::size_t premise = 0;    ///< draws meeting the property's hypothesis
  std::size_t violations = 0;
  std::vector<std::string> details;  ///< one line per violation
  std::vector<std::string> notes;    ///< reported, never asserted
  std::string window;
  bool ok() const { return violations == 0; }
};

using Classifier = std::function<Classification(const SimplicialMap&)>;

struct HarnessOptions {
  SampleParams params;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  Window window;  ///< for generator-based checks
  int max_n = 2;  ///< simplex parameter range for built-in injections
};

/// Equifibered ∧ realization_we (exact flag) ⟹ level_we. Draws continue until
/// `samples` maps meet the hypothesis or 8 × samples draws are spent.
CheckReport check_realization_axiom(const HarnessOptions& o, const Classifier& classifier = classify);
/// Sampled maps f and n ≤ N.
CheckReport check_lem_match_sampled(const HarnessOptions& o);
/// g Reedy fibration, i injective ⟹ g^{□ i} epi, and a quasi-iso when g is level trivial.
CheckReport check_prop_proof(const HarnessOptions& o);
/// Reedy trivial fibration ⟹ equifibered ∧ realization_we.
CheckReport check_prop_i_cof(const HarnessOptions& o);
/// Reedy cofibrations f against all built-in injections: parts (1), (2).
CheckReport check_sm7_sampled(const HarnessOptions& o, Structure structure);
/// Equifibered fibrations lift against every J' ∪ J'' member in the window.
CheckReport check_j_necessity(const HarnessOptions& o);

}  // namespace smc
