#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smc/realization.hpp"
#include "smc/reedy.hpp"

namespace smc {

/// First place a predicate fails. `index` is the face index for the
/// equifibered test; `degree` is the chain degree (cone degree for quasi-iso
/// tests).
struct Witness {
  int level = 0;
  std::optional<int> degree;
  std::optional<int> index;
  std::string reason;
};

struct Classification {
  bool level_we = true;
  bool reedy_cof = true;
  bool reedy_fib = true;
  bool equifibered = true;
  bool realization_we = true;
  Exactness realization_flag = Exactness::exact;
  std::optional<Witness> level_we_witness;
  std::optional<Witness> reedy_cof_witness;
  std::optional<Witness> reedy_fib_witness;
  std::optional<Witness> equifibered_witness;
  std::optional<Witness> realization_witness;

  bool reedy_trivial_fib() const { return reedy_fib && level_we; }
  /// Trivial Reedy fibrations are equifibered realization equivalences.
  bool invariant_holds() const { return !reedy_trivial_fib() || (equifibered && realization_we); }
};

Classification classify(const SimplicialMap& f);
/// Individual predicates, each returning its first failure.
std::optional<Witness> level_we_failure(const SimplicialMap& f);
std::optional<Witness> reedy_cof_failure(const SimplicialMap& f);
std::optional<Witness> reedy_fib_failure(const SimplicialMap& f);
/// Only the quasi-iso part; does not test reedy_fib.
std::optional<Witness> equifibered_failure(const SimplicialMap& f);

/// X_n ⊔_{L_n X} L_n Y -> Y_n with its pushout.
struct RelativeLatching {
  Latching lx;
  Latching ly;
  Pushout pushout;  ///< of X_n <- L_n X -> L_n Y
  ChainMap map;
};
/// X_n -> Y_n ×_{M_n Y} M_n X with its pullback.
struct RelativeMatching {
  Matching mx;
  Matching my;
  Pullback pullback;  ///< of Y_n -> M_n Y <- M_n X
  ChainMap map;
};
RelativeLatching relative_latching(const SimplicialMap& f, int n);
RelativeMatching relative_matching(const SimplicialMap& f, int n);
inline ChainMap relative_latching_map(const SimplicialMap& f, int n) { return relative_latching(f, n).map; }
inline ChainMap relative_matching_map(const SimplicialMap& f, int n) { return relative_matching(f, n).map; }

/// X ⊗ L ⊔_{X ⊗ K} Y ⊗ K -> Y ⊗ L for f : X -> Y and injective i : K -> L.
struct PushoutProduct {
  SPushout pushout;
  SimplicialMap map;
};
PushoutProduct pushout_product_data(const SimplicialMap& f, const SSetMap& i);
SimplicialMap pushout_product(const SimplicialMap& f, const SSetMap& i);
/// Chain maps enter as constant simplicial maps.
SimplicialMap pushout_product(const ChainMap& f, const SSetMap& i);

/// X^L -> Y^L ×_{Y^K} X^K.
struct CotensorMap {
  Cotensor xl, xk, yl, yk;
  Pullback pullback;  ///< of Y^L -> Y^K <- X^K
  ChainMap map;
};
CotensorMap cotensor_map_data(const SimplicialMap& f, const SSetMap& i);
ChainMap cotensor_map(const SimplicialMap& f, const SSetMap& i);

/// Square p ∘ top = bottom ∘ i.
struct LiftingProblem {
  SimplicialMap i;
  SimplicialMap p;
  SimplicialMap top;
  SimplicialMap bottom;
};
struct LiftResult {
  bool exists = false;
  std::optional<SimplicialMap> witness;
};
/// Solves for h with h ∘ i = top, p ∘ h = bottom; any witness is re-checked.
LiftResult rlp(const LiftingProblem& problem);
/// Whether every commuting square from i to p has a lift.
bool lifts_against(const SimplicialMap& i, const SimplicialMap& p);

struct NamedInjection {
  std::string name;
  SSetMap map;
};
/// ∅ -> Δ[0], boundary, horn and face inclusions with simplex parameter ≤ max_n.
std::vector<NamedInjection> builtin_injections(int max_n, int truncation);

enum class Family { I, Jprime, Jsecond };
std::string to_string(Family f);
Family parse_family(const std::string& s);

/// Chain degrees m in [deg_lo, deg_hi] for the disks D^m and simplex
/// parameters n in [n_lo, n_hi].
struct Window {
  int deg_lo = -1;
  int deg_hi = 3;
  int n_lo = 0;
  int n_hi = 2;
};

struct Generator {
  SimplicialMap map;
  std::string chain_part;    ///< e.g. "S^0->D^1" or "0->D^2"
  std::string simplex_part;  ///< e.g. "i_2" or "d_1:[1]->[2]"
  int m = 0;
  int n = 0;
  int face = -1;
  WeakEquivalence sset_we = WeakEquivalence::unknown;
  std::string label() const { return chain_part + " [] " + simplex_part; }
};
struct GeneratorFamily {
  Family family = Family::I;
  Window window;
  int truncation = 0;
  std::vector<Generator> members;
};
/// I = I_C □ boundary inclusions, J' = J_C □ boundary inclusions,
/// J'' = I_C □ face inclusions δ_i : Δ[n-1] -> Δ[n] (n ≥ 1 in the window).
GeneratorFamily generators(Family family, const Window& w, int truncation, const Field& f);

struct JInjectivityReport {
  Window window;
  std::size_t checked = 0;
  bool all_lift = true;
  std::optional<std::string> first_failure;
  bool equifibered = false;
  bool agree() const { return all_lift == equifibered; }
  /// Equifibered maps must lift; the other implication is evidence only.
  bool necessity_holds() const { return !equifibered || all_lift; }
};
JInjectivityReport check_j_injective_vs_equifibered(const SimplicialMap& p, const std::vector<GeneratorFamily>& families);

}  // namespace smc
