#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smc/chain.hpp"

namespace smc {

/// A monotone map [m] -> [n] stored as its value list (θ(0), ..., θ(m)).
using Monotone = std::vector<int>;

/// All monotone maps [m] -> [n] in lexicographic order.
std::vector<Monotone> monotone_maps(int m, int n);
/// Monotone maps [m] -> [n] that are injective, lexicographic order.
std::vector<Monotone> injective_maps(int m, int n);
Monotone compose(const Monotone& g, const Monotone& f);  // g ∘ f
bool is_injective(const Monotone& f);
bool is_surjective(const Monotone& f, int n);
/// Coface δ^i : [n-1] -> [n] skipping i, codegeneracy σ^j : [n+1] -> [n] hitting j twice.
Monotone coface(int n, int i);
Monotone codegeneracy(int n, int j);
std::string label(const Monotone& f);

/// Decomposition of a monotone map into elementary operators. For a
/// simplicial object X the induced X(θ) : X_n -> X_m is
/// X(s_{j_k}) ∘ ... ∘ X(s_{j_1}) ∘ X(d_{i_r}) ∘ ... ∘ X(d_{i_1}),
/// i.e. faces (in `faces` order) then degeneracies (in `degeneracies` order).
struct OperatorWord {
  std::vector<int> faces;         ///< applied first, each lowering the level by 1
  std::vector<int> degeneracies;  ///< applied afterwards, each raising the level by 1
};
OperatorWord operator_word(const Monotone& theta, int n);

/// Whether an SSetMap is a weak equivalence of simplicial sets, where known.
enum class WeakEquivalence { yes, no, unknown };

/// Levelwise-finite simplicial set truncated at level N. Simplices are
/// indices into `labels[n]`; face(n, i) maps level n -> n-1 (n >= 1) and
/// degeneracy(n, i) maps level n -> n+1 (n < N).
class FinSimplicialSet {
 public:
  FinSimplicialSet() = default;
  FinSimplicialSet(int truncation, std::vector<std::vector<std::string>> labels,
                   std::vector<std::vector<std::vector<std::size_t>>> faces,
                   std::vector<std::vector<std::vector<std::size_t>>> degeneracies);

  int truncation() const { return truncation_; }
  std::size_t size(int n) const { return labels_.at(static_cast<std::size_t>(n)).size(); }
  const std::vector<std::string>& labels(int n) const { return labels_.at(static_cast<std::size_t>(n)); }
  std::size_t face(int n, int i, std::size_t x) const;
  std::size_t degeneracy(int n, int i, std::size_t x) const;
  const std::vector<std::vector<std::vector<std::size_t>>>& faces() const { return faces_; }
  const std::vector<std::vector<std::vector<std::size_t>>>& degeneracies() const { return degeneracies_; }

  /// K(θ) : K_n -> K_m for θ : [m] -> [n], m, n <= N.
  std::size_t apply(const Monotone& theta, int n, std::size_t x) const;
  bool is_degenerate(int n, std::size_t x) const;
  std::vector<std::size_t> nondegenerate(int n) const;
  /// Largest stored level with a nondegenerate simplex, -1 if empty.
  int dimension() const;
  /// x = s_{j_1} ... s_{j_k} y with y nondegenerate (Eilenberg-Zilber).
  /// Returns (level of y, y, degeneracy indices applied innermost-first).
  struct Decomposition {
    int level;
    std::size_t simplex;
    std::vector<int> degeneracies;
  };
  Decomposition decompose(int n, std::size_t x) const;
  std::optional<std::size_t> find(int n, const std::string& label) const;

  friend bool operator==(const FinSimplicialSet&, const FinSimplicialSet&) = default;

 private:
  int truncation_ = 0;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<std::size_t>>> faces_;         // [n][i][x], n >= 1
  std::vector<std::vector<std::vector<std::size_t>>> degeneracies_;  // [n][i][x], n < N
};

class SSetMap {
 public:
  SSetMap() = default;
  SSetMap(FinSimplicialSet source, FinSimplicialSet target,
          std::vector<std::vector<std::size_t>> levels,
          WeakEquivalence we = WeakEquivalence::unknown);

  static SSetMap identity(const FinSimplicialSet& k);

  const FinSimplicialSet& source() const { return source_; }
  const FinSimplicialSet& target() const { return target_; }
  std::size_t operator()(int n, std::size_t x) const { return levels_.at(static_cast<std::size_t>(n)).at(x); }
  const std::vector<std::vector<std::size_t>>& levels() const { return levels_; }
  bool injective() const { return injective_; }
  WeakEquivalence weak_equivalence() const { return we_; }
  SSetMap with_weak_equivalence(WeakEquivalence we) const;

  friend bool operator==(const SSetMap&, const SSetMap&) = default;

 private:
  FinSimplicialSet source_;
  FinSimplicialSet target_;
  std::vector<std::vector<std::size_t>> levels_;
  bool injective_ = true;
  WeakEquivalence we_ = WeakEquivalence::unknown;
};

SSetMap compose(const SSetMap& g, const SSetMap& f);

enum class StandardKind { simplex, boundary, horn };

/// Δ[n], ∂Δ[n] or Λ^k[n] truncated at N, simplices = monotone maps [m] -> [n].
FinSimplicialSet build_standard(StandardKind kind, int n, int truncation, int k = 0);
FinSimplicialSet standard_simplex(int n, int truncation);
FinSimplicialSet boundary(int n, int truncation);
FinSimplicialSet horn(int n, int k, int truncation);
FinSimplicialSet empty_sset(int truncation);

/// i_n : ∂Δ[n] -> Δ[n] (not a weak equivalence).
SSetMap boundary_inclusion(int n, int truncation);
/// λ : Λ^k[n] -> Δ[n] (weak equivalence).
SSetMap horn_inclusion(int n, int k, int truncation);
/// δ_i : Δ[m] -> Δ[m+1] (weak equivalence).
SSetMap face_inclusion(int m, int i, int truncation);
/// Δ[m] -> Δ[n] induced by a monotone map.
SSetMap simplex_map(const Monotone& theta, int n, int truncation);
/// ∅ -> K.
SSetMap from_empty(const FinSimplicialSet& k);

/// Sub-simplicial set on the simplices selected by `keep` (must be closed
/// under faces and degeneracies) and its inclusion.
SSetMap subobject(const FinSimplicialSet& k,
                  const std::function<bool(int, std::size_t)>& keep);

Report validate_sset(const FinSimplicialSet& k);
Report validate_sset_map(const SSetMap& f);

FinSimplicialSet product(const FinSimplicialSet& k, const FinSimplicialSet& l);
SSetMap product(const SSetMap& f, const SSetMap& g);

/// For injective f : K -> K', g : L -> L', the inclusion
/// K×L' ∪ K'×L -> K'×L' of the union inside the product.
SSetMap sset_pushout_product(const SSetMap& f, const SSetMap& g);

/// Normalized chains: degree n spanned by nondegenerate n-simplices,
/// differential Σ(-1)^i d_i with degenerate faces dropped.
ChainComplex normalized_chains(const FinSimplicialSet& k, Field f);
ChainMap normalized_chains(const SSetMap& g, Field f);

/// Normalized chains of Δ[n] (basis: injective maps [m] -> [n], lex) and the
/// map induced by θ : [m] -> [n].
ChainComplex simplex_chains(int n, Field f);
ChainMap simplex_chain_map(const Monotone& theta, int n, Field f);

}  // namespace smc
