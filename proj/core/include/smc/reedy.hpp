#pragma once

#include <functional>
#include <map>
#include <vector>

#include "smc/simplicial.hpp"

namespace smc {

/// Degreewise layout of a direct sum ⊕_k parts[k] kept as plain matrices, so
/// large presentations never become ChainComplex objects.
struct SummandLayout {
  std::vector<ChainComplex> parts;
  int lo = 0;
  int hi = -1;

  SummandLayout() = default;
  explicit SummandLayout(std::vector<ChainComplex> p);
  std::size_t dim(int t) const;
  std::size_t offset(int t, std::size_t k) const;
  /// Block-diagonal differential (dim(t-1) x dim(t)).
  Matrix diff(int t, const Field& f) const;
};

/// L_n X as the colimit over all θ : [n] -> [j], j < n.
struct Latching {
  int n = 0;
  ChainComplex object;
  ChainMap to_level;                 ///< L_n X -> X_n
  std::vector<Monotone> index;       ///< summand θ, j ascending then lex
  std::vector<int> levels;           ///< j for each summand
  SummandLayout layout;              ///< ⊕_θ X_j
  std::map<int, Quotient> degrees;   ///< presentation quotient per chain degree
  /// Structure map X_j -> L_n X of summand k.
  ChainMap inclusion(std::size_t k) const;
};

/// M_n X as the limit over all α : [j] -> [n], j < n.
struct Matching {
  int n = 0;
  ChainComplex object;
  ChainMap from_level;               ///< X_n -> M_n X
  std::vector<Monotone> index;       ///< summand α, j ascending then lex
  SummandLayout layout;              ///< ⊕_α X_j
  std::map<int, Subspace> degrees;   ///< limit inside the product per chain degree
  /// Projection M_n X -> X_j onto summand k.
  ChainMap component(std::size_t k) const;
  std::size_t find(const Monotone& alpha) const;
};

Latching latching(const SimplicialObject& x, int n);
Matching matching(const SimplicialObject& x, int n);
/// L_n f and M_n f between precomputed objects.
ChainMap latching_map(const SimplicialMap& f, const Latching& lx, const Latching& ly);
ChainMap matching_map(const SimplicialMap& f, const Matching& mx, const Matching& my);

/// Degree-zero cotensor X^K: compatible families (x_σ ∈ X_n)_{σ ∈ K_n, n ≤ N},
/// stored through their values on nondegenerate simplices.
struct Cotensor {
  ChainComplex object;
  FinSimplicialSet shape;                         ///< K
  std::vector<std::pair<int, std::size_t>> cells; ///< nondegenerate (level, simplex)
  SummandLayout layout;                           ///< ⊕_cells X_level
  std::vector<std::vector<ChainMap>> degens;      ///< X's degeneracies, copied
  std::map<int, Subspace> degrees;

  /// The value at an arbitrary simplex: X^K -> X_n.
  ChainMap component(int n, std::size_t simplex) const;
  /// Assembles Z -> X^K from per-cell maps Z -> X_level; throws InvalidInput
  /// when the family is not compatible.
  ChainMap lift(const ChainComplex& z,
                const std::function<ChainMap(int, std::size_t)>& cell_map) const;
};

Cotensor cotensor0(const SimplicialObject& x, const FinSimplicialSet& k);
/// X^L -> X^K for i : K -> L (restriction of families).
ChainMap cotensor_restrict(const Cotensor& xl, const Cotensor& xk, const SSetMap& i);
/// X^K -> Y^K induced by f.
ChainMap cotensor_push(const Cotensor& xk, const Cotensor& yk, const SimplicialMap& f);

/// X_n ≅ X^{Δ[n]}, x ↦ (X(α) x)_α.
ChainMap level_to_simplex_cotensor(const SimplicialObject& x, int n, const Cotensor& simplex_cot);
/// M_n X ≅ X^{∂Δ[n]}, selecting the injective components.
ChainMap matching_to_boundary_cotensor(const Matching& m, const Cotensor& boundary_cot);

}  // namespace smc
