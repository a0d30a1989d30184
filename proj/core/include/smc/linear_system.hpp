#pragma once

#include <optional>
#include <random>
#include <vector>

#include "smc/chain.hpp"
#include "smc/linalg.hpp"
#include "smc/simplicial.hpp"

namespace smc {

/// Linear system whose unknowns are chain maps F_k : A_k -> B_k and whose
/// equations are Σ left ∘ F_k ∘ right = rhs. Each unknown is parametrized by
/// a basis of the chain maps A_k -> B_k, so the commutation with differentials
/// is built in and only the extra constraints are eliminated.
class MapSystem {
 public:
  explicit MapSystem(Field f);

  /// All unknowns must be added before the first constraint.
  std::size_t add_unknown(const ChainComplex& source, const ChainComplex& target);

  struct Term {
    std::size_t unknown;
    ChainMap left;   ///< B_k -> C
    ChainMap right;  ///< D -> A_k
  };
  /// Σ terms = rhs as maps D -> C; a missing rhs means 0.
  void add_constraint(const std::vector<Term>& terms, const ChainComplex& from, const ChainComplex& to,
                      const std::optional<ChainMap>& rhs = std::nullopt);
  /// Shorthand for a term with identity on one or both sides.
  Term term(std::size_t unknown, const std::optional<ChainMap>& left, const std::optional<ChainMap>& right) const;

  std::size_t parameters() const { return offsets_.empty() ? 0 : offsets_.back(); }
  /// Dimension of the solution space of the homogeneous system.
  std::size_t nullity() const;
  bool consistent() const;
  /// Some solution (free parameters set to 0), or nullopt when inconsistent.
  std::optional<std::vector<ChainMap>> solve() const;
  /// A uniformly random solution, or nullopt when inconsistent.
  std::optional<std::vector<ChainMap>> random_solution(std::mt19937_64& rng) const;

 private:
  struct Unknown {
    ChainComplex source;
    ChainComplex target;
    int lo = 0;
    int hi = -1;
    std::vector<std::size_t> raw_offset;  ///< per degree in lo..hi, into the raw vectorization
    Matrix basis;                         ///< raw x parameters
  };
  void ensure_echelon() const;
  ChainMap assemble(const Unknown& u, const Matrix& coeffs) const;
  std::optional<Matrix> particular() const;
  std::vector<ChainMap> split(const Matrix& x) const;

  Field field_;
  std::vector<Unknown> unknowns_;
  std::vector<std::size_t> offsets_{0};
  std::size_t raw_total_ = 0;
  mutable std::optional<Echelon> echelon_;
};

/// A simplicial map X -> Y as one unknown per level.
struct SimplicialUnknown {
  SimplicialObject source;
  SimplicialObject target;
  std::vector<std::size_t> levels;
};
SimplicialUnknown add_simplicial_unknown(MapSystem& sys, const SimplicialObject& x, const SimplicialObject& y);
/// Commutation with every face and degeneracy.
void add_naturality(MapSystem& sys, const SimplicialUnknown& u);
/// left ∘ u ∘ right levelwise, as constraint terms at level n.
MapSystem::Term level_term(const MapSystem& sys, const SimplicialUnknown& u, int n,
                           const std::optional<ChainMap>& left, const std::optional<ChainMap>& right);
SimplicialMap extract(const SimplicialUnknown& u, const std::vector<ChainMap>& solution);

}  // namespace smc
