#pragma once

#include <string>
#include <vector>

#include "smc/chain.hpp"
#include "smc/sset.hpp"

namespace smc {

/// Simplicial object in Ch(F_p), truncated at level N.
/// face(n, i) : X_n -> X_{n-1} for 1 <= n, 0 <= i <= n;
/// degeneracy(n, i) : X_n -> X_{n+1} for n < N, 0 <= i <= n.
class SimplicialObject {
 public:
  SimplicialObject() = default;
  SimplicialObject(int truncation, std::vector<ChainComplex> levels,
                   std::vector<std::vector<ChainMap>> faces,
                   std::vector<std::vector<ChainMap>> degeneracies);

  int truncation() const { return truncation_; }
  const Field& field() const { return levels_.front().field(); }
  const ChainComplex& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  const std::vector<ChainComplex>& levels() const { return levels_; }
  const ChainMap& face(int n, int i) const;
  const ChainMap& degeneracy(int n, int i) const;
  const std::vector<std::vector<ChainMap>>& faces() const { return faces_; }
  const std::vector<std::vector<ChainMap>>& degeneracies() const { return degeneracies_; }

  /// X(θ) : X_n -> X_m for θ : [m] -> [n].
  ChainMap apply(const Monotone& theta, int n) const;
  bool is_zero() const;

  friend bool operator==(const SimplicialObject&, const SimplicialObject&) = default;

 private:
  int truncation_ = 0;
  std::vector<ChainComplex> levels_;
  std::vector<std::vector<ChainMap>> faces_;         // [n][i], n >= 1
  std::vector<std::vector<ChainMap>> degeneracies_;  // [n][i], n < N
};

class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(SimplicialObject source, SimplicialObject target, std::vector<ChainMap> levels);

  static SimplicialMap identity(const SimplicialObject& x);
  static SimplicialMap zero(const SimplicialObject& x, const SimplicialObject& y);

  const SimplicialObject& source() const { return source_; }
  const SimplicialObject& target() const { return target_; }
  const ChainMap& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  const std::vector<ChainMap>& levels() const { return levels_; }
  int truncation() const { return source_.truncation(); }
  const Field& field() const { return source_.field(); }

  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;

 private:
  SimplicialObject source_;
  SimplicialObject target_;
  std::vector<ChainMap> levels_;
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g ∘ f
SimplicialMap operator+(const SimplicialMap& a, const SimplicialMap& b);
SimplicialMap operator-(const SimplicialMap& a);

Report validate_sobj(const SimplicialObject& x);
Report validate_smap(const SimplicialMap& f);
void require_valid(const SimplicialObject& x, const char* where);
void require_valid(const SimplicialMap& f, const char* where);

SimplicialObject zero_sobj(Field f, int truncation);
/// cA: every level A, every operator the identity.
SimplicialObject constant(const ChainComplex& a, int truncation);
SimplicialMap constant(const ChainMap& f, int truncation);
inline const ChainComplex& ev0(const SimplicialObject& x) { return x.level(0); }

SimplicialObject direct_sum(const SimplicialObject& x, const SimplicialObject& y);
SimplicialMap direct_sum(const SimplicialMap& f, const SimplicialMap& g);
/// [f g] : X ⊕ Y -> Z and (f; g) : Z -> X ⊕ Y.
SimplicialMap copair(const SimplicialMap& f, const SimplicialMap& g);
SimplicialMap pair(const SimplicialMap& f, const SimplicialMap& g);
SimplicialMap summand_inclusion(const SimplicialObject& x, const SimplicialObject& y, int k);
SimplicialMap summand_projection(const SimplicialObject& x, const SimplicialObject& y, int k);

/// (X ⊗ K)_n = ⊕_{σ ∈ K_n} X_n, summands in simplex order.
SimplicialObject tensor(const SimplicialObject& x, const FinSimplicialSet& k);
SimplicialObject tensor(const ChainComplex& a, const FinSimplicialSet& k);
/// f ⊗ g : X ⊗ K -> Y ⊗ L.
SimplicialMap tensor(const SimplicialMap& f, const SSetMap& g);
SimplicialMap tensor(const SimplicialMap& f, const FinSimplicialSet& k);
SimplicialMap tensor(const SimplicialObject& x, const SSetMap& g);

/// Levelwise kernel / cokernel with induced operators.
struct SKernel {
  SimplicialObject object;
  SimplicialMap inclusion;
  std::vector<Kernel> levels;
  /// h : Z -> source landing in the kernel; returns Z -> object.
  SimplicialMap lift(const SimplicialMap& h) const;
};
struct SCokernel {
  SimplicialObject object;
  SimplicialMap projection;
  std::vector<Cokernel> levels;
  /// h : target -> Z vanishing on the image; returns object -> Z.
  SimplicialMap descend(const SimplicialMap& h) const;
};
SKernel kernel(const SimplicialMap& f);
SCokernel cokernel(const SimplicialMap& f);

struct SPushout {
  SCokernel coker;
  SimplicialMap from_b;
  SimplicialMap from_c;
  const SimplicialObject& object() const { return coker.object; }
  SimplicialMap mediator(const SimplicialMap& u, const SimplicialMap& v) const;
};
struct SPullback {
  SKernel ker;
  SimplicialMap to_b;
  SimplicialMap to_c;
  const SimplicialObject& object() const { return ker.object; }
  SimplicialMap mediator(const SimplicialMap& u, const SimplicialMap& v) const;
};
/// Pushout of B <-f- A -g-> C and pullback of B -f-> D <-g- C, levelwise.
SPushout pushout_s(const SimplicialMap& f, const SimplicialMap& g);
SPullback pullback_s(const SimplicialMap& f, const SimplicialMap& g);

/// Every d_i and s_i is a quasi-isomorphism; `where` names the first that is not.
Report is_homotopically_constant(const SimplicialObject& x);

/// Applies shift by k to every level and operator.
SimplicialObject prolong_shift(const SimplicialObject& x, int k);
SimplicialMap prolong_shift(const SimplicialMap& f, int k);
/// Applies − ⊗ A to every level and operator.
SimplicialObject prolong_tensor(const SimplicialObject& x, const ChainComplex& a);
SimplicialMap prolong_tensor(const SimplicialMap& f, const ChainComplex& a);
/// X ⊗ g : X ⊗ A -> X ⊗ B.
SimplicialMap prolong_tensor(const SimplicialObject& x, const ChainMap& g);

}  // namespace smc
