#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smc/linalg.hpp"
#include "smc/matrix.hpp"

namespace smc {

/// Outcome of a structural check; `where` pinpoints the first failure.
struct Report {
  bool ok = true;
  std::string where;
  explicit operator bool() const { return ok; }
  static Report pass() { return {}; }
  static Report fail(std::string w) { return {false, std::move(w)}; }
};

/// Finitely supported Z-graded complex over F_p; differentials lower degree.
/// diff(t) is a dim(t-1) x dim(t) matrix. Outside [lo, hi] everything is 0.
class ChainComplex {
 public:
  explicit ChainComplex(Field f = Field{});
  /// Shapes are checked here; d∘d = 0 is checked by validate_complex.
  ChainComplex(Field f, int lo, std::vector<std::size_t> dims, std::vector<Matrix> diffs);

  const Field& field() const { return field_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool empty_support() const { return dims_.empty(); }
  std::size_t dim(int t) const;
  Matrix diff(int t) const;
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  /// Same complex with zero-dimensional ends removed (canonical form).
  ChainComplex trimmed() const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  Field field_;
  int lo_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> diffs_;
};

/// Degree-preserving map commuting with differentials. block(t) is
/// target.dim(t) x source.dim(t).
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex source, ChainComplex target, int lo, std::vector<Matrix> blocks);

  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);
  static ChainMap identity(const ChainComplex& c);
  /// Assembles a map from a block function evaluated on the common support.
  template <class F>
  static ChainMap from_fn(const ChainComplex& source, const ChainComplex& target, F&& block);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  const Field& field() const { return source_.field(); }
  Matrix block(int t) const;
  /// Degree range on which both ends are possibly nonzero.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(blocks_.size()) - 1; }
  bool is_zero() const;

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  ChainComplex source_;
  ChainComplex target_;
  int lo_ = 0;
  std::vector<Matrix> blocks_;
};

/// Common support [lo, hi] of two complexes (may be empty: lo > hi).
std::pair<int, int> support_union(const ChainComplex& a, const ChainComplex& b);

template <class F>
ChainMap ChainMap::from_fn(const ChainComplex& source, const ChainComplex& target, F&& block) {
  const auto [lo, hi] = support_union(source, target);
  std::vector<Matrix> blocks;
  for (int t = lo; t <= hi; ++t) blocks.push_back(block(t));
  return ChainMap(source, target, lo, std::move(blocks));
}

ChainMap compose(const ChainMap& g, const ChainMap& f);  // g ∘ f
ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a);

// Standard objects.
ChainComplex zero_complex(Field f);
/// F_p in degree n.
ChainComplex sphere(Field f, int n);
/// F_p in degrees n and n-1 with identity differential.
ChainComplex disk(Field f, int n);
/// S^{n-1} -> D^n, the degree n-1 identity.
ChainMap sphere_into_disk(Field f, int n);
/// D^n -> S^n, the degree n identity.
ChainMap disk_onto_sphere(Field f, int n);

Report validate_complex(const ChainComplex& c);
/// Checks the map's shapes and d ∘ f = f ∘ d.
Report validate_map(const ChainMap& f);

/// Nonzero homology dimensions, degree -> dim H_t.
std::map<int, std::size_t> homology_dims(const ChainComplex& c);
/// Σ (-1)^t dim C_t.
long long euler_characteristic(const ChainComplex& c);
long long euler_characteristic(const std::map<int, std::size_t>& h);

ChainComplex mapping_cone(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);
/// Rank of H_t(f); H_t(f) is bijective iff this equals both homology dims.
std::size_t homology_rank(const ChainMap& f, int t);
/// Third route to quasi-isomorphism: compares H_t(f) ranks degree by degree.
bool is_quasi_iso_by_homology(const ChainMap& f);
/// First degree at which the cone has homology, if any.
std::optional<int> first_cone_homology(const ChainMap& f);

struct MonoEpi {
  bool mono = true;
  bool epi = true;
  std::optional<int> first_non_mono;
  std::optional<int> first_non_epi;
};
MonoEpi mono_epi(const ChainMap& f);
inline bool is_mono(const ChainMap& f) { return mono_epi(f).mono; }
inline bool is_epi(const ChainMap& f) { return mono_epi(f).epi; }

// ---- (co)limits ---------------------------------------------------------

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainComplex direct_sum(const std::vector<ChainComplex>& parts, Field f);
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
/// Inclusion of / projection onto summand `k` of direct_sum(parts).
ChainMap summand_inclusion(const std::vector<ChainComplex>& parts, std::size_t k, Field f);
ChainMap summand_projection(const std::vector<ChainComplex>& parts, std::size_t k, Field f);
/// [f g] : A ⊕ B -> C  and  (f; g) : C -> A ⊕ B.
ChainMap copair(const ChainMap& f, const ChainMap& g);
ChainMap pair(const ChainMap& f, const ChainMap& g);

/// Quotient of a complex by the image of a chain map into it.
struct Cokernel {
  ChainComplex object;
  ChainMap projection;                ///< ambient -> object
  std::map<int, Quotient> degrees;    ///< per-degree quotient data
  /// h : ambient -> Z vanishing on the image; returns object -> Z.
  ChainMap descend(const ChainMap& h) const;
};

/// Kernel subcomplex of a chain map.
struct Kernel {
  ChainComplex object;
  ChainMap inclusion;                 ///< object -> ambient
  std::map<int, Subspace> degrees;
  /// h : Z -> ambient landing in the kernel; returns Z -> object.
  ChainMap lift(const ChainMap& h) const;
};

Cokernel cokernel(const ChainMap& f);
Kernel kernel(const ChainMap& f);

/// Pushout of the span B <-f- A -g-> C, computed as coker(a -> (f a, -g a)).
struct Pushout {
  Cokernel coker;
  ChainMap from_b;
  ChainMap from_c;
  const ChainComplex& object() const { return coker.object; }
  /// Unique m with m∘from_b = u, m∘from_c = v for a competing cocone.
  ChainMap mediator(const ChainMap& u, const ChainMap& v) const;
};
Pushout pushout(const ChainMap& f, const ChainMap& g);

/// Pullback of the cospan B -f-> D <-g- C, computed as ker((b, c) -> f b - g c).
struct Pullback {
  Kernel ker;
  ChainMap to_b;
  ChainMap to_c;
  const ChainComplex& object() const { return ker.object; }
  /// Unique m with to_b∘m = u, to_c∘m = v for a competing cone.
  ChainMap mediator(const ChainMap& u, const ChainMap& v) const;
};
Pullback pullback(const ChainMap& f, const ChainMap& g);

// ---- internal hom and tensor ------------------------------------------

/// Hom(A,B)_t = Π_s Hom(A_s, B_{s+t}), δφ = d∘φ - (-1)^t φ∘d. Basis order:
/// s ascending, then row-major entries of the s-component.
ChainComplex hom_complex(const ChainComplex& a, const ChainComplex& b);
/// Precomposition Hom(A, B) -> Hom(A', B) with g : A' -> A.
ChainMap hom_precompose(const ChainMap& g, const ChainComplex& b);
/// Postcomposition Hom(A, B) -> Hom(A, B') with h : B -> B'.
ChainMap hom_postcompose(const ChainComplex& a, const ChainMap& h);
/// Converts a degree-0 element of Hom(A,B) to the maps it encodes.
ChainMap hom_element_to_map(const ChainComplex& a, const ChainComplex& b, const Matrix& column);
Matrix map_to_hom_element(const ChainMap& f);
/// dim of the space of chain maps A -> B, as dim Z_0 Hom(A, B).
std::size_t chain_hom_dim(const ChainComplex& a, const ChainComplex& b);

/// (A⊗B)_n = ⊕_{s+t=n} A_s ⊗ B_t with d(a⊗b) = da⊗b + (-1)^s a⊗db.
/// Basis order: s ascending, then kron(A_s, B_t) order.
ChainComplex tensor_complexes(const ChainComplex& a, const ChainComplex& b);
ChainMap tensor_maps(const ChainMap& f, const ChainMap& g);
/// Degree-n pieces of the above as plain matrices, for presentations too
/// large to hold as complexes.
std::size_t tensor_dim(const ChainComplex& a, const ChainComplex& b, int n);
std::size_t tensor_offset(const ChainComplex& a, const ChainComplex& b, int n, int s);
Matrix tensor_diff_block(const ChainComplex& a, const ChainComplex& b, int n);
Matrix tensor_map_block(const ChainMap& f, const ChainMap& g, int n);

/// Degrees shifted up by k, differential multiplied by (-1)^k.
ChainComplex shift(const ChainComplex& c, int k);
ChainMap shift(const ChainMap& f, int k);

/// d' ∘ d = 0 check used throughout; throws InvalidInput on failure.
void require_valid(const ChainComplex& c, const char* where);
void require_valid(const ChainMap& f, const char* where);

}  // namespace smc
