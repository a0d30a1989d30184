#pragma once

#include <string>

#include "smc/simplicial.hpp"

namespace smc {

/// full: every X_s; normalized: X_s modulo the images of the degeneracies;
/// moore: intersection of the kernels of d_1..d_s.
enum class TotalMode { full, normalized, moore };
/// exact when the normalized top level vanishes, so nothing above the
/// truncation can contribute.
enum class Exactness { exact, truncation_limited };

std::string to_string(TotalMode m);
std::string to_string(Exactness e);

struct TotalComplexReport {
  ChainComplex complex;
  TotalMode mode = TotalMode::full;
  Exactness flag = Exactness::exact;
};

/// T_n = ⊕_{s+t=n} X_{s,t}, d = (-1)^s d_X + Σ(-1)^i d_i.
TotalComplexReport total_complex(const SimplicialObject& x, TotalMode mode);
ChainMap total_map(const SimplicialMap& f, TotalMode mode);
Exactness exactness(const SimplicialObject& x);

struct RealizationVerdict {
  bool we = false;
  Exactness flag = Exactness::exact;
};
/// Quasi-isomorphism test on normalized totals; the flag is exact only when
/// both ends are.
RealizationVerdict realization_we(const SimplicialMap& f);

/// Coend of Y_n ⊗ N(Δ[n]) over n ≤ N.
ChainComplex realize(const SimplicialObject& y);

/// Level n is Hom(N(Δ[n]), A) with the induced cosimplicial operators.
SimplicialObject sing(const ChainComplex& a, int truncation);
SimplicialMap sing(const ChainMap& g, int truncation);

/// Dimension of the space of simplicial maps X -> Y.
std::size_t hom_dim(const SimplicialObject& x, const SimplicialObject& y);
/// hom_dim(X ⊗ Δ[n], Y).
std::size_t mapping_level_dim(const SimplicialObject& x, const SimplicialObject& y, int n);

}  // namespace smc
