#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "smc/model.hpp"

namespace smc {

struct SampleParams {
  int truncation = 2;
  int deg_lo = 0;          ///< chain degrees used by random complexes
  int deg_hi = 1;
  std::size_t max_cells = 2;  ///< spheres/disks per random complex
  Field field{};
  /// Draws with a level of larger total dimension are replaced.
  std::size_t max_level_dim = 8;
  /// Restrict fibration samples to objects whose exactness flag is exact.
  bool exact_only = false;
};

enum class SampleKind {
  random_sobj,  ///< returned as its identity map
  random_map,
  reedy_fibration,
  equifibered_fibration,
  reedy_trivial_fibration,
  reedy_cofibration,
  skeletal_sobj,  ///< identity of an object with exact flag
};
std::string to_string(SampleKind k);
SampleKind parse_sample_kind(const std::string& s);

using Rng = std::mt19937_64;

/// Sum of spheres and disks in the degree window, in a random basis.
ChainComplex random_complex(Rng& rng, const SampleParams& p, bool acyclic = false);
/// A random element of the space of chain maps A -> B.
ChainMap random_chain_map(Rng& rng, const ChainComplex& a, const ChainComplex& b);
/// A -> A ⊕ C and A ⊕ C -> A with a random off-diagonal part; quasi-isos
/// when C is acyclic.
ChainMap random_mono(Rng& rng, const SampleParams& p, const ChainComplex& a, bool quasi_iso);
ChainMap random_epi(Rng& rng, const SampleParams& p, const ChainComplex& a, bool quasi_iso);
/// A random element of the space of simplicial maps X -> Y.
SimplicialMap random_smap(Rng& rng, const SimplicialObject& x, const SimplicialObject& y);

/// ker(cS⁰ ⊗ Δ[1] -> cS⁰): Reedy fibrant and, for N ≥ 2, of exact flag.
SimplicialObject interval_kernel(const Field& f, int truncation);
/// cS⁰ ⊗ Δ[1] modulo the vertex 0.
SimplicialObject reduced_interval(const Field& f, int truncation);

SimplicialObject random_sobj(Rng& rng, const SampleParams& p);
SimplicialObject random_skeletal_sobj(Rng& rng, const SampleParams& p);

/// Deterministic in (kind, params, seed). The result is classified before it
/// is returned; a sample outside its advertised class throws std::logic_error.
SimplicialMap sample(SampleKind kind, const SampleParams& p, std::uint64_t seed);

}  // namespace smc
