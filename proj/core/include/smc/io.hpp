#pragma once

#include <map>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "smc/harness.hpp"

namespace smc::io {

/// Insertion-ordered so that reports are byte-identical across runs.
using Json = nlohmann::ordered_json;

/// Any serializable domain object. The JSON "type" tag selects the member:
/// complex, chain_map, sobj, smap, sset, sset_map.
using Value = std::variant<ChainComplex, ChainMap, SimplicialObject, SimplicialMap,
                           FinSimplicialSet, SSetMap>;

std::string type_name(const Value& v);
/// Prime of the value; nullopt for simplicial sets, which carry none.
std::optional<std::uint32_t> prime_of(const Value& v);

Json to_json(const Matrix& m);
Json to_json(const ChainComplex& c);
Json to_json(const ChainMap& f);
Json to_json(const SimplicialObject& x);
Json to_json(const SimplicialMap& f);
Json to_json(const FinSimplicialSet& k);
Json to_json(const SSetMap& g);
Json to_json(const Value& v);

/// Throws ParseError naming the offending field path (e.g. "$.faces[1][0]").
/// Nested objects may repeat "p"; a different prime is rejected.
Value from_json(const Json& j);
ChainComplex complex_from_json(const Json& j);
ChainMap chain_map_from_json(const Json& j);
SimplicialObject sobj_from_json(const Json& j);
SimplicialMap smap_from_json(const Json& j);
FinSimplicialSet sset_from_json(const Json& j);
SSetMap sset_map_from_json(const Json& j);

/// Parses text; syntax errors report line and column.
Value parse(const std::string& text);
Value read_file(const std::string& path);
std::string dump(const Json& j, bool pretty);

// ---- reports ------------------------------------------------------------

Json to_json(const Witness& w);
Json to_json(const Classification& c);
Json to_json(const Sm7Report& r);
Json to_json(const CheckReport& r);
Json to_json(const Window& w);
Json homology_json(const std::map<int, std::size_t>& h);

// ---- fixtures -----------------------------------------------------------

/// Built-in objects by name at truncation N over `f`:
///   sphere:n  disk:n                       complexes
///   const:sphere:n  const:disk:n           constant simplicial objects
///   interval-kernel  reduced-interval      Reedy fibrant simplicial objects
///   delta:n  boundary:n  horn:n:k  empty    simplicial sets
///   boundary-inclusion:n  horn-inclusion:n:k  face:n:i  empty-inclusion:n
///                                          injections (face:n:i is δ_i : Δ[n-1] -> Δ[n])
///   reedy-sm7:f  reedy-sm7:i               the pushout-product counterexample pair
/// Throws InvalidInput for unknown names.
Value fixture(const std::string& name, int truncation, const Field& f);
std::vector<std::string> fixture_names();

struct Sm7Pair {
  SimplicialMap f;  ///< 0 -> cS⁰
  SSetMap i;        ///< Λ⁰[1] -> Δ[1]
};
Sm7Pair reedy_sm7_pair(int truncation, const Field& f);

/// Structural checks on the fixtures, including Λ^k[1] = Δ[0] levelwise.
Report fixture_self_test(int truncation, const Field& f);

}  // namespace smc::io
