#include "smc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "smc/error.hpp"
#include "smc/sample.hpp"

namespace smc::io {
namespace {

using std::size_t;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

std::string at(const std::string& path, size_t k) { return path + "[" + std::to_string(k) + "]"; }
std::string dot(const std::string& path, const char* key) { return path + "." + key; }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

const Json& array_of(const Json& j, size_t n, const std::string& path) {
  array(j, path);
  if (j.size() != n) fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  return j;
}

long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

size_t as_size(const Json& j, const std::string& path) {
  const long long v = as_int(j, path);
  if (v < 0) fail(path, "expected a non-negative integer");
  return static_cast<size_t>(v);
}

int as_level(const Json& j, const std::string& path) {
  const long long v = as_int(j, path);
  if (v < -1'000'000 || v > 1'000'000) fail(path, "degree out of range");
  return static_cast<int>(v);
}

void check_type(const Json& j, const char* expected, const std::string& path) {
  auto it = j.find("type");
  if (it == j.end()) return;
  if (!it->is_string() || it->get<std::string>() != expected)
    fail(dot(path, "type"), std::string("expected \"") + expected + "\"");
}

/// Prime of a (possibly nested) object. Nested objects inherit the
/// enclosing prime and may restate it, but never change it.
Field read_field(const Json& j, const std::string& path, const std::optional<Field>& parent) {
  auto it = j.find("p");
  if (it == j.end()) {
    if (parent) return *parent;
    fail(path, "missing field \"p\"");
  }
  const long long p = as_int(*it, dot(path, "p"));
  if (p < 2 || p >= (1LL << 31)) fail(dot(path, "p"), "modulus out of range");
  if (parent && parent->p() != static_cast<std::uint32_t>(p)) {
    fail(dot(path, "p"), "mixed primes: p=" + std::to_string(p) + " inside an object over p=" +
                             std::to_string(parent->p()));
  }
  try {
    return Field(static_cast<std::uint32_t>(p));
  } catch (const InvalidInput& e) {
    fail(dot(path, "p"), e.what());
  }
}

Matrix read_matrix(const Json& j, size_t rows, size_t cols, const Field& f, const std::string& path) {
  array_of(j, rows, path);
  std::vector<std::vector<long long>> entries(rows);
  for (size_t r = 0; r < rows; ++r) {
    const std::string rp = at(path, r);
    array_of(j[r], cols, rp);
    entries[r].reserve(cols);
    for (size_t c = 0; c < cols; ++c) entries[r].push_back(as_int(j[r][c], at(rp, c)));
  }
  return Matrix::from_rows(rows, cols, entries, f);
}

// Constructors report shape problems as ShapeError / InvalidInput; inside the
// reader they become parse errors at the enclosing path.
template <class Fn>
auto construct(const std::string& path, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ShapeError& e) {
    fail(path, e.what());
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  } catch (const FieldMismatch& e) {
    fail(path, e.what());
  }
}

// ---- bodies ---------------------------------------------------------------

Json complex_body(const ChainComplex& c) {
  Json j;
  j["lo"] = c.lo();
  Json dims = Json::array();
  Json diffs = Json::array();
  for (int t = c.lo(); t <= c.hi(); ++t) {
    dims.push_back(c.dim(t));
    if (t > c.lo()) diffs.push_back(to_json(c.diff(t)));
  }
  j["dims"] = std::move(dims);
  j["diffs"] = std::move(diffs);
  return j;
}

ChainComplex read_complex(const Json& j, const std::string& path, const std::optional<Field>& parent) {
  check_type(j, "complex", path);
  const Field f = read_field(j, path, parent);
  const int lo = as_level(field(j, "lo", path), dot(path, "lo"));
  const std::string dp = dot(path, "dims");
  const Json& jd = array(field(j, "dims", path), dp);
  std::vector<size_t> dims;
  for (size_t k = 0; k < jd.size(); ++k) dims.push_back(as_size(jd[k], at(dp, k)));
  const std::string fp = dot(path, "diffs");
  const Json& jf = array_of(field(j, "diffs", path), dims.empty() ? 0 : dims.size() - 1, fp);
  std::vector<Matrix> diffs;
  if (!dims.empty()) diffs.emplace_back(0, dims[0], f);
  for (size_t k = 0; k + 1 < dims.size(); ++k) diffs.push_back(read_matrix(jf[k], dims[k], dims[k + 1], f, at(fp, k)));
  return construct(path, [&] { return ChainComplex(f, lo, dims, diffs); });
}

Json map_body(const ChainMap& m) {
  Json j;
  j["lo"] = m.lo();
  Json blocks = Json::array();
  for (int t = m.lo(); t <= m.hi(); ++t) blocks.push_back(to_json(m.block(t)));
  j["blocks"] = std::move(blocks);
  return j;
}

ChainMap read_map_body(const Json& j, const ChainComplex& src, const ChainComplex& tgt, const std::string& path) {
  const int lo = as_level(field(j, "lo", path), dot(path, "lo"));
  const std::string bp = dot(path, "blocks");
  const Json& jb = array(field(j, "blocks", path), bp);
  std::vector<Matrix> blocks;
  for (size_t k = 0; k < jb.size(); ++k) {
    const int t = lo + static_cast<int>(k);
    blocks.push_back(read_matrix(jb[k], tgt.dim(t), src.dim(t), src.field(), at(bp, k)));
  }
  return construct(path, [&] { return ChainMap(src, tgt, lo, blocks); });
}

ChainMap read_chain_map(const Json& j, const std::string& path, const std::optional<Field>& parent) {
  check_type(j, "chain_map", path);
  const Field f = read_field(j, path, parent);
  const ChainComplex src = read_complex(field(j, "source", path), dot(path, "source"), f);
  const ChainComplex tgt = read_complex(field(j, "target", path), dot(path, "target"), f);
  return read_map_body(j, src, tgt, path);
}

Json sobj_body(const SimplicialObject& x) {
  Json j;
  const int N = x.truncation();
  j["N"] = N;
  Json levels = Json::array();
  for (int n = 0; n <= N; ++n) levels.push_back(complex_body(x.level(n)));
  j["levels"] = std::move(levels);
  Json faces = Json::array();
  for (int n = 1; n <= N; ++n) {
    Json row = Json::array();
    for (int i = 0; i <= n; ++i) row.push_back(map_body(x.face(n, i)));
    faces.push_back(std::move(row));
  }
  j["faces"] = std::move(faces);
  Json degens = Json::array();
  for (int n = 0; n < N; ++n) {
    Json row = Json::array();
    for (int i = 0; i <= n; ++i) row.push_back(map_body(x.degeneracy(n, i)));
    degens.push_back(std::move(row));
  }
  j["degeneracies"] = std::move(degens);
  return j;
}

int read_truncation(const Json& j, const std::string& path) {
  const long long n = as_int(field(j, "N", path), dot(path, "N"));
  if (n < 0 || n > 16) fail(dot(path, "N"), "truncation out of range");
  return static_cast<int>(n);
}

SimplicialObject read_sobj(const Json& j, const std::string& path, const std::optional<Field>& parent) {
  check_type(j, "sobj", path);
  const Field f = read_field(j, path, parent);
  const int N = read_truncation(j, path);
  const auto count = static_cast<size_t>(N + 1);
  const std::string lp = dot(path, "levels");
  const Json& jl = array_of(field(j, "levels", path), count, lp);
  std::vector<ChainComplex> levels;
  for (size_t n = 0; n < count; ++n) levels.push_back(read_complex(jl[n], at(lp, n), f));

  const std::string fp = dot(path, "faces");
  const Json& jf = array_of(field(j, "faces", path), count - 1, fp);
  std::vector<std::vector<ChainMap>> faces(count);
  for (size_t n = 1; n < count; ++n) {
    const std::string rp = at(fp, n - 1);
    const Json& row = array_of(jf[n - 1], n + 1, rp);
    for (size_t i = 0; i <= n; ++i) faces[n].push_back(read_map_body(row[i], levels[n], levels[n - 1], at(rp, i)));
  }
  const std::string gp = dot(path, "degeneracies");
  const Json& jg = array_of(field(j, "degeneracies", path), count - 1, gp);
  std::vector<std::vector<ChainMap>> degens(count);
  for (size_t n = 0; n + 1 < count; ++n) {
    const std::string rp = at(gp, n);
    const Json& row = array_of(jg[n], n + 1, rp);
    for (size_t i = 0; i <= n; ++i) degens[n].push_back(read_map_body(row[i], levels[n], levels[n + 1], at(rp, i)));
  }
  return construct(path, [&] { return SimplicialObject(N, levels, faces, degens); });
}

SimplicialMap read_smap(const Json& j, const std::string& path, const std::optional<Field>& parent) {
  check_type(j, "smap", path);
  const Field f = read_field(j, path, parent);
  const SimplicialObject src = read_sobj(field(j, "source", path), dot(path, "source"), f);
  const SimplicialObject tgt = read_sobj(field(j, "target", path), dot(path, "target"), f);
  if (src.truncation() != tgt.truncation()) fail(path, "source and target truncations differ");
  const std::string lp = dot(path, "levels");
  const Json& jl = array_of(field(j, "levels", path), static_cast<size_t>(src.truncation() + 1), lp);
  std::vector<ChainMap> levels;
  for (int n = 0; n <= src.truncation(); ++n) {
    levels.push_back(read_map_body(jl[static_cast<size_t>(n)], src.level(n), tgt.level(n), at(lp, static_cast<size_t>(n))));
  }
  return construct(path, [&] { return SimplicialMap(src, tgt, levels); });
}

Json index_table(const std::vector<std::vector<std::vector<size_t>>>& ops, size_t from) {
  Json out = Json::array();
  for (size_t n = from; n < ops.size(); ++n) out.push_back(ops[n]);
  return out;
}

Json sset_body(const FinSimplicialSet& k) {
  Json j;
  const int N = k.truncation();
  j["N"] = N;
  Json labels = Json::array();
  for (int n = 0; n <= N; ++n) labels.push_back(k.labels(n));
  j["labels"] = std::move(labels);
  j["faces"] = index_table(k.faces(), 1);
  Json degens = index_table(k.degeneracies(), 0);
  if (!degens.empty()) degens.erase(degens.end() - 1);  // level N has none
  j["degeneracies"] = std::move(degens);
  return j;
}

std::vector<size_t> read_indices(const Json& j, size_t n, const std::string& path) {
  array_of(j, n, path);
  std::vector<size_t> out;
  for (size_t x = 0; x < n; ++x) out.push_back(as_size(j[x], at(path, x)));
  return out;
}

FinSimplicialSet read_sset(const Json& j, const std::string& path) {
  check_type(j, "sset", path);
  const int N = read_truncation(j, path);
  const auto count = static_cast<size_t>(N + 1);
  const std::string lp = dot(path, "labels");
  const Json& jl = array_of(field(j, "labels", path), count, lp);
  std::vector<std::vector<std::string>> labels(count);
  for (size_t n = 0; n < count; ++n) {
    const std::string rp = at(lp, n);
    for (size_t x = 0; x < array(jl[n], rp).size(); ++x) {
      if (!jl[n][x].is_string()) fail(at(rp, x), "expected a string");
      labels[n].push_back(jl[n][x].get<std::string>());
    }
  }
  auto table = [&](const char* key, size_t first, size_t last) {
    const std::string tp = dot(path, key);
    const Json& jt = array_of(field(j, key, path), last - first, tp);
    std::vector<std::vector<std::vector<size_t>>> out(count);
    for (size_t n = first; n < last; ++n) {
      const std::string rp = at(tp, n - first);
      const Json& row = array_of(jt[n - first], n + 1, rp);
      for (size_t i = 0; i <= n; ++i) out[n].push_back(read_indices(row[i], labels[n].size(), at(rp, i)));
    }
    return out;
  };
  auto faces = table("faces", 1, count);
  auto degens = table("degeneracies", 0, count - 1);
  return construct(path, [&] { return FinSimplicialSet(N, labels, faces, degens); });
}

std::string we_name(WeakEquivalence we) {
  switch (we) {
    case WeakEquivalence::yes: return "yes";
    case WeakEquivalence::no: return "no";
    case WeakEquivalence::unknown: break;
  }
  return "unknown";
}

SSetMap read_sset_map(const Json& j, const std::string& path) {
  check_type(j, "sset_map", path);
  const FinSimplicialSet src = read_sset(field(j, "source", path), dot(path, "source"));
  const FinSimplicialSet tgt = read_sset(field(j, "target", path), dot(path, "target"));
  if (src.truncation() != tgt.truncation()) fail(path, "source and target truncations differ");
  const std::string lp = dot(path, "levels");
  const Json& jl = array_of(field(j, "levels", path), static_cast<size_t>(src.truncation() + 1), lp);
  std::vector<std::vector<size_t>> levels;
  for (int n = 0; n <= src.truncation(); ++n)
    levels.push_back(read_indices(jl[static_cast<size_t>(n)], src.size(n), at(lp, static_cast<size_t>(n))));
  WeakEquivalence we = WeakEquivalence::unknown;
  if (auto it = j.find("we"); it != j.end()) {
    const std::string s = it->is_string() ? it->get<std::string>() : "";
    if (s == "yes") we = WeakEquivalence::yes;
    else if (s == "no") we = WeakEquivalence::no;
    else if (s != "unknown") fail(dot(path, "we"), "expected \"yes\", \"no\" or \"unknown\"");
  }
  return construct(path, [&] { return SSetMap(src, tgt, levels, we); });
}

Json tagged(const char* type, std::optional<std::uint32_t> p, const Json& body) {
  Json j;
  j["type"] = type;
  if (p) j["p"] = *p;
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

std::pair<size_t, size_t> line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string type_name(const Value& v) {
  static const char* names[] = {"complex", "chain_map", "sobj", "smap", "sset", "sset_map"};
  return names[v.index()];
}

std::optional<std::uint32_t> prime_of(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::optional<std::uint32_t> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FinSimplicialSet> || std::is_same_v<T, SSetMap>) {
          return std::nullopt;
        } else {
          return x.field().p();
        }
      },
      v);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ChainComplex& c) { return tagged("complex", c.field().p(), complex_body(c)); }

Json to_json(const ChainMap& f) {
  Json body;
  body["source"] = complex_body(f.source());
  body["target"] = complex_body(f.target());
  const Json blocks = map_body(f);
  for (const auto& [k, v] : blocks.items()) body[k] = v;
  return tagged("chain_map", f.field().p(), body);
}

Json to_json(const SimplicialObject& x) { return tagged("sobj", x.field().p(), sobj_body(x)); }

Json to_json(const SimplicialMap& f) {
  Json body;
  body["source"] = sobj_body(f.source());
  body["target"] = sobj_body(f.target());
  Json levels = Json::array();
  for (const auto& m : f.levels()) levels.push_back(map_body(m));
  body["levels"] = std::move(levels);
  return tagged("smap", f.field().p(), body);
}

Json to_json(const FinSimplicialSet& k) { return tagged("sset", std::nullopt, sset_body(k)); }

Json to_json(const SSetMap& g) {
  Json body;
  body["source"] = sset_body(g.source());
  body["target"] = sset_body(g.target());
  body["levels"] = g.levels();
  body["we"] = we_name(g.weak_equivalence());
  return tagged("sset_map", std::nullopt, body);
}

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Value from_json(const Json& j) {
  const std::string path = "$";
  const Json& t = field(j, "type", path);
  if (!t.is_string()) fail(dot(path, "type"), "expected a string");
  const std::string type = t.get<std::string>();
  if (type == "complex") return read_complex(j, path, std::nullopt);
  if (type == "chain_map") return read_chain_map(j, path, std::nullopt);
  if (type == "sobj") return read_sobj(j, path, std::nullopt);
  if (type == "smap") return read_smap(j, path, std::nullopt);
  if (type == "sset") return read_sset(j, path);
  if (type == "sset_map") return read_sset_map(j, path);
  fail(dot(path, "type"), "unknown type \"" + type + "\"");
}

ChainComplex complex_from_json(const Json& j) { return read_complex(j, "$", std::nullopt); }
ChainMap chain_map_from_json(const Json& j) { return read_chain_map(j, "$", std::nullopt); }
SimplicialObject sobj_from_json(const Json& j) { return read_sobj(j, "$", std::nullopt); }
SimplicialMap smap_from_json(const Json& j) { return read_smap(j, "$", std::nullopt); }
FinSimplicialSet sset_from_json(const Json& j) { return read_sset(j, "$"); }
SSetMap sset_map_from_json(const Json& j) { return read_sset_map(j, "$"); }

Value parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  return from_json(j);
}

Value read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

// ---- reports --------------------------------------------------------------

Json to_json(const Witness& w) {
  Json j;
  j["level"] = w.level;
  if (w.degree) j["degree"] = *w.degree;
  if (w.index) j["index"] = *w.index;
  j["reason"] = w.reason;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["level_we"] = c.level_we;
  j["reedy_cof"] = c.reedy_cof;
  j["reedy_fib"] = c.reedy_fib;
  j["equifibered"] = c.equifibered;
  j["realization_we"] = c.realization_we;
  j["realization_flag"] = to_string(c.realization_flag);
  j["reedy_trivial_fib"] = c.reedy_trivial_fib();
  Json w = Json::object();
  auto put = [&](const char* key, const std::optional<Witness>& x) {
    if (x) w[key] = to_json(*x);
  };
  put("level_we", c.level_we_witness);
  put("reedy_cof", c.reedy_cof_witness);
  put("reedy_fib", c.reedy_fib_witness);
  put("equifibered", c.equifibered_witness);
  put("realization_we", c.realization_witness);
  j["witnesses"] = std::move(w);
  return j;
}

Json to_json(const Sm7Report& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  Json j;
  j["structure"] = to_string(r.structure);
  j["cofibration"] = r.cofibration;
  j["level_trivial"] = opt(r.level_trivial);
  j["acyclic"] = opt(r.acyclic);
  j["acyclic_asserted"] = r.acyclic_asserted;
  j["expected_failure"] = r.expected_failure;
  j["ok"] = r.ok();
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["box"] = to_json(r.box);
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["property"] = r.property;
  j["seed"] = r.seed;
  j["window"] = r.window;
  j["draws"] = r.draws;
  j["premise"] = r.premise;
  j["violations"] = r.violations;
  j["ok"] = r.ok();
  j["details"] = r.details;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const Window& w) {
  Json j;
  j["degrees"] = {w.deg_lo, w.deg_hi};
  j["simplices"] = {w.n_lo, w.n_hi};
  return j;
}

Json homology_json(const std::map<int, std::size_t>& h) {
  Json j = Json::object();
  for (const auto& [t, d] : h) j[std::to_string(t)] = d;
  return j;
}

// ---- fixtures -------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  for (;;) {
    const size_t k = s.find(':', start);
    out.push_back(s.substr(start, k - start));
    if (k == std::string::npos) return out;
    start = k + 1;
  }
}

int to_int(const std::string& s, const std::string& name) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw InvalidInput("fixture " + name + ": bad integer \"" + s + "\"");
  return v;
}

bool same_shape(const FinSimplicialSet& a, const FinSimplicialSet& b) {
  if (a.truncation() != b.truncation()) return false;
  for (int n = 0; n <= a.truncation(); ++n)
    if (a.size(n) != b.size(n)) return false;
  return a.faces() == b.faces() && a.degeneracies() == b.degeneracies();
}

}  // namespace

Sm7Pair reedy_sm7_pair(int truncation, const Field& f) {
  const SimplicialObject c = constant(sphere(f, 0), truncation);
  return {SimplicialMap::zero(zero_sobj(f, truncation), c), horn_inclusion(1, 0, truncation)};
}

Value fixture(const std::string& name, int N, const Field& f) {
  const auto parts = split(name);
  const auto& head = parts[0];
  auto arg = [&](size_t k) {
    if (parts.size() <= k) throw InvalidInput("fixture " + name + ": missing parameter");
    return to_int(parts[k], name);
  };
  auto arity = [&](size_t n) {
    if (parts.size() != n + 1) throw InvalidInput("fixture " + name + ": expected " + std::to_string(n) + " parameter(s)");
  };
  auto simplex_param = [&](size_t k) {
    const int n = arg(k);
    if (n < 0) throw InvalidInput("fixture " + name + ": negative simplex parameter");
    return n;
  };

  if (head == "sphere") { arity(1); return sphere(f, arg(1)); }
  if (head == "disk") { arity(1); return disk(f, arg(1)); }
  if (head == "const") {
    if (parts.size() != 3) throw InvalidInput("fixture " + name + ": expected const:sphere:n or const:disk:n");
    const int n = arg(2);
    if (parts[1] == "sphere") return constant(sphere(f, n), N);
    if (parts[1] == "disk") return constant(disk(f, n), N);
    throw InvalidInput("unknown fixture " + name);
  }
  if (head == "interval-kernel") { arity(0); return interval_kernel(f, N); }
  if (head == "reduced-interval") { arity(0); return reduced_interval(f, N); }
  if (head == "delta") { arity(1); return standard_simplex(simplex_param(1), N); }
  if (head == "boundary") { arity(1); return boundary(simplex_param(1), N); }
  if (head == "horn") { arity(2); return horn(simplex_param(1), arg(2), N); }
  if (head == "empty") { arity(0); return empty_sset(N); }
  if (head == "boundary-inclusion") { arity(1); return boundary_inclusion(simplex_param(1), N); }
  if (head == "horn-inclusion") { arity(2); return horn_inclusion(simplex_param(1), arg(2), N); }
  if (head == "face") {
    arity(2);
    const int n = simplex_param(1);
    if (n < 1) throw InvalidInput("fixture " + name + ": face inclusions need n >= 1");
    return face_inclusion(n - 1, arg(2), N);
  }
  if (head == "empty-inclusion") { arity(1); return from_empty(standard_simplex(simplex_param(1), N)); }
  if (head == "reedy-sm7") {
    arity(1);
    if (parts[1] == "f") return reedy_sm7_pair(N, f).f;
    if (parts[1] == "i") return reedy_sm7_pair(N, f).i;
  }
  throw InvalidInput("unknown fixture " + name);
}

std::vector<std::string> fixture_names() {
  return {"sphere:n", "disk:n", "const:sphere:n", "const:disk:n", "interval-kernel", "reduced-interval",
          "delta:n", "boundary:n", "horn:n:k", "empty", "boundary-inclusion:n", "horn-inclusion:n:k",
          "face:n:i", "empty-inclusion:n", "reedy-sm7:f", "reedy-sm7:i"};
}

Report fixture_self_test(int N, const Field& f) {
  const FinSimplicialSet point = standard_simplex(0, N);
  for (int k = 0; k <= 1; ++k) {
    if (!same_shape(horn(1, k, N), point)) return Report::fail("horn:1:" + std::to_string(k) + " differs from delta:0");
  }
  for (int n = 0; n <= 2; ++n) {
    for (const auto& k : {standard_simplex(n, N), boundary(n, N)}) {
      if (auto r = validate_sset(k); !r) return Report::fail("sset fixture n=" + std::to_string(n) + ": " + r.where);
    }
  }
  for (int n = -1; n <= 2; ++n) {
    for (const auto& x : {constant(sphere(f, n), N), constant(disk(f, n), N)}) {
      if (auto r = validate_sobj(x); !r) return Report::fail("constant fixture n=" + std::to_string(n) + ": " + r.where);
    }
  }
  const Sm7Pair pair = reedy_sm7_pair(N, f);
  if (auto r = validate_smap(pair.f); !r) return Report::fail("reedy-sm7:f: " + r.where);
  if (!pair.i.injective()) return Report::fail("reedy-sm7:i is not injective");
  return Report::pass();
}

}  // namespace smc::io
