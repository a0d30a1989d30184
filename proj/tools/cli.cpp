#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <ostream>

#include "smc/error.hpp"
#include "smc/harness.hpp"
#include "smc/io.hpp"
#include "smc/limits.hpp"

namespace smc::cli {

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InvalidInput("range \"" + s + "\" is not of the form lo..hi");
  auto num = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw InvalidInput("range \"" + s + "\" has a bad bound");
    return v;
  };
  const std::string_view sv(s);
  const int lo = num(sv.substr(0, dots));
  const int hi = num(sv.substr(dots + 2));
  if (lo > hi) throw InvalidInput("range \"" + s + "\" is empty");
  return {lo, hi};
}

namespace {

using io::Json;

class Context {
 public:
  explicit Context(const Manifest& m) : m_(m), field_(m.p) {}

  const Manifest& manifest() const { return m_; }
  const Field& field() const { return field_; }
  int N() const { return m_.truncation; }

  io::Value load(const std::string& spec) const {
    io::Value v = spec.starts_with('@') ? io::fixture(spec.substr(1), N(), field_) : io::read_file(spec);
    if (auto p = io::prime_of(v); p && *p != m_.p) {
      throw ParseError("mixed primes: " + spec + " has p=" + std::to_string(*p) + " but the run uses p=" +
                       std::to_string(m_.p));
    }
    return v;
  }

  const std::string& input(std::size_t k, std::size_t expected, const char* cmd) const {
    if (m_.inputs.size() != expected) {
      throw InvalidInput(std::string(cmd) + " expects " + std::to_string(expected) + " input(s), got " +
                         std::to_string(m_.inputs.size()));
    }
    return m_.inputs[k];
  }

  Json header(const std::string& command) const {
    Json j;
    j["command"] = command;
    Json man;
    man["p"] = m_.p;
    man["N"] = m_.truncation;
    man["window"] = io::to_json(m_.window);
    man["cap"] = m_.cap;
    man["seed"] = m_.seed;
    man["samples"] = m_.samples;
    j["manifest"] = std::move(man);
    return j;
  }

 private:
  Manifest m_;
  Field field_;
};

[[noreturn]] void wrong_type(const char* cmd, const io::Value& v, const char* expected) {
  throw InvalidInput(std::string(cmd) + ": got " + io::type_name(v) + ", expected " + expected);
}

SimplicialMap as_smap(const io::Value& v, int N, const char* cmd) {
  if (auto f = std::get_if<SimplicialMap>(&v)) return *f;
  if (auto g = std::get_if<ChainMap>(&v)) return constant(*g, N);
  wrong_type(cmd, v, "smap or chain_map");
}

SimplicialObject as_sobj(const io::Value& v, int N, const char* cmd) {
  if (auto x = std::get_if<SimplicialObject>(&v)) return *x;
  if (auto a = std::get_if<ChainComplex>(&v)) return constant(*a, N);
  wrong_type(cmd, v, "sobj or complex");
}

Json mono_epi_json(const ChainMap& f) {
  const MonoEpi me = mono_epi(f);
  Json j;
  j["mono"] = me.mono;
  j["epi"] = me.epi;
  j["quasi_iso"] = is_quasi_iso(f);
  return j;
}

Json complex_summary(const ChainComplex& c) {
  Json j;
  Json dims = Json::object();
  for (int t = c.lo(); t <= c.hi(); ++t)
    if (c.dim(t) > 0) dims[std::to_string(t)] = c.dim(t);
  j["dims"] = std::move(dims);
  j["homology"] = io::homology_json(homology_dims(c));
  return j;
}

// ---- commands ---------------------------------------------------------------

int cmd_validate(const Context& ctx, Json& out) {
  int code = ok;
  Json rows = Json::array();
  if (ctx.manifest().inputs.empty()) throw InvalidInput("validate expects at least one input");
  for (const auto& spec : ctx.manifest().inputs) {
    const io::Value v = ctx.load(spec);
    const Report r = std::visit(
        [](const auto& x) -> Report {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ChainComplex>) return validate_complex(x);
          else if constexpr (std::is_same_v<T, ChainMap>) return validate_map(x);
          else if constexpr (std::is_same_v<T, SimplicialObject>) return validate_sobj(x);
          else if constexpr (std::is_same_v<T, SimplicialMap>) return validate_smap(x);
          else if constexpr (std::is_same_v<T, FinSimplicialSet>) return validate_sset(x);
          else return validate_sset_map(x);
        },
        v);
    Json row;
    row["input"] = spec;
    row["type"] = io::type_name(v);
    row["valid"] = r.ok;
    if (!r.ok) {
      row["where"] = r.where;
      code = violation;
    }
    rows.push_back(std::move(row));
  }
  out["results"] = std::move(rows);
  return code;
}

int cmd_homology(const Context& ctx, Json& out) {
  const io::Value v = ctx.load(ctx.input(0, 1, "homology"));
  if (auto c = std::get_if<ChainComplex>(&v)) {
    out["homology"] = io::homology_json(homology_dims(*c));
    out["euler"] = euler_characteristic(*c);
  } else if (auto f = std::get_if<ChainMap>(&v)) {
    require_valid(*f, "homology");
    out["source"] = io::homology_json(homology_dims(f->source()));
    out["target"] = io::homology_json(homology_dims(f->target()));
    out["quasi_iso"] = is_quasi_iso(*f);
  } else if (auto x = std::get_if<SimplicialObject>(&v)) {
    require_valid(*x, "homology");
    Json levels = Json::array();
    for (int n = 0; n <= x->truncation(); ++n) levels.push_back(io::homology_json(homology_dims(x->level(n))));
    out["levels"] = std::move(levels);
    out["homotopically_constant"] = is_homotopically_constant(*x).ok;
  } else {
    wrong_type("homology", v, "complex, chain_map or sobj");
  }
  return ok;
}

int cmd_classify(const Context& ctx, Json& out) {
  const SimplicialMap f = as_smap(ctx.load(ctx.input(0, 1, "classify")), ctx.N(), "classify");
  require_valid(f, "classify");
  out["truncation"] = f.truncation();
  out["classification"] = io::to_json(classify(f));
  return ok;
}

int cmd_total(const Context& ctx, Json& out) {
  const TotalMode mode = ctx.manifest().normalized ? TotalMode::normalized : TotalMode::full;
  const io::Value v = ctx.load(ctx.input(0, 1, "total-complex"));
  out["mode"] = to_string(mode);
  if (std::holds_alternative<SimplicialMap>(v) || std::holds_alternative<ChainMap>(v)) {
    const SimplicialMap f = as_smap(v, ctx.N(), "total-complex");
    const ChainMap t = total_map(f, mode);
    const RealizationVerdict rv = realization_we(f);
    out["flag"] = to_string(rv.flag);
    out["map"] = mono_epi_json(t);
    out["result"] = io::to_json(t);
    return ok;
  }
  const TotalComplexReport r = total_complex(as_sobj(v, ctx.N(), "total-complex"), mode);
  out["flag"] = to_string(r.flag);
  out["summary"] = complex_summary(r.complex);
  out["result"] = io::to_json(r.complex);
  return ok;
}

int cmd_latching(const Context& ctx, Json& out, int n, bool matching_side) {
  const char* cmd = matching_side ? "matching" : "latching";
  const io::Value v = ctx.load(ctx.input(0, 1, cmd));
  auto check_level = [&](int top) {
    if (n < 0 || n > top) throw InvalidInput(std::string(cmd) + ": n out of range 0.." + std::to_string(top));
  };
  out["n"] = n;
  if (std::holds_alternative<SimplicialMap>(v) || std::holds_alternative<ChainMap>(v)) {
    const SimplicialMap f = as_smap(v, ctx.N(), cmd);
    check_level(f.truncation());
    require_valid(f, cmd);
    const ChainMap m = matching_side ? relative_matching_map(f, n) : relative_latching_map(f, n);
    out["relative_map"] = mono_epi_json(m);
    out["result"] = io::to_json(m);
    return ok;
  }
  const SimplicialObject x = as_sobj(v, ctx.N(), cmd);
  check_level(x.truncation());
  require_valid(x, cmd);
  const ChainComplex obj = matching_side ? matching(x, n).object : latching(x, n).object;
  out["summary"] = complex_summary(obj);
  out["result"] = io::to_json(obj);
  return ok;
}

int cmd_tensor(const Context& ctx, Json& out, bool box) {
  if (ctx.manifest().inputs.size() != 2) throw InvalidInput("tensor expects two inputs");
  const io::Value a = ctx.load(ctx.manifest().inputs[0]);
  const io::Value k = ctx.load(ctx.manifest().inputs[1]);
  const bool map_left = std::holds_alternative<SimplicialMap>(a) || std::holds_alternative<ChainMap>(a);
  if (box) {
    const auto* i = std::get_if<SSetMap>(&k);
    if (!i) wrong_type("tensor --box", k, "sset_map");
    const PushoutProduct pp = pushout_product_data(as_smap(a, ctx.N(), "tensor"), *i);
    out["result"] = io::to_json(pp.map);
    return ok;
  }
  if (auto kk = std::get_if<FinSimplicialSet>(&k)) {
    out["result"] = map_left ? io::to_json(tensor(as_smap(a, ctx.N(), "tensor"), *kk))
                             : io::to_json(tensor(as_sobj(a, ctx.N(), "tensor"), *kk));
  } else if (auto g = std::get_if<SSetMap>(&k)) {
    out["result"] = map_left ? io::to_json(tensor(as_smap(a, ctx.N(), "tensor"), *g))
                             : io::to_json(tensor(as_sobj(a, ctx.N(), "tensor"), *g));
  } else {
    wrong_type("tensor", k, "sset or sset_map");
  }
  return ok;
}

int cmd_cotensor(const Context& ctx, Json& out) {
  if (ctx.manifest().inputs.size() != 2) throw InvalidInput("cotensor expects two inputs");
  const io::Value a = ctx.load(ctx.manifest().inputs[0]);
  const io::Value k = ctx.load(ctx.manifest().inputs[1]);
  if (auto g = std::get_if<SSetMap>(&k)) {
    const ChainMap m = cotensor_map(as_smap(a, ctx.N(), "cotensor"), *g);
    out["map"] = mono_epi_json(m);
    out["result"] = io::to_json(m);
  } else if (auto kk = std::get_if<FinSimplicialSet>(&k)) {
    const Cotensor c = cotensor0(as_sobj(a, ctx.N(), "cotensor"), *kk);
    out["summary"] = complex_summary(c.object);
    out["result"] = io::to_json(c.object);
  } else {
    wrong_type("cotensor", k, "sset or sset_map");
  }
  return ok;
}

int cmd_realize(const Context& ctx, Json& out) {
  const SimplicialObject y = as_sobj(ctx.load(ctx.input(0, 1, "realize")), ctx.N(), "realize");
  require_valid(y, "realize");
  const ChainComplex r = realize(y);
  out["flag"] = to_string(exactness(y));
  out["summary"] = complex_summary(r);
  out["normalized_total_homology"] = io::homology_json(homology_dims(total_complex(y, TotalMode::normalized).complex));
  out["result"] = io::to_json(r);
  return ok;
}

int cmd_sing(const Context& ctx, Json& out) {
  const io::Value v = ctx.load(ctx.input(0, 1, "sing"));
  if (auto a = std::get_if<ChainComplex>(&v)) {
    const SimplicialObject s = sing(*a, ctx.N());
    out["homotopically_constant"] = is_homotopically_constant(s).ok;
    out["result"] = io::to_json(s);
  } else if (auto g = std::get_if<ChainMap>(&v)) {
    out["result"] = io::to_json(sing(*g, ctx.N()));
  } else {
    wrong_type("sing", v, "complex or chain_map");
  }
  return ok;
}

int cmd_rlp(const Context& ctx, Json& out) {
  const auto& in = ctx.manifest().inputs;
  if (in.size() != 2 && in.size() != 4) throw InvalidInput("rlp expects i p, or i p top bottom");
  std::vector<SimplicialMap> maps;
  for (const auto& s : in) maps.push_back(as_smap(ctx.load(s), ctx.N(), "rlp"));
  if (in.size() == 2) {
    out["lifts_against"] = lifts_against(maps[0], maps[1]);
    return ok;
  }
  const LiftResult r = rlp({maps[0], maps[1], maps[2], maps[3]});
  out["exists"] = r.exists;
  out["witness"] = r.witness ? io::to_json(*r.witness) : Json(nullptr);
  return ok;
}

int cmd_generators(const Context& ctx, Json& out, const std::string& family) {
  const GeneratorFamily g = generators(parse_family(family), ctx.manifest().window, ctx.N(), ctx.field());
  out["family"] = to_string(g.family);
  out["window"] = io::to_json(g.window);
  out["count"] = g.members.size();
  Json members = Json::array();
  for (const auto& m : g.members) {
    Json row;
    row["label"] = m.label();
    row["m"] = m.m;
    row["n"] = m.n;
    if (m.face >= 0) row["face"] = m.face;
    members.push_back(std::move(row));
  }
  out["members"] = std::move(members);
  return ok;
}

int cmd_check(const Context& ctx, Json& out, const std::string& property) {
  const Manifest& m = ctx.manifest();
  HarnessOptions o;
  o.params.truncation = m.truncation;
  o.params.field = ctx.field();
  o.samples = m.samples;
  o.seed = m.seed;
  o.window = m.window;
  o.max_n = std::min(m.window.n_hi, m.truncation);
  CheckReport r;
  if (property == "sm7") r = check_sm7_sampled(o, Structure::reedy);
  else if (property == "realization-axiom") r = check_realization_axiom(o);
  else if (property == "lem-match") r = check_lem_match_sampled(o);
  else if (property == "prop-proof") r = check_prop_proof(o);
  else if (property == "prop-i-cof") r = check_prop_i_cof(o);
  else if (property == "j-necessity") r = check_j_necessity(o);
  else throw InvalidInput("unknown property " + property);
  out["report"] = io::to_json(r);
  return r.ok() ? ok : violation;
}

int cmd_counterexample(const Context& ctx, Json& out, const std::string& name) {
  if (name != "reedy-sm7") throw InvalidInput("unknown counterexample " + name);
  const io::Sm7Pair pair = io::reedy_sm7_pair(ctx.N(), ctx.field());
  const PushoutProduct pp = pushout_product_data(pair.f, pair.i);
  const Classification c = classify(pp.map);
  out["level_we"] = c.level_we;
  out["realization_we"] = c.realization_we;
  out["flag"] = to_string(c.realization_flag);
  out["classification"] = io::to_json(c);
  out["sm7_reedy"] = io::to_json(check_sm7(pair.f, pair.i, Structure::reedy));
  out["sm7_realization"] = io::to_json(check_sm7(pair.f, pair.i, Structure::realization));
  Json inst;
  inst["f"] = io::to_json(pair.f);
  inst["i"] = io::to_json(pair.i);
  inst["box"] = io::to_json(pp.map);
  out["instance"] = std::move(inst);
  const bool expected = !c.level_we && c.realization_we && c.realization_flag == Exactness::exact;
  return expected ? ok : violation;
}

// ---- text rendering -----------------------------------------------------------

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& e : j)
    if (!flat(e)) return false;
  return true;
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (flat(v) || v.empty()) {
        out << pad << k << ": " << scalar(v) << "\n";
      } else {
        out << pad << k << ":\n";
        render(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (flat(e) || e.empty()) {
        out << pad << "- " << scalar(e) << "\n";
      } else {
        out << pad << "-\n";
        render(e, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

/// Text mode leaves out serialized objects; --json keeps them.
Json for_text(Json j) {
  if (j.is_object()) {
    for (const char* key : {"result", "witness"})
      if (j.contains(key) && j[key].is_object() && j[key].contains("type")) j[key] = "(use --json)";
    if (j.contains("instance")) j["instance"] = "(use --json)";
    for (auto& [k, v] : j.items()) v = for_text(v);
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Manifest m;
  std::string window = "-1..3", simplices = "0..2";
  CLI::App app{"Reedy and realization model structures on simplicial chain complexes over F_p"};
  app.set_version_flag("--version", "smc 0.1.0");
  app.require_subcommand(1);
  app.add_option("--p", m.p, "Prime modulus")->envname("SMC_P");
  app.add_option("--trunc", m.truncation, "Truncation level N")->envname("SMC_TRUNC");
  app.add_option("--window", window, "Chain degrees for generators, lo..hi")->envname("SMC_WINDOW");
  app.add_option("--simplices", simplices, "Simplex parameters for generators, lo..hi")->envname("SMC_SIMPLICES");
  app.add_option("--cap", m.cap, "Max entries per matrix block")->envname("SMC_CAP");
  app.add_option("--seed", m.seed, "Sampler seed")->envname("SMC_SEED");
  app.add_option("--samples", m.samples, "Samples per check")->envname("SMC_SAMPLES");
  app.add_option("-o,--output", m.output, "Write the produced object (\"result\") to this file");
  app.add_flag("--normalized", m.normalized, "Normalized total complex")->envname("SMC_NORMALIZED");
  auto* json_flag = app.add_flag("--json", m.json, "Compact JSON report");
  app.add_flag("--pretty", m.pretty, "Indented JSON report")->excludes(json_flag);

  auto inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", m.inputs, "Input files, or @fixture names");
    sub->fallthrough();
  };
  int level = 0;
  std::string word;
  bool box = false;
  auto* validate = app.add_subcommand("validate", "Structural checks");
  auto* homology = app.add_subcommand("homology", "Homology dimensions");
  auto* classify_cmd = app.add_subcommand("classify", "Model-structure predicates of a map");
  auto* total = app.add_subcommand("total-complex", "Total complex of a simplicial object or map");
  auto* latch = app.add_subcommand("latching", "Latching object or relative latching map at level n");
  auto* match = app.add_subcommand("matching", "Matching object or relative matching map at level n");
  auto* tens = app.add_subcommand("tensor", "X ⊗ K, f ⊗ g, or the pushout product with --box");
  auto* cot = app.add_subcommand("cotensor", "X^K, or f^{□ i} for a map and an injection");
  auto* real = app.add_subcommand("realize", "Realization of a simplicial object");
  auto* sng = app.add_subcommand("sing", "Sing of a complex or chain map");
  auto* rlp_cmd = app.add_subcommand("rlp", "Lifting problems");
  auto* gens = app.add_subcommand("generators", "List I, J' or J'' in the window");
  auto* check = app.add_subcommand("check", "Sampled property run");
  auto* counter = app.add_subcommand("counterexample", "Canonical counterexamples");
  for (auto* sub : {latch, match}) sub->add_option("n", level, "Level")->required();
  tens->add_flag("--box", box, "Pushout product with an injection");
  gens->add_option("family", word, "I, J' or J''")->required();
  check->add_option("property", word, "sm7 | realization-axiom | lem-match | prop-proof | prop-i-cof | j-necessity")
      ->required();
  counter->add_option("name", word, "reedy-sm7")->required();
  for (auto* sub : {validate, homology, classify_cmd, total, latch, match, tens, cot, real, sng, rlp_cmd})
    inputs(sub);
  for (auto* sub : {gens, check, counter}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : parse_error;
  }

  try {
    const auto [dlo, dhi] = parse_range(window);
    const auto [nlo, nhi] = parse_range(simplices);
    m.window = Window{dlo, dhi, nlo, nhi};
    if (m.truncation < 1) throw InvalidInput("--trunc must be at least 1");
    if (m.cap == 0 || m.samples == 0) throw InvalidInput("--cap and --samples must be positive");
    if (nlo < 0) throw InvalidInput("--simplices must be non-negative");
    const Context ctx(m);  // validates p

    Limits lim = limits();
    lim.block_entries = m.cap;
    const ScopedLimits scoped(lim);

    auto* sub = app.get_subcommands().front();
    Json report = ctx.header(sub->get_name());
    int code = ok;
    if (sub == validate) code = cmd_validate(ctx, report);
    else if (sub == homology) code = cmd_homology(ctx, report);
    else if (sub == classify_cmd) code = cmd_classify(ctx, report);
    else if (sub == total) code = cmd_total(ctx, report);
    else if (sub == latch) code = cmd_latching(ctx, report, level, false);
    else if (sub == match) code = cmd_latching(ctx, report, level, true);
    else if (sub == tens) code = cmd_tensor(ctx, report, box);
    else if (sub == cot) code = cmd_cotensor(ctx, report);
    else if (sub == real) code = cmd_realize(ctx, report);
    else if (sub == sng) code = cmd_sing(ctx, report);
    else if (sub == rlp_cmd) code = cmd_rlp(ctx, report);
    else if (sub == gens) code = cmd_generators(ctx, report, word);
    else if (sub == check) code = cmd_check(ctx, report, word);
    else code = cmd_counterexample(ctx, report, word);
    report["exit"] = code;

    if (!m.output.empty()) {
      if (!report.contains("result") || !report["result"].is_object())
        throw InvalidInput(sub->get_name() + " produces no object for --output");
      std::ofstream file(m.output);
      if (!file) throw InvalidInput("cannot write " + m.output);
      file << io::dump(report["result"], true) << "\n";
    }

    if (m.json || m.pretty) out << io::dump(report, m.pretty) << "\n";
    else render(for_text(report), out, 0);
    return code;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << "\n";
    return resource_cap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return violation;
  }
}

}  // namespace smc::cli
