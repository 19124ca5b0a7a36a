#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "report.hpp"
#include "sccay/cayley.hpp"
#include "sccay/error.hpp"
#include "sccay/finite_field.hpp"
#include "sccay/graph_io.hpp"
#include "sccay/number_theory.hpp"
#include "suite.hpp"

namespace {

using sccay::report::Json;

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

Json header(const std::string& command) {
  return Json{{"tool", "sccay"}, {"version", SCCAY_VERSION}, {"command", command}};
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string family;
  int q = 0;
  int p = 0;
  std::string generator;
  std::string outer;
  std::string inner;
  std::string out;
};

sccay::ConstructionReport build_family(const std::string& family, int q, int p, const std::string& generator) {
  if (family == "paley") {
    if (q <= 0) throw sccay::ParameterError("paley requires --q");
    return sccay::paley(q);
  }
  if (family == "peisert") {
    if (q <= 0) throw sccay::ParameterError("peisert requires --q");
    std::optional<sccay::FieldElement> gen;
    if (!generator.empty()) {
      const auto [prime, degree] = sccay::prime_power(q);
      if (prime == 0) throw sccay::ParameterError("q = " + std::to_string(q) + " is not a prime power");
      gen = sccay::parse_field_element(sccay::FiniteField::make(static_cast<int>(prime), degree), generator);
    }
    return sccay::peisert(q, gen);
  }
  if (family == "davis") {
    if (p <= 0) throw sccay::ParameterError("davis requires --p");
    return sccay::davis(p);
  }
  throw sccay::ParameterError("unknown family '" + family + "'");
}

// "paley:5", "peisert:9", "davis:3".
sccay::ConstructionReport build_factor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw sccay::ParseError("expected family:parameter, got '" + text + "'");
  const std::string family = text.substr(0, colon);
  int value = 0;
  try {
    value = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw sccay::ParseError("bad parameter in '" + text + "'");
  }
  return family == "davis" ? build_family(family, 0, value, "") : build_family(family, value, 0, "");
}

std::string default_prefix(const ConstructArgs& a) {
  if (a.family == "davis") return "davis" + std::to_string(a.p);
  if (a.family == "lexprod") {
    std::string s = "lexprod_" + a.outer + "_" + a.inner;
    for (char& c : s)
      if (c == ':') c = '-';
    return s;
  }
  return a.family + std::to_string(a.q);
}

int cmd_construct(const ConstructArgs& a) {
  sccay::ConstructionReport rep = [&] {
    if (a.family == "lexprod") {
      if (a.outer.empty() || a.inner.empty()) throw sccay::ParameterError("lexprod requires --outer and --inner");
      return sccay::lexprod(build_factor(a.outer), build_factor(a.inner));
    }
    return build_family(a.family, a.q, a.p, a.generator);
  }();
  const std::string prefix = a.out.empty() ? default_prefix(a) : a.out;
  const sccay::DenseGraph g = sccay::build_cayley(rep.connection_set);
  sccay::write_text_file(prefix + ".set", sccay::format_connection_set(rep.connection_set));
  sccay::write_text_file(prefix + ".g6", sccay::to_graph6(g) + "\n");

  Json doc = header("construct");
  doc["construction"] = sccay::report::to_json(rep);
  doc["graph"] = Json{{"vertices", g.size()}, {"edges", g.edge_count()}, {"graph6", sccay::to_graph6(g)}};
  doc["files"] = Json{{"set", prefix + ".set"}, {"graph6", prefix + ".g6"}, {"report", prefix + ".json"}};
  sccay::write_text_file(prefix + ".json", doc.dump(2) + "\n");
  emit(doc);
  return kExitPass;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string input;
  std::string format;
  std::string group;
  bool srg = false;
  bool dr = false;
  bool pds = false;
  bool schur = false;
  bool selfcomp = false;
  bool invariants = false;
  std::optional<int> lambda;
  std::optional<int> mu;
  std::uint64_t max_nodes = 100'000'000;
  double time_limit = 0.0;
  bool timings = false;
};

std::string detect_format(const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "g6") return "graph6";
  if (ext == "set") return "set";
  if (ext == "edges" || ext == "txt") return "edges";
  throw sccay::ParseError("cannot infer the format of '" + path + "'; pass --format");
}

// Reads the connection set off vertex 0 (the identity) and checks that it
// regenerates the graph under the group's index labelling.
sccay::ConnectionSet connection_set_of(const sccay::DenseGraph& g, const sccay::AbelianGroup& group) {
  if (group.order() != g.size()) {
    throw sccay::StructuralError("group " + group.name() + " has order " + std::to_string(group.order()) +
                                 " but the graph has " + std::to_string(g.size()) + " vertices");
  }
  std::vector<int> idx = g.neighbors(0);
  sccay::ConnectionSet s = sccay::connection_set_from_indices(group, std::move(idx));
  if (!(sccay::build_cayley(s) == g)) {
    throw sccay::StructuralError("graph is not a Cayley graph of " + group.name() + " under index labelling");
  }
  return s;
}

int cmd_verify(VerifyArgs a) {
  const std::string format = a.format.empty() ? detect_format(a.input) : a.format;
  const std::string text = sccay::read_text_file(a.input);
  std::optional<sccay::ConnectionSet> set;
  std::optional<sccay::DenseGraph> graph;
  if (format == "set") {
    set = sccay::parse_connection_set(text);
    graph = sccay::build_cayley(*set);
  } else if (format == "graph6") {
    graph = sccay::from_graph6(text);
  } else if (format == "edges") {
    graph = sccay::from_edge_list(text);
  } else {
    throw sccay::ParseError("unknown format '" + format + "'");
  }
  if (!a.group.empty()) {
    const auto group = sccay::AbelianGroup::parse(a.group);
    if (set && !(set->group() == group)) throw sccay::StructuralError("--group disagrees with the set file");
    if (!set) set = connection_set_of(*graph, group);
  }
  if (!(a.srg || a.dr || a.pds || a.schur || a.selfcomp || a.invariants)) {
    a.srg = a.dr = a.invariants = true;
    if (set) a.pds = a.schur = true;
  }
  if ((a.pds || a.schur) && !set) {
    throw sccay::ParameterError("--pds and --schur need a connection set (a .set file or --group)");
  }
  if (a.lambda.has_value() != a.mu.has_value()) throw sccay::ParameterError("--lambda and --mu go together");

  const sccay::DenseGraph& g = *graph;
  Json doc = header("verify");
  doc["input"] = Json{{"path", a.input}, {"format", format}, {"vertices", g.size()}, {"edges", g.edge_count()}};
  if (set) doc["input"]["group"] = set->group().name();
  Json checks = Json::object();
  Json timings = Json::object();
  bool all = true;
  auto timed = [&](const char* name, auto&& f) {
    const auto start = std::chrono::steady_clock::now();
    Json j = f();
    timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && j.value("passed", true);
    checks[name] = std::move(j);
  };

  std::optional<sccay::SrgCheck> srg;
  auto srg_once = [&]() -> const sccay::SrgCheck& {
    if (!srg) srg = sccay::check_srg(g);
    return *srg;
  };
  if (a.srg) timed("srg", [&] { return sccay::report::to_json(srg_once()); });
  if (a.dr) {
    timed("dr", [&] {
      if (!sccay::is_connected(g)) return Json{{"passed", false}, {"reason", "disconnected"}};
      return sccay::report::to_json(sccay::intersection_array(g));
    });
  }
  if (a.invariants) timed("invariants", [&] { return sccay::report::to_json(sccay::invariant_counts(g)); });
  if (a.pds) {
    timed("pds", [&] {
      int lambda = 0;
      int mu = 0;
      if (a.lambda) {
        lambda = *a.lambda;
        mu = *a.mu;
      } else if (srg_once().ok()) {
        lambda = srg_once().params->lambda;
        mu = srg_once().params->mu;
      } else {
        return Json{{"passed", false}, {"detail", "graph is not strongly regular; pass --lambda and --mu"}};
      }
      Json j = sccay::report::to_json(sccay::verify_pds(set->group(), set->elements(), lambda, mu), set->group());
      j["lambda"] = lambda;
      j["mu"] = mu;
      return j;
    });
  }
  if (a.schur) {
    timed("schur", [&] { return sccay::report::to_json(sccay::verify_schur_partition(*set), set->group()); });
  }
  if (a.selfcomp) {
    timed("selfcomp", [&] {
      sccay::IsoOptions opts;
      opts.node_budget = a.max_nodes;
      opts.time_budget_seconds = a.time_limit;
      const auto r = sccay::is_self_complementary(g, set, opts);
      return sccay::report::to_json(r, set ? &set->group() : nullptr, a.timings);
    });
  }
  doc["checks"] = checks;
  doc["passed"] = all;
  if (a.timings) doc["timings"] = timings;
  emit(doc);
  return all ? kExitPass : kExitRefuted;
}

// ---------------------------------------------------------------- reproduce

struct ReproduceArgs {
  bool extended = false;
  bool list = false;
  int threads = 1;
  std::uint64_t seed = sccay::suite::SuiteOptions{}.seed;
  bool timings = false;
};

int cmd_reproduce(const ReproduceArgs& a) {
  const auto tier = a.extended ? sccay::suite::Tier::kExtended : sccay::suite::Tier::kStandard;
  Json doc = header("reproduce");
  doc["tier"] = sccay::suite::to_string(tier);
  doc["seed"] = a.seed;
  doc["threads"] = a.threads;
  if (a.list) {
    Json rows = Json::array();
    for (const auto& c : sccay::suite::criteria(tier)) {
      std::fprintf(stderr, "%d  %-26s limit %5.0f s  %s\n", c.id, c.name.c_str(), c.time_limit_seconds,
                   c.summary.c_str());
      rows.push_back(Json{{"id", c.id}, {"name", c.name}, {"time_limit_seconds", c.time_limit_seconds},
                          {"summary", c.summary}});
    }
    doc["criteria"] = rows;
    emit(doc);
    return kExitPass;
  }
  sccay::suite::SuiteOptions opts;
  opts.tier = tier;
  opts.seed = a.seed;
  Json rows = Json::array();
  bool all = true;
  for (const auto& info : sccay::suite::criteria(tier)) {
    const auto r = sccay::suite::run_criterion(info.id, opts);
    std::fprintf(stderr, "%s\n", sccay::suite::format_line(r).c_str());
    for (const auto& line : r.checks) std::fprintf(stderr, "    %s\n", line.c_str());
    all = all && r.passed;
    rows.push_back(sccay::report::to_json(r, a.timings));
  }
  doc["criteria"] = rows;
  doc["passed"] = all;
  emit(doc);
  return all ? kExitPass : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-complementary Cayley graph toolkit: construct, verify, reproduce"};
  app.set_version_flag("--version", std::string("sccay ") + SCCAY_VERSION);
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a connection set and write .set, .g6 and .json files");
  construct->add_option("family", ca.family, "paley | peisert | davis | lexprod")
      ->required()
      ->check(CLI::IsMember({"paley", "peisert", "davis", "lexprod"}));
  construct->add_option("--q", ca.q, "Field order (paley, peisert)");
  construct->add_option("--p", ca.p, "Odd prime (davis)");
  construct->add_option("--generator", ca.generator, "Peisert primitive element as c0,c1,...");
  construct->add_option("--outer", ca.outer, "Outer factor for lexprod, e.g. paley:5");
  construct->add_option("--inner", ca.inner, "Inner factor for lexprod, e.g. paley:5");
  construct->add_option("--out", ca.out, "Output path prefix");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run checks on a graph or connection set; JSON report on stdout");
  verify->add_option("input", va.input, "Input file (.g6, .edges, .set)")->required();
  verify->add_option("--format", va.format, "graph6 | edges | set")->check(CLI::IsMember({"graph6", "edges", "set"}));
  verify->add_option("--group", va.group, "Treat the graph as a Cayley graph of this group, e.g. Z9xZ9");
  verify->add_flag("--srg", va.srg, "Strong regularity");
  verify->add_flag("--dr", va.dr, "Distance regularity");
  verify->add_flag("--pds", va.pds, "Partial difference set identity");
  verify->add_flag("--schur", va.schur, "Schur partition closure");
  verify->add_flag("--selfcomp", va.selfcomp, "Self-complementarity decision");
  verify->add_flag("--invariants", va.invariants, "Triangle, 4-clique and degree counts");
  verify->add_option("--lambda", va.lambda, "PDS lambda (default: from check_srg)");
  verify->add_option("--mu", va.mu, "PDS mu (default: from check_srg)");
  verify->add_option("--max-nodes", va.max_nodes, "Isomorphism search node budget");
  verify->add_option("--time-limit", va.time_limit, "Isomorphism search wall-clock budget in seconds (0 = none)");
  verify->add_flag("--timings", va.timings, "Include timings (output is then not byte-reproducible)");

  ReproduceArgs ra;
  auto* reproduce = app.add_subcommand("reproduce", "Run the acceptance suite; table on stderr, JSON on stdout");
  reproduce->add_flag("--extended", ra.extended, "Include the davis(5) self-complementarity decision");
  reproduce->add_flag("--list", ra.list, "Print the criteria matrix without running");
  reproduce->add_option("--threads", ra.threads, "Worker threads (the library runs single-threaded)")
      ->check(CLI::PositiveNumber);
  reproduce->add_option("--seed", ra.seed, "Seed for the property suites");
  reproduce->add_flag("--timings", ra.timings, "Include per-criterion timings in the JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(ca);
    if (*verify) return cmd_verify(va);
    return cmd_reproduce(ra);
  } catch (const sccay::Error& e) {
    std::cerr << "sccay: " << e.what() << '\n';
    return kExitUsage;
  }
}
