#include "suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "oracles.hpp"
#include "sccay/cayley.hpp"
#include "sccay/constructions.hpp"
#include "sccay/graph_checks.hpp"
#include "sccay/group_algebra.hpp"
#include "sccay/iso.hpp"

namespace sccay::suite {

namespace {

// Pinned wall-clock limits, in seconds.
constexpr double kPaleyLimit = 10.0;
constexpr double kPeisertLimit = 30.0;
constexpr double kDavis3Limit = 60.0;
constexpr double kDavis5StandardLimit = 300.0;
constexpr double kDavis5ExtendedLimit = 3600.0;
constexpr double kIdentitiesLimit = 120.0;
constexpr double kLexProductLimit = 10.0;
constexpr double kPropertiesLimit = 300.0;
constexpr double kFeasibilityLimit = 5.0;

constexpr int kFeasibilityBound = 10000;
constexpr int kRandomSetsPerGroup = 100;
constexpr int kRelabelings = 100;
constexpr int kOracleMaxVertices = 12;

class Recorder {
 public:
  explicit Recorder(CriterionResult& out) : out_(out) {}

  bool check(bool ok, const std::string& what) {
    out_.checks.push_back((ok ? "ok   " : "FAIL ") + what);
    if (!ok) failed_ = true;
    return ok;
  }
  bool failed() const noexcept { return failed_; }

 private:
  CriterionResult& out_;
  bool failed_ = false;
};

std::string params_text(const SrgCheck& c) {
  return c.ok() ? to_string(*c.params) : "not strongly regular (" + to_string(c.failure) + ")";
}

SrgParams conference(int t) { return SrgParams{4 * t + 1, 2 * t, t - 1, t}; }

bool certificate_valid(const DenseGraph& g, const IsoResult& r) {
  return r.isomorphic() && verify_certificate(g, complement(g), r.certificate.permutation);
}

std::string selfcomp_text(const IsoResult& r) {
  std::string s = to_string(r.outcome) + " via " + r.decided_by + " (" + to_string(r.certificate.kind) + ")";
  if (r.certificate.kind == IsoCertificate::Kind::kInvariantRefutation) s += " on " + r.certificate.invariant;
  return s;
}

void conference_family(Recorder& rec, const std::string& label, const ConstructionReport& rep) {
  const int n = rep.group().order();
  const int t = (n - 1) / 4;
  const DenseGraph g = build_cayley(rep.connection_set);
  const SrgCheck srg = check_srg(g);
  rec.check(srg.ok() && *srg.params == conference(t) && 4 * t + 1 == n,
            label + ": check_srg = " + params_text(srg) + ", expected " + to_string(conference(t)));
  const auto d = diameter(g);
  rec.check(d == 2, label + ": diameter = " + (d ? std::to_string(*d) : std::string("disconnected")));
  const IsoResult sc = is_self_complementary(g, rep.connection_set);
  rec.check(certificate_valid(g, sc), label + ": self-complementary, " + selfcomp_text(sc) + ", certificate verified");
}

void criterion_paley(Recorder& rec, const SuiteOptions&) {
  for (int q : {5, 9, 13, 25}) conference_family(rec, "paley(" + std::to_string(q) + ")", paley(q));
}

void criterion_peisert(Recorder& rec, const SuiteOptions&) {
  const std::map<int, SrgParams> expected = {{9, {9, 4, 1, 2}}, {49, {49, 24, 11, 12}}};
  for (const auto& [q, params] : expected) {
    const auto rep = peisert(q);
    const DenseGraph g = build_cayley(rep.connection_set);
    const SrgCheck srg = check_srg(g);
    const std::string label = "peisert(" + std::to_string(q) + ")";
    rec.check(srg.ok() && *srg.params == params, label + ": check_srg = " + params_text(srg));
    const IsoResult sc = is_self_complementary(g, rep.connection_set);
    rec.check(certificate_valid(g, sc), label + ": self-complementary, " + selfcomp_text(sc) + ", certificate verified");
  }
}

void criterion_davis3(Recorder& rec, const SuiteOptions&) {
  const auto rep = davis(3);
  const ConnectionSet& s = rep.connection_set;
  const auto elements = s.elements();
  rec.check(s.size() == 40 && rep.group().factors() == std::vector<int>{9, 9},
            "davis(3): |S| = " + std::to_string(s.size()) + " over " + rep.group().name());
  auto identity_line = [&](const std::string& name, const IdentityCheck& c) {
    rec.check(c.holds, "davis(3): " + name + (c.holds ? "" : " (" + c.detail + ")"));
  };
  identity_line("verify_pds(19, 20)", verify_pds(rep.group(), elements, 19, 20));
  identity_line("verify_srg_equation(81,40,19,20)", verify_srg_equation(s, conference(20)));
  identity_line("verify_mixed_product(t = 20)", verify_mixed_product(s, 20));
  const SchurCheck schur = verify_schur_partition(s);
  rec.check(schur.closed, "davis(3): verify_schur_partition" + (schur.closed ? std::string() : " (" + schur.detail + ")"));
  const DenseGraph g = build_cayley(s);
  const SrgCheck srg = check_srg(g);
  rec.check(srg.ok() && *srg.params == conference(20), "davis(3): check_srg = " + params_text(srg));
  const IsoResult sc = is_self_complementary(g, s);
  rec.check(certificate_valid(g, sc), "davis(3): self-complementary, " + selfcomp_text(sc) + ", certificate verified");
}

void criterion_davis5(Recorder& rec, const SuiteOptions& options) {
  const auto rep = davis(5);
  const ConnectionSet& s = rep.connection_set;
  rec.check(s.size() == 312 && rep.group().factors() == std::vector<int>{25, 25},
            "davis(5): |S| = " + std::to_string(s.size()) + " over " + rep.group().name());
  const IdentityCheck pds = verify_pds(rep.group(), s.elements(), 155, 156);
  rec.check(pds.holds, "davis(5): verify_pds(155, 156)" + (pds.holds ? std::string() : " (" + pds.detail + ")"));
  const AutomorphismScan scan = selfcomp_by_group_automorphism(s);
  rec.check(!scan.certificate && scan.automorphisms_scanned == 300000,
            "davis(5): automorphism scan, " + std::to_string(scan.automorphisms_scanned) +
                " automorphisms, certificate " + (scan.certificate ? "found" : "none (inconclusive)"));
  if (options.tier == Tier::kExtended) {
    const DenseGraph g = build_cayley(s);
    const IsoResult sc = is_self_complementary(g);
    rec.check(sc.outcome == IsoOutcome::kNotIsomorphic, "davis(5): " + selfcomp_text(sc));
  }
}

std::vector<std::pair<std::string, ConstructionReport>> conference_instances(bool with_davis5) {
  std::vector<std::pair<std::string, ConstructionReport>> out;
  for (int q : {5, 9, 13, 25}) out.emplace_back("paley(" + std::to_string(q) + ")", paley(q));
  for (int q : {9, 49}) out.emplace_back("peisert(" + std::to_string(q) + ")", peisert(q));
  out.emplace_back("davis(3)", davis(3));
  if (with_davis5) out.emplace_back("davis(5)", davis(5));
  return out;
}

void criterion_identities(Recorder& rec, const SuiteOptions&) {
  for (const auto& [label, rep] : conference_instances(true)) {
    const ConnectionSet& s = rep.connection_set;
    const AbelianGroup& group = rep.group();
    const int t = (group.order() - 1) / 4;
    const IdentityCheck srg_eq = verify_srg_equation(s, conference(t));
    const IdentityCheck mixed = verify_mixed_product(s, t);
    const ConnectionSet ncs = complement_connection_set(s);
    const auto nbar = ga_from_indices(group, ncs.indices());
    const auto lhs = ga_mul(nbar, nbar);
    const auto rhs = ga_add(ga_sub(ga_scale(t, ga_total(group)), nbar), ga_scale(t, ga_identity(group)));
    rec.check(srg_eq.holds && mixed.holds && lhs == rhs,
              label + ": S^2 identity " + (srg_eq.holds ? "holds" : "fails") + ", S*N identity " +
                  (mixed.holds ? "holds" : "fails") + ", N^2 identity " + (lhs == rhs ? "holds" : "fails"));
  }
}

void criterion_lexprod(Recorder& rec, const SuiteOptions&) {
  const auto rep = lexprod(paley(5), paley(5));
  const ConnectionSet& s = rep.connection_set;
  rec.check(s.size() == 12 && rep.group().factors() == std::vector<int>{5, 5},
            "P5[P5]: |S| = " + std::to_string(s.size()) + " over " + rep.group().name());
  const DenseGraph g = build_cayley(s);
  const DenseGraph p5 = build_cayley(paley(5).connection_set);
  rec.check(g == lexicographic_product(p5, p5), "P5[P5]: Cayley graph equals the graph lexicographic product");
  const IsoResult sc = is_self_complementary(g);
  rec.check(certificate_valid(g, sc), "P5[P5]: self-complementary by full decider, " + selfcomp_text(sc));
  const SrgCheck srg = check_srg(g);
  const bool refuted = !srg.ok() && srg.witness.u >= 0 && srg.witness.v >= 0;
  std::ostringstream w;
  w << "P5[P5]: check_srg refutes (" << to_string(srg.failure) << ", witness {" << srg.witness.u << ","
    << srg.witness.v << "} observed " << srg.witness.observed << " expected " << srg.witness.expected << ")";
  rec.check(refuted, w.str());
}

ConnectionSet random_connection_set(const AbelianGroup& group, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<int> idx;
  for (int x = 1; x < group.order(); ++x) {
    const int y = group.neg_index(x);
    if (y < x) continue;
    if (coin(rng)) {
      idx.push_back(x);
      if (y != x) idx.push_back(y);
    }
  }
  return connection_set_from_indices(group, std::move(idx));
}

void property_complement(Recorder& rec, std::mt19937_64& rng) {
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 60);
    const DenseGraph g = oracle::random_graph(n, 0.1 + 0.08 * (i % 10), rng);
    if (!(complement(complement(g)) == g)) ++bad;
  }
  rec.check(bad == 0, "complement involution on 100 random graphs");
}

void property_cayley(Recorder& rec, std::mt19937_64& rng,
                     const std::vector<std::pair<std::string, ConnectionSet>>& sets) {
  int bad = 0;
  int translations = 0;
  for (const auto& [label, s] : sets) {
    const DenseGraph g = build_cayley(s);
    if (!(build_cayley(complement_connection_set(s)) == complement(g))) ++bad;
    const AbelianGroup& group = s.group();
    std::vector<int> perm(static_cast<std::size_t>(group.order()));
    for (int shift = 0; shift < group.order(); ++shift) {
      for (int x = 0; x < group.order(); ++x) perm[x] = group.add_index(x, shift);
      if (!verify_certificate(g, g, perm)) ++bad;
      ++translations;
    }
  }
  int random_bad = 0;
  for (const auto& factors : {std::vector<int>{13}, std::vector<int>{4, 4}, std::vector<int>{3, 3, 3}}) {
    const AbelianGroup group(factors);
    for (int i = 0; i < 20; ++i) {
      const ConnectionSet s = random_connection_set(group, rng);
      if (!(build_cayley(complement_connection_set(s)) == complement(build_cayley(s)))) ++random_bad;
    }
  }
  rec.check(bad == 0 && random_bad == 0,
            "build_cayley(complement set) == complement(build_cayley) and " + std::to_string(translations) +
                " translations are automorphisms on " + std::to_string(sets.size()) + " constructed graphs");
}

void property_pds_equivalence(Recorder& rec, std::mt19937_64& rng) {
  const std::vector<std::vector<int>> groups = {{5}, {13}, {3, 3}, {4, 4}, {5, 5}, {9, 9}};
  int disagreements = 0;
  int pds_found = 0;
  int total = 0;
  for (const auto& factors : groups) {
    const AbelianGroup group(factors);
    for (int i = 0; i < kRandomSetsPerGroup; ++i) {
      const ConnectionSet s = random_connection_set(group, rng);
      const auto sq = ga_mul(ga_from_indices(group, s.indices()), ga_from_indices(group, s.indices()));
      // Candidate parameters read off the first element inside and outside S.
      int lambda = 0;
      int mu = 0;
      bool have_lambda = false;
      bool have_mu = false;
      for (int x = 1; x < group.order(); ++x) {
        if (s.contains_index(x) && !have_lambda) {
          lambda = static_cast<int>(sq[x]);
          have_lambda = true;
        } else if (!s.contains_index(x) && !have_mu) {
          mu = static_cast<int>(sq[x]);
          have_mu = true;
        }
      }
      const bool a = verify_pds(group, s.elements(), lambda, mu).holds;
      const bool b = verify_srg_equation(s, SrgParams{group.order(), s.size(), lambda, mu}).holds;
      if (a != b) ++disagreements;
      pds_found += a;
      ++total;
    }
  }
  rec.check(disagreements == 0, "verify_pds agrees with verify_srg_equation on " + std::to_string(total) +
                                    " random inverse-closed sets (" + std::to_string(pds_found) + " are PDS)");
}

void property_iso_oracle(Recorder& rec, std::mt19937_64& rng) {
  int pairs = 0;
  int isomorphic = 0;
  int mismatches = 0;
  int unverified = 0;
  for (int n = 1; n <= kOracleMaxVertices; ++n) {
    std::vector<DenseGraph> corpus;
    for (double density : {0.3, 0.5, 0.7}) {
      const DenseGraph base = oracle::random_graph(n, density, rng);
      corpus.push_back(base);
      corpus.push_back(relabel(base, oracle::random_permutation(n, rng)));
      if (n >= 2) {
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (base.adjacent(u, v) != (u == 0 && v == 1)) b.add_edge(u, v);
        corpus.push_back(relabel(std::move(b).build(), oracle::random_permutation(n, rng)));
      }
    }
    if (n >= 3) {
      const DenseGraph cycle =
          graph_from_predicate(n, [n](int u, int v) { return v - u == 1 || (u == 0 && v == n - 1); });
      corpus.push_back(cycle);
      corpus.push_back(relabel(cycle, oracle::random_permutation(n, rng)));
      corpus.push_back(complement(cycle));
    }
    if (n % 2 == 0 && n >= 6) {
      const int h = n / 2;
      corpus.push_back(graph_from_predicate(n, [h](int u, int v) {
        if ((u < h) != (v < h)) return false;
        const int a = u % h;
        const int b = v % h;
        return b - a == 1 || (a == 0 && b == h - 1);
      }));
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (std::size_t j = i; j < corpus.size(); ++j) {
        const bool expected = oracle::brute_force_isomorphic(corpus[i], corpus[j]);
        const IsoResult r = are_isomorphic(corpus[i], corpus[j]);
        ++pairs;
        isomorphic += expected;
        if (!r.decided() || r.isomorphic() != expected) ++mismatches;
        if (r.isomorphic() && !verify_certificate(corpus[i], corpus[j], r.certificate.permutation)) ++unverified;
      }
    }
  }
  rec.check(mismatches == 0 && unverified == 0,
            "are_isomorphic matches the brute-force oracle on " + std::to_string(pairs) + " pairs with n <= " +
                std::to_string(kOracleMaxVertices) + " (" + std::to_string(isomorphic) + " isomorphic)");
}

void property_rank_invariance(Recorder& rec, std::mt19937_64& rng, const DenseGraph& g, const std::string& label) {
  std::vector<int> base;
  for (int p : kFingerprintPrimes)
    for (int shift : {0, 1}) base.push_back(mod_p_rank(g, p, shift));
  int bad = 0;
  for (int i = 0; i < kRelabelings; ++i) {
    const DenseGraph h = relabel(g, oracle::random_permutation(g.size(), rng));
    std::size_t k = 0;
    for (int p : kFingerprintPrimes)
      for (int shift : {0, 1}) bad += mod_p_rank(h, p, shift) != base[k++];
  }
  rec.check(bad == 0, "mod_p_rank (p = 2,3,5,7; shift 0,1) invariant under " + std::to_string(kRelabelings) +
                          " relabelings of " + label);
}

void criterion_properties(Recorder& rec, const SuiteOptions& options) {
  std::mt19937_64 rng(options.seed);
  property_complement(rec, rng);

  std::vector<std::pair<std::string, ConnectionSet>> sets;
  for (auto& [label, rep] : conference_instances(true)) sets.emplace_back(label, rep.connection_set);
  sets.emplace_back("P5[P5]", lexprod(paley(5), paley(5)).connection_set);
  property_cayley(rec, rng, sets);

  property_pds_equivalence(rec, rng);
  property_iso_oracle(rec, rng);
  property_rank_invariance(rec, rng, build_cayley(davis(3).connection_set), "davis(3)");
  property_rank_invariance(rec, rng, oracle::random_graph(40, 0.5, rng), "a random 40-vertex graph");
}

void criterion_feasibility(Recorder& rec, const SuiteOptions&) {
  const auto expected = oracle::feasible_orders_by_sieve(kFeasibilityBound);
  int mismatches = 0;
  int feasible = 0;
  int first_bad = -1;
  for (int m = 1; m <= kFeasibilityBound; ++m) {
    const bool got = paley_type_order_feasible(m).feasible;
    feasible += got;
    if (got != expected[m]) {
      ++mismatches;
      if (first_bad < 0) first_bad = m;
    }
  }
  rec.check(mismatches == 0, "predicate matches sieve classification for m <= " + std::to_string(kFeasibilityBound) +
                                 " (" + std::to_string(feasible) + " feasible" +
                                 (first_bad >= 0 ? ", first mismatch " + std::to_string(first_bad) : "") + ")");
  rec.check(paley_type_order_feasible(81).feasible && !paley_type_order_feasible(45).feasible &&
                paley_type_order_feasible(5625).feasible,
            "81 feasible, 45 infeasible, 5625 = 9*5^4 feasible");
}

struct Entry {
  int id;
  const char* name;
  const char* summary;
  std::function<void(Recorder&, const SuiteOptions&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {1, "paley family", "q in {5,9,13,25}: conference SRG, diameter 2, self-complementary", criterion_paley},
      {2, "peisert family", "q in {9,49}: SRG(9,4,1,2), SRG(49,24,11,12), self-complementary", criterion_peisert},
      {3, "davis p=3", "|S|=40, PDS(19,20), group-algebra identities, SRG(81,40,19,20), self-complementary",
       criterion_davis3},
      {4, "davis p=5", "|S|=312, PDS(155,156), no automorphism certificate; extended: not self-complementary",
       criterion_davis5},
      {5, "group-algebra identities", "S^2, S*N and N^2 identities for every conference instance",
       criterion_identities},
      {6, "lexicographic product", "P5[P5] self-complementary and not strongly regular", criterion_lexprod},
      {7, "property suites", "complement, Cayley, PDS, isomorphism oracle, p-rank, translations",
       criterion_properties},
      {8, "order feasibility", "predicate vs sieve for m <= 10^4", criterion_feasibility},
  };
  return table;
}

double time_limit(int id, Tier tier) {
  switch (id) {
    case 1: return kPaleyLimit;
    case 2: return kPeisertLimit;
    case 3: return kDavis3Limit;
    case 4: return tier == Tier::kExtended ? kDavis5ExtendedLimit : kDavis5StandardLimit;
    case 5: return kIdentitiesLimit;
    case 6: return kLexProductLimit;
    case 7: return kPropertiesLimit;
    default: return kFeasibilityLimit;
  }
}

}  // namespace

std::string to_string(Tier tier) { return tier == Tier::kExtended ? "extended" : "standard"; }

std::vector<CriterionInfo> criteria(Tier tier) {
  std::vector<CriterionInfo> out;
  for (const auto& e : entries()) out.push_back({e.id, e.name, time_limit(e.id, tier), e.summary});
  return out;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  CriterionResult result;
  result.id = id;
  result.time_limit_seconds = time_limit(id, options.tier);
  const Entry* entry = nullptr;
  for (const auto& e : entries()) {
    if (e.id == id) entry = &e;
  }
  if (!entry) {
    result.name = "unknown";
    result.checks.push_back("FAIL no criterion " + std::to_string(id));
    return result;
  }
  result.name = entry->name;
  Recorder rec(result);
  const auto start = std::chrono::steady_clock::now();
  try {
    entry->run(rec, options);
  } catch (const std::exception& e) {
    rec.check(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = result.seconds <= result.time_limit_seconds;
  if (!in_time) rec.check(false, "time limit exceeded");
  result.passed = !rec.failed();
  return result;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& e : entries()) out.push_back(run_criterion(e.id, options));
  return out;
}

std::string format_line(const CriterionResult& result) {
  char buf[128];
  std::snprintf(buf, sizeof buf, " (%.2f s / limit %.0f s, exact)", result.seconds, result.time_limit_seconds);
  return std::string(result.passed ? "[PASS] " : "[FAIL] ") + std::to_string(result.id) + " " + result.name + buf;
}

}  // namespace sccay::suite
