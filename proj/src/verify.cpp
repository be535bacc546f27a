#include "sympgrass/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <thread>

#include "sympgrass/errors.hpp"
#include "sympgrass/groebner.hpp"
#include "sympgrass/hilbert.hpp"
#include "sympgrass/monw.hpp"
#include "sympgrass/paths.hpp"
#include "sympgrass/plucker.hpp"
#include "sympgrass/smt.hpp"

namespace sympgrass {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct Pair {
  int d;
  IsotropicSignature v;
  IsotropicSignature w;
};

std::vector<Pair> comparable_pairs(int d) {
  std::vector<Pair> out;
  const auto elements = enumerate_isotropic(d);
  for (const auto& v : elements) {
    for (const auto& w : elements) {
      if (leq(v, w)) out.push_back({d, v, w});
    }
  }
  return out;
}

std::vector<Pair> comparable_pairs_up_to(int max_d) {
  std::vector<Pair> out;
  for (int d = 1; d <= max_d; ++d) {
    auto more = comparable_pairs(d);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

json decimal_list(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_decimal(x));
  return out;
}

json base_record(const Pair& p) { return {{"d", p.d}, {"v", p.v.str()}, {"w", p.w.str()}}; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Wraps a job so that it returns {"records": [...]} plus its run time.
std::function<json()> timed(std::function<json()> body, bool timings) {
  return [body = std::move(body), timings] {
    const auto start = Clock::now();
    json records = body();
    if (timings) {
      const double micros = seconds_since(start) * 1e6 / std::max<std::size_t>(1, records.size());
      for (auto& r : records) r["micros"] = static_cast<std::int64_t>(micros);
    }
    return records;
  };
}

json summarize(const std::string& name, const std::vector<json>& batches, Clock::time_point start, bool timings) {
  json suite{{"name", name}};
  json records = json::array();
  std::size_t failures = 0;
  for (const auto& batch : batches) {
    for (const auto& r : batch) {
      if (!r.at("agree").get<bool>()) ++failures;
      records.push_back(r);
    }
  }
  suite["instances"] = records.size();
  suite["failures"] = failures;
  suite["ok"] = failures == 0;
  if (timings) suite["seconds"] = seconds_since(start);
  suite["records"] = std::move(records);
  return suite;
}

// Monomial side against tableau side, one record per (d, v, w, m).
json tmain_records(const Pair& p, int max_degree) {
  const DominatedComplex complex(p.v, p.w);
  const auto hilbert = complex.hilbert_function(max_degree);
  const auto smt = count_sm(p.v, p.w, max_degree);
  json out = json::array();
  for (int m = 0; m <= max_degree; ++m) {
    json r = base_record(p);
    r["m"] = m;
    r["hilbert"] = to_decimal(hilbert[m]);
    r["smt"] = to_decimal(smt[m]);
    r["agree"] = hilbert[m] == smt[m];
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Pair> sample_pairs(int d, int count, std::uint64_t seed) {
  auto pool = comparable_pairs(d);
  std::mt19937_64 rng(seed);
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(std::max(count, 0)), pool.size());
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end());
  return pool;
}

json suite_tmain(const VerifyConfig& cfg, unsigned workers) {
  const auto start = Clock::now();
  std::vector<std::function<json()>> jobs;
  for (const Pair& p : comparable_pairs_up_to(cfg.max_d)) {
    jobs.push_back(timed([p, m = cfg.max_degree] { return tmain_records(p, m); }, cfg.timings));
  }
  const int sample_d = cfg.max_d + 1;
  const int sample_degree = std::max(0, cfg.max_degree - 1);
  if (cfg.samples > 0 && sample_d <= 10) {
    for (const Pair& p : sample_pairs(sample_d, cfg.samples, cfg.seed)) {
      jobs.push_back(timed(
          [p, sample_degree] {
            json records = tmain_records(p, sample_degree);
            for (auto& r : records) r["sampled"] = true;
            return records;
          },
          cfg.timings));
    }
  }
  return summarize("tmain", run_pool(jobs, workers), start, cfg.timings);
}

json suite_mult(const VerifyConfig& cfg, unsigned workers) {
  const auto start = Clock::now();
  std::vector<std::function<json()>> jobs;
  for (const Pair& p : comparable_pairs_up_to(cfg.mult_max_d)) {
    jobs.push_back(timed(
        [p] {
          const DominatedComplex complex(p.v, p.w);
          const BigInt squarefree = complex.multiplicity();
          const BigInt paths = count_path_systems(p.v, p.w);
          const BigInt hseries = multiplicity_from_hilbert_polynomial(complex);
          json r = base_record(p);
          r["dimension"] = complex.dimension();
          r["squarefree"] = to_decimal(squarefree);
          r["paths"] = to_decimal(paths);
          r["hseries"] = to_decimal(hseries);
          r["agree"] = squarefree == paths && squarefree == hseries;
          return json::array({r});
        },
        cfg.timings));
  }
  return summarize("mult", run_pool(jobs, workers), start, cfg.timings);
}

bool expected_to_pass(int index, OrderScheme scheme) {
  if (scheme == OrderScheme::HomogeneousLex) return index == 1 || index == 2 || index == 7 || index == 8;
  return index == 4 || index == 6;
}

json violation_json(const Pair& p, const TermOrder& order, const GrobnerViolation& v) {
  json r = base_record(p);
  r["order"] = order.index();
  r["scheme"] = to_string(order.scheme());
  r["top"] = v.good.pair.top.str();
  r["bottom"] = v.good.pair.bottom.str();
  r["theta"] = v.good.theta.str();
  r["mon_theta"] = to_string(v.expected);
  r["initial_term"] = to_string(v.found.monomial);
  r["initial_coefficient"] = to_decimal(v.found.coefficient);
  return r;
}

json suite_grobner(const VerifyConfig& cfg, unsigned workers) {
  const auto start = Clock::now();
  const auto pairs = comparable_pairs_up_to(cfg.max_d);
  std::vector<std::function<json()>> jobs;
  for (const Pair& p : pairs) {
    jobs.push_back(timed(
        [p, m = cfg.max_degree] {
          json out = json::array();
          for (OrderScheme scheme : {OrderScheme::HomogeneousLex, OrderScheme::ReverseLex}) {
            for (int index = 1; index <= 8; ++index) {
              const TermOrder order(index, scheme);
              const GrobnerReport rep = certify_grobner(p.v, p.w, order, m);
              json r = base_record(p);
              r["order"] = index;
              r["scheme"] = to_string(scheme);
              r["expected_pass"] = expected_to_pass(index, scheme);
              r["good_pairs"] = rep.good_pair_count;
              r["violations"] = rep.violations.size();
              r["unit_coefficients"] = rep.unit_coefficients;
              r["counting_ok"] = rep.counting_ok;
              r["agree"] = rep.counting_ok && rep.unit_coefficients &&
                           (!expected_to_pass(index, scheme) || rep.violations.empty());
              if (!rep.violations.empty()) r["first_violation"] = violation_json(p, order, rep.violations.front());
              out.push_back(std::move(r));
            }
          }
          return out;
        },
        cfg.timings));
  }
  json suite = summarize("grobner", run_pool(jobs, workers), start, cfg.timings);
  json witnesses = json::object();
  for (const auto& r : suite["records"]) {
    if (r["scheme"] != "revlex" || (r["order"] != 3 && r["order"] != 5)) continue;
    const std::string key = "revlex" + std::to_string(r["order"].get<int>());
    if (!witnesses.contains(key) && r.contains("first_violation")) witnesses[key] = r["first_violation"];
  }
  suite["expected_failure_witnesses"] = witnesses;
  suite["expected_failures_demonstrated"] = witnesses.size() == 2;
  suite["ok"] = suite["ok"].get<bool>() && witnesses.size() == 2;
  return suite;
}

// Every point of mon_w with c <= d < r is diagonal.
bool points_in_three_cases(const GridMonomial& m, int d) {
  for (const GridPoint& p : m.support()) {
    const bool low = p.c < p.r && p.r <= d;
    const bool high = d < p.c && p.c < p.r;
    const bool diag = dual_index(p.r, d) == p.c && p.c <= d && d < p.r;
    if (!low && !high && !diag) return false;
  }
  return true;
}

// Squarefree supports S on posC dominated by w: w also dominates S ∪ S#.
bool ldomination_holds(const IsotropicSignature& v, const IsotropicSignature& w) {
  const VGrid grid(v);
  const auto& pos = grid.pos_c();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pos.size()); ++mask) {
    std::vector<GridPoint> points;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      if (mask >> i & 1u) points.push_back(pos[i]);
    }
    if (!dominates_points(w, v, points)) continue;
    std::vector<GridPoint> doubled = points;
    for (GridPoint p : points) doubled.push_back(mirror_point(p, v.d()));
    if (!dominates_points(w, v, doubled)) return false;
  }
  return true;
}

json monw_records(const Pair& p) {
  const int d = p.d;
  const GridMonomial m = mon_w(p.v, p.w);
  json r = base_record(p);
  r["mon_w"] = m.str();
  r["reference"] = m == mon_w_reference(p.v, p.w);
  r["condition_d"] = m.degree() == v_degree(p.w, p.v);
  r["condition_e"] = dominator(p.v, m) == p.w;

  bool minimal = true;
  bool hash_ok = true;
  if (d <= 3) {
    for (const IndexSet& u : enumerate_index_sets(d, 2 * d)) {
      if (dominates_monomial(u, p.v, m) && !leq(p.w, u)) minimal = false;
    }
  }
  for (const IndexSet& u : enumerate_index_sets(d, 2 * d)) {
    if (!leq(p.v, u)) continue;
    if (mon_w(p.v, sharp(u)) != mirror_monomial(mon_w(p.v, u))) hash_ok = false;
  }
  r["condition_e_ambient"] = minimal;
  r["sharp_equivariance"] = hash_ok;

  const auto diagonal = static_cast<int>(
      std::count_if(m.terms().begin(), m.terms().end(), [&](const GridTerm& t) { return on_diagonal(t.point, d); }));
  r["diagonal_points"] = diagonal;
  r["degree_relation"] = diagonal == eps_degree(p.w) - eps_degree(p.v);
  r["three_cases"] = points_in_three_cases(m, d);
  if (p.v == epsilon(d)) r["degree_relation_at_epsilon"] = diagonal == eps_degree(p.w);
  r["ldomination"] = d <= 3 ? json(ldomination_holds(p.v, p.w)) : json(nullptr);

  bool agree = true;
  for (const char* key : {"reference", "condition_d", "condition_e", "condition_e_ambient", "sharp_equivariance",
                          "degree_relation", "three_cases", "degree_relation_at_epsilon", "ldomination"}) {
    if (r.contains(key) && r[key].is_boolean()) agree = agree && r[key].get<bool>();
  }
  r["agree"] = agree;
  return json::array({r});
}

json suite_monw(const VerifyConfig& cfg, unsigned workers) {
  const auto start = Clock::now();
  std::vector<std::function<json()>> jobs;
  for (const Pair& p : comparable_pairs_up_to(cfg.mult_max_d)) {
    jobs.push_back(timed([p] { return monw_records(p); }, cfg.timings));
  }
  return summarize("monw", run_pool(jobs, workers), start, cfg.timings);
}

const char* kD5V = "1,2,3,6,7";
const char* kD5W = "3,5,7,9,10";
const char* kD23V = "1,2,3,4,5,11,12,13,14,19,20,22,23,26,29,30,31,32,37,38,39,40,41";
const char* kD23W = "4,5,9,10,14,17,18,21,23,25,27,28,31,32,34,35,36,39,40,41,44,45,46";

std::size_t sharp_orbits(int d) {
  std::set<IndexSet> reps;
  for (const IndexSet& u : enumerate_index_sets(d, 2 * d)) reps.insert(std::min(u, sharp(u)));
  return reps.size();
}

// The values of the worked examples, as decimal strings or canonical text.
json example_values() {
  const auto v2 = IsotropicSignature::parse(kD5V, 5);
  const auto w2 = IsotropicSignature::parse(kD5W, 5);
  const auto v1 = IsotropicSignature::parse(kD23V, 23);
  const auto w1 = IsotropicSignature::parse(kD23W, 23);
  const auto eps = epsilon(4);
  const IndexSet t1 = IndexSet::parse("1,2,7,8", 8);
  const IndexSet t2 = IndexSet::parse("1,4,5,8", 8);
  const IndexSet t3 = IndexSet::parse("1,3,6,8", 8);
  const IndexSet recover = IndexSet::parse("2,3,6,7", 8);
  const ThetaRecovery rec = theta_to_ap(recover, sharp(recover));
  const PatchMatrix patch(IsotropicSignature::parse("3,4,6,9,10", 5));
  auto entry_text = [&](int r, int j) {
    const PatchEntry& e = patch.entry(r, j);
    return (e.sign < 0 ? "-X" : "X") + to_string(e.variable);
  };
  return {
      {"d5_mon_w", mon_w(v2, w2).str()},
      {"d5_multiplicity_squarefree", to_decimal(multiplicity(v2, w2))},
      {"d5_multiplicity_paths", to_decimal(count_path_systems(v2, w2))},
      {"d23_mon_w", mon_w(v1, w1).str()},
      {"d4_admissible_pairs", std::to_string(enumerate_admissible_pairs(4).size())},
      {"d4_sharp_orbits", std::to_string(sharp_orbits(4))},
      {"d4_recovery", rec.x.str() + " | " + rec.y.str() + (rec.admissible() ? " admissible" : " not admissible")},
      {"d4_f_theta1", f_theta(eps, t1).str()},
      {"d4_linear_relation", (f_theta(eps, t1) + f_theta(eps, t2) + f_theta(eps, t3)).str()},
      {"d4_f_theta1_sharp", f_theta(eps, sharp(t1)).str()},
      {"patch_entries", entry_text(2, 5) + " " + entry_text(7, 3) + " " + entry_text(8, 5)},
  };
}

json expected_example_values() {
  return {
      {"d5_mon_w", "{(5,2), (9,6), (10,1)}"},
      {"d5_multiplicity_squarefree", "10"},
      {"d5_multiplicity_paths", "10"},
      {"d23_mon_w",
       "{(9,3), (10,2), (17,13), (18,12), (21,20), (25,22), (27,26), (28,19), (34,30), (35,29), (36,11), "
       "(44,38), (45,37), (46,1)}"},
      {"d4_admissible_pairs", "42"},
      {"d4_sharp_orbits", "43"},
      {"d4_recovery", "2,3,5,8 | 1,4,6,7 not admissible"},
      {"d4_f_theta1", "+1·X(5,1)·X(6,2) -1·X(5,2)·X(6,1)"},
      {"d4_linear_relation", "0"},
      {"d4_f_theta1_sharp", "+1·X(5,1)·X(6,2) -1·X(5,2)·X(6,1)"},
      {"patch_entries", "-X(1,9) X(5,4) X(1,3)"},
  };
}

json suite_worked_examples(const VerifyConfig& cfg) {
  const auto start = Clock::now();
  const json actual = example_values();
  const json expected = expected_example_values();
  json records = json::array();
  for (const auto& [key, value] : expected.items()) {
    records.push_back({{"example", key}, {"expected", value}, {"actual", actual.at(key)}, {"agree", value == actual.at(key)}});
  }
  return summarize("worked-examples", {records}, start, cfg.timings);
}

json suite_trivial(const VerifyConfig& cfg) {
  const auto start = Clock::now();
  json records = json::array();
  for (int d = 1; d <= cfg.max_d; ++d) {
    for (const auto& v : enumerate_isotropic(d)) {
      const DominatedComplex complex(v, v);
      const VGrid grid(v);
      const int n = static_cast<int>(grid.roots().size() - grid.pos_c().size());
      const auto smt = count_sm(v, v, cfg.max_degree);
      bool hf = true;
      for (int m = 0; m <= cfg.max_degree; ++m) {
        const BigInt free_count = n == 0 ? BigInt(m == 0 ? 1 : 0) : binomial(n + m - 1, m);
        hf = hf && complex.hilbert_value(m) == free_count && smt[m] == free_count;
      }
      const auto h = complex.h_vector();
      json r = base_record({d, v, v});
      r["free_variables"] = n;
      r["multiplicity"] = to_decimal(complex.multiplicity());
      r["dimension"] = complex.dimension();
      r["hilbert_is_free"] = hf;
      r["agree"] = hf && complex.multiplicity() == 1 && complex.dimension() == n && h.size() == 1 && h[0] == 1;
      records.push_back(std::move(r));
    }
  }
  const auto v = IsotropicSignature::parse("1", 1);
  const auto w = IsotropicSignature::parse("2", 1);
  const auto hf = DominatedComplex(v, w).hilbert_function(cfg.max_degree);
  json r = base_record({1, v, w});
  r["hilbert"] = decimal_list(hf);
  r["agree"] = std::all_of(hf.begin(), hf.end(), [](const BigInt& x) { return x == 1; });
  records.push_back(std::move(r));
  return summarize("trivial", {records}, start, cfg.timings);
}

json corpus_instance(const Pair& p, int max_degree) {
  const DominatedComplex complex(p.v, p.w);
  json r = base_record(p);
  r["mon_w"] = mon_w(p.v, p.w).str();
  r["dimension"] = complex.dimension();
  r["multiplicity"] = to_decimal(complex.multiplicity());
  r["f_vector"] = decimal_list(complex.f_vector());
  r["h_vector"] = decimal_list(complex.h_vector());
  r["hilbert"] = decimal_list(complex.hilbert_function(max_degree));
  r["good_pairs"] = good_pairs(p.v, p.w).size();
  return r;
}

json suite_corpus(const VerifyConfig& cfg, unsigned workers) {
  const auto start = Clock::now();
  if (!cfg.corpus) {
    json suite{{"name", "corpus"}, {"ok", true}, {"skipped", true}, {"instances", 0}, {"failures", 0}};
    suite["records"] = json::array();
    return suite;
  }
  std::ifstream in(*cfg.corpus);
  if (!in) throw InputError("cannot read corpus file " + cfg.corpus->string());
  json corpus;
  try {
    corpus = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("corpus file " + cfg.corpus->string() + " is not valid JSON: " + e.what());
  }
  if (corpus.value("schema", "") != kCorpusSchema) {
    throw InputError("corpus file " + cfg.corpus->string() + " does not declare schema " + kCorpusSchema);
  }
  const int degree = corpus.at("max_degree").get<int>();

  std::vector<std::function<json()>> jobs;
  jobs.push_back([golden = corpus.at("worked_examples")] {
    const json actual = example_values();
    json r{{"instance", "worked_examples"}};
    r["agree"] = golden == actual;
    if (golden != actual) r["diff"] = json::diff(golden, actual);
    return json::array({r});
  });
  for (const json& golden : corpus.at("instances")) {
    jobs.push_back([golden, degree] {
      const int d = golden.at("d").get<int>();
      const Pair p{d, IsotropicSignature::parse(golden.at("v").get<std::string>(), d),
                   IsotropicSignature::parse(golden.at("w").get<std::string>(), d)};
      const json actual = corpus_instance(p, degree);
      json r = base_record(p);
      r["agree"] = golden == actual;
      if (golden != actual) r["diff"] = json::diff(golden, actual);
      return json::array({r});
    });
  }
  json suite = summarize("corpus", run_pool(jobs, workers), start, cfg.timings);
  suite["file"] = cfg.corpus->filename().string();
  return suite;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tmain", "mult", "grobner", "monw", "worked-examples", "trivial", "corpus"};
  return names;
}

unsigned worker_count() {
  if (const char* env = std::getenv("SYMPGRASS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min(n, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<json> run_pool(const std::vector<std::function<json()>>& jobs, unsigned workers) {
  std::vector<json> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < count; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

json run_verification(const VerifyConfig& cfg) {
  if (cfg.max_d < 1 || cfg.max_d > 6) throw InputError("verify: --max-d must be in 1..6");
  if (cfg.mult_max_d < 1 || cfg.mult_max_d > 6) throw InputError("verify: --mult-max-d must be in 1..6");
  if (cfg.max_degree < 0) throw InputError("verify: --max-degree must be non-negative");
  std::vector<std::string> chosen = cfg.suites.empty() ? suite_names() : cfg.suites;
  for (const auto& s : chosen) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw InputError("verify: unknown suite \"" + s + "\"");
    }
  }
  const unsigned workers = worker_count();

  json report{{"schema", kReportSchema}};
  report["config"] = {{"max_d", cfg.max_d},         {"max_degree", cfg.max_degree}, {"mult_max_d", cfg.mult_max_d},
                      {"samples", cfg.samples},     {"seed", std::to_string(cfg.seed)},
                      {"suites", chosen}};
  if (cfg.timings) report["workers"] = workers;
  json suites = json::array();
  bool ok = true;
  for (const auto& name : suite_names()) {
    if (std::find(chosen.begin(), chosen.end(), name) == chosen.end()) continue;
    json suite;
    if (name == "tmain") suite = suite_tmain(cfg, workers);
    if (name == "mult") suite = suite_mult(cfg, workers);
    if (name == "grobner") suite = suite_grobner(cfg, workers);
    if (name == "monw") suite = suite_monw(cfg, workers);
    if (name == "worked-examples") suite = suite_worked_examples(cfg);
    if (name == "trivial") suite = suite_trivial(cfg);
    if (name == "corpus") suite = suite_corpus(cfg, workers);
    ok = ok && suite["ok"].get<bool>();
    suites.push_back(std::move(suite));
  }
  report["suites"] = std::move(suites);
  report["ok"] = ok;
  return report;
}

json build_corpus(int max_d, int max_degree) {
  if (max_d < 1 || max_d > 6) throw InputError("corpus: max_d must be in 1..6");
  json corpus{{"schema", kCorpusSchema}, {"max_d", max_d}, {"max_degree", max_degree}};
  corpus["worked_examples"] = example_values();
  std::vector<std::function<json()>> jobs;
  for (const Pair& p : comparable_pairs_up_to(max_d)) {
    jobs.push_back([p, max_degree] { return corpus_instance(p, max_degree); });
  }
  corpus["instances"] = run_pool(jobs, worker_count());
  return corpus;
}

}  // namespace sympgrass
