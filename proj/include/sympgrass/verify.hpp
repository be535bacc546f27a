#pragma once

// Verification sweeps: independent computations of the same invariants,
// compared instance by instance and collected into a versioned JSON report.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sympgrass {

inline constexpr const char* kReportSchema = "sympgrass.verify/1";
inline constexpr const char* kCorpusSchema = "sympgrass.corpus/1";

struct VerifyConfig {
  int max_d = 3;          // exhaustive range for tmain, grobner, trivial
  int max_degree = 5;
  int mult_max_d = 4;     // exhaustive range for mult and monw
  int samples = 20;       // extra tmain pairs drawn at d = max_d + 1
  std::uint64_t seed = 1;
  std::vector<std::string> suites;  // empty means all
  std::optional<std::filesystem::path> corpus;
  bool timings = true;    // off gives byte-identical reports
};

/// tmain, mult, grobner, monw, worked-examples, trivial, corpus.
const std::vector<std::string>& suite_names();

/// SYMPGRASS_THREADS if set to a positive integer, else the hardware count.
unsigned worker_count();

/// Runs `jobs` on a bounded pool; results keep the job order.
std::vector<nlohmann::json> run_pool(const std::vector<std::function<nlohmann::json()>>& jobs, unsigned workers);

/// {"schema", "config", "suites": [{"name", "ok", "instances", "failures",
/// "records", ...}], "ok"}. Throws InputError on unknown suites or an
/// unreadable corpus.
nlohmann::json run_verification(const VerifyConfig& config);

/// Golden values for the worked examples and every v <= w with d <= max_d.
nlohmann::json build_corpus(int max_d, int max_degree);

}  // namespace sympgrass
