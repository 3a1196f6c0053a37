#ifndef DATAFAIR_STUDY_HPP
#define DATAFAIR_STUDY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "datafair/dgp.hpp"
#include "datafair/estimators.hpp"

namespace datafair {

// one (dgp, metric, estimator, n) grid point of a coverage study
struct StudyCell {
  std::string label;
  DgpSpec dgp;
  MetricId metric = MetricId::parity;
  MetricSpec spec;      // fairness metrics
  CmiConfig cmi;        // MetricId::cmi
  std::size_t n = 1000;
  double split_ratio = 0.5;
  double truth = 0.0;   // reference value the CIs are checked against
};

struct StudyConfig {
  std::vector<StudyCell> cells;
  std::size_t replicates = 100;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 -> default worker count
};

struct CellSummary {
  std::string label;
  std::string dgp;
  std::string metric;
  std::size_t n = 0;
  std::size_t replicates = 0;
  std::size_t failures = 0;
  double truth = 0.0;
  double coverage = 0.0;    // fraction of replicate CIs containing truth
  double mean_point = 0.0;
  double mean_bias = 0.0;   // mean(point - truth)
  double sd_point = 0.0;    // replicate standard deviation
  double mean_width = 0.0;  // mean CI width
  std::vector<std::string> failure_messages;
};

struct CoverageReport {
  std::vector<CellSummary> cells;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;

  std::string to_tsv() const;  // one row per cell
};

// Independent replicates per cell with derived RNG streams; results do not
// depend on the worker count. A replicate that throws is recorded as a
// failure, never silently dropped.
CoverageReport run_coverage_study(const StudyConfig& config);

// default worker count: DATAFAIR_THREADS env var, else hardware concurrency
int default_thread_count();

}  // namespace datafair

#endif
