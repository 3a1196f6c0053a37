#ifndef DATAFAIR_IMPORTANCE_HPP
#define DATAFAIR_IMPORTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "datafair/estimators.hpp"

namespace datafair {

// request for a single metric point value, used by the permutation loop
struct MetricRequest {
  MetricId id = MetricId::parity;
  MetricSpec fairness;  // parity / opportunity (either kind)
  CmiConfig cmi;        // MetricId::cmi

  static MetricRequest for_fairness(const MetricSpec& spec);
  static MetricRequest for_cmi(const CmiConfig& config);
};

// point estimate of the requested metric on the given split
double metric_point_estimate(const SplitPair& split, const MetricRequest& req);

struct ImportanceReport {
  MetricId metric = MetricId::parity;
  std::vector<std::string> feature_names;
  std::vector<double> contributions;  // mean marginal contribution
  std::vector<double> mc_std_err;     // across-permutation standard error
  double full_value = 0.0;
  double empty_value = 0.0;
  std::size_t n_perms = 0;
  std::size_t failed_perms = 0;
  std::vector<std::string> diagnostics;

  std::string to_tsv() const;
};

// Shapley-style attribution: sample feature orderings, refit nuisances on
// each prefix subset of the training split, evaluate the metric on the eval
// split, and average each feature's successive change. The empty coalition
// is scored with constant learners.
ImportanceReport shapley_importance(const SplitPair& split,
                                    const MetricRequest& req,
                                    std::size_t n_perms, std::uint64_t seed,
                                    int threads = 0);

}  // namespace datafair

#endif
