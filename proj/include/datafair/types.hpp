#ifndef DATAFAIR_TYPES_HPP
#define DATAFAIR_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "datafair/errors.hpp"

namespace datafair {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Observations (X, G, Y): real covariates, binary group, binary outcome.
// Immutable after construction; invariants checked once here.
struct Dataset {
  Matrix features;                         // n x d
  std::vector<int> group;                  // in {0,1}
  std::vector<int> outcome;                // in {0,1}
  std::vector<std::string> feature_names;  // d labels

  Dataset() = default;
  Dataset(Matrix x, std::vector<int> g, std::vector<int> y,
          std::vector<std::string> names);

  std::size_t n() const { return group.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(features.cols()); }

  Dataset rows(std::span<const std::size_t> idx) const;
  Dataset select_features(std::span<const std::size_t> cols) const;

  std::size_t count_group(int g) const;
  std::size_t count_positive_group(int g) const;  // rows with Y=1, G=g
};

struct SplitPair {
  Dataset train;
  Dataset eval;
  std::uint64_t seed = 0;
  double ratio = 0.5;
};

enum class MetricId {
  parity,
  prob_parity,
  opportunity,
  prob_opportunity,
  cmi,
  model_metric,
};

const char* metric_name(MetricId id);
MetricId metric_from_name(const std::string& name);

struct EstimateResult {
  double point = 0.0;
  Vector eif_values;       // one per eval observation
  double std_err = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double level = 0.95;
  MetricId metric = MetricId::parity;
  std::size_t n_eval = 0;
  std::vector<std::string> warnings;
};

}  // namespace datafair

#endif
