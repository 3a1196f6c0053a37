#ifndef DATAFAIR_LEARNERS_HPP
#define DATAFAIR_LEARNERS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "datafair/types.hpp"

namespace datafair {

enum class Algorithm { constant, logistic, gbt, cv_select };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct LearnerConfig {
  Algorithm algorithm = Algorithm::logistic;

  // gbt
  double learning_rate = 0.1;
  int tree_depth = 3;
  int tree_count = 200;
  double subsample = 1.0;

  // logistic
  double ridge = 1e-6;

  // cv_select
  int cv_folds = 5;
  std::vector<LearnerConfig> candidates;  // empty -> {constant, logistic, gbt}

  bool calibrate = false;
  std::uint64_t seed = 0;

  void validate() const;  // throws Error on out-of-range hyperparameters

  static LearnerConfig make(Algorithm a) {
    LearnerConfig c;
    c.algorithm = a;
    return c;
  }
};

struct ModelInfo {
  std::string algorithm;
  std::string hyperparameters;
  std::uint64_t seed = 0;
  bool calibrated = false;
  std::vector<std::string> warnings;
};

// Fitted conditional probability model. Outputs live on the simplex
// (floored at kProbFloor and renormalized) and are deterministic.
class ProbabilityModel {
 public:
  static constexpr double kProbFloor = 1e-6;

  virtual ~ProbabilityModel() = default;

  virtual int num_classes() const = 0;

  // probability vector over classes for one covariate row
  Vector predict(const Eigen::Ref<const Vector>& x) const;

  // n x num_classes matrix of probabilities
  Matrix predict_all(const Matrix& x) const;

  // convenience for binary models: P(class 1 | x)
  double predict_positive(const Eigen::Ref<const Vector>& x) const;

  const ModelInfo& info() const { return info_; }
  ModelInfo& mutable_info() { return info_; }

 protected:
  virtual Vector predict_raw(const Eigen::Ref<const Vector>& x) const = 0;

  ModelInfo info_;
};

using ModelPtr = std::shared_ptr<const ProbabilityModel>;

// joint label convention for the 4-class (Y,G) model
inline int joint_label(int y, int g) { return 2 * y + g; }
inline double joint_prob_y1(const Vector& p) { return p[2] + p[3]; }
inline double joint_prob_g1(const Vector& p) { return p[1] + p[3]; }

// model whose output is a fixed function of x; used to inject known
// nuisances (tests, oracle studies)
ModelPtr fixed_function_model(std::function<double(const Eigen::Ref<const Vector>&)> p_positive,
                              std::string label = "fixed");

// Generic K-class fit; labels in 0..n_classes-1. Binary and joint fits
// below are thin wrappers.
ModelPtr fit_classifier(const Matrix& x, const std::vector<int>& labels,
                        int n_classes, const LearnerConfig& config);

ModelPtr fit_binary(const Matrix& x, const std::vector<int>& labels,
                    const LearnerConfig& config);

// 4-class classifier over (y,g); warns (does not fail) when a joint cell
// is empty in the training data
ModelPtr fit_joint(const Matrix& x, const std::vector<int>& y,
                   const std::vector<int>& g, const LearnerConfig& config);

// per-class isotonic calibration against a disjoint holdout (>= 50 rows)
ModelPtr calibrate(const ModelPtr& model, const Matrix& x_holdout,
                   const std::vector<int>& labels_holdout);

// discrete super learner: lowest K-fold CV log-loss, ties by candidate
// order, refit on all data; a candidate failing any fold is disqualified
ModelPtr cv_select(const Matrix& x, const std::vector<int>& labels,
                   int n_classes, const std::vector<LearnerConfig>& candidates,
                   int folds, std::uint64_t seed);

// mean negative log-likelihood under the model
double log_loss(const ProbabilityModel& model, const Matrix& x,
                const std::vector<int>& labels);

// 10-bin expected calibration error of the positive class
double expected_calibration_error(const ProbabilityModel& model,
                                  const Matrix& x,
                                  const std::vector<int>& labels,
                                  int bins = 10);

}  // namespace datafair

#endif
