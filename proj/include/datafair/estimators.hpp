#ifndef DATAFAIR_ESTIMATORS_HPP
#define DATAFAIR_ESTIMATORS_HPP

#include "datafair/learners.hpp"
#include "datafair/stats.hpp"
#include "datafair/types.hpp"

namespace datafair {

enum class Metric { parity, opportunity };
enum class Kind { traditional, probabilistic };

// Which estimand, which flavour, and how to fit the plug-in nuisances.
struct MetricSpec {
  Metric metric = Metric::parity;
  Kind kind = Kind::traditional;
  double threshold = 0.5;  // c in the Bayes-optimal rule 1{D(x) >= c}
  double level = 0.95;
  std::uint64_t seed = 0;

  LearnerConfig outcome_learner;  // D(x) = P(Y=1|X=x)
  LearnerConfig group_learner;    // pi(x) = P(G=1|X=x)
  LearnerConfig joint_learner;    // rho_g(x) = P(Y=1,G=g|X=x), via the joint

  MetricId id() const;
};

// Fitted nuisances plus the empirical weights solved on the eval split.
struct NuisanceSet {
  ModelPtr d_model;    // binary, P(Y=1|x)
  ModelPtr pi_model;   // binary, P(G=1|x); probabilistic parity only
  ModelPtr rho_model;  // 4-class joint; probabilistic opportunity only
};

// clip for propensity-type quantities before augmentation terms
constexpr double kPropensityClip = 1e-3;
// floor applied to probabilities before logarithms
constexpr double kLogFloor = 1e-6;

NuisanceSet fit_nuisances(const Dataset& train, const MetricSpec& spec);

EstimateResult estimate_parity(const SplitPair& split, const MetricSpec& spec);
EstimateResult estimate_parity_with(const Dataset& eval,
                                    const NuisanceSet& nuisances,
                                    const MetricSpec& spec);

EstimateResult estimate_opportunity(const SplitPair& split,
                                    const MetricSpec& spec);
EstimateResult estimate_opportunity_with(const Dataset& eval,
                                         const NuisanceSet& nuisances,
                                         const MetricSpec& spec);

enum class CmiMode { single, separate };

struct CmiConfig {
  CmiMode mode = CmiMode::single;
  LearnerConfig learner;        // used for the joint and any marginal fits
  bool calibrate = true;        // isotonic, on a slice held out of train
  double calib_fraction = 0.25;
  double level = 0.95;
  std::uint64_t seed = 0;
};

EstimateResult estimate_cmi_tl(const SplitPair& split, const CmiConfig& config);

// k-nearest-neighbour CMI estimate for continuous X, binary Y and G;
// point estimate only
double estimate_cmi_knn(const Dataset& data, int k);

// Welch t-test between groups on model outputs: thresholded at c for
// Kind::traditional, raw probabilities for Kind::probabilistic.
TTestResult naive_model_ttest(const ProbabilityModel& model,
                              const Dataset& eval, double c,
                              Kind kind = Kind::traditional,
                              double level = 0.95);

// fixed-model fairness estimate (the model-level estimand): group-weighted
// means of 1{m(x) >= c} with its one-step EIF
EstimateResult model_fairness_estimate(const ProbabilityModel& model,
                                       const Dataset& eval, double c,
                                       double level = 0.95);

}  // namespace datafair

#endif
