#ifndef DATAFAIR_DGP_HPP
#define DATAFAIR_DGP_HPP

#include <cstdint>
#include <optional>

#include "datafair/estimators.hpp"
#include "datafair/types.hpp"

namespace datafair {

enum class DgpId { setting1, setting2, setting3, cmi_sim, discrete_custom };

const char* dgp_name(DgpId id);
DgpId dgp_from_name(const std::string& name);

// Finite joint distribution over (x-index, g, y); the enumeration oracle
// works on this directly and discrete_custom samples from it.
struct DiscreteCells {
  int n_x = 0;
  std::vector<double> probs;  // indexed cell(x,g,y), sums to 1

  double& at(int x, int g, int y) { return probs[4 * x + 2 * g + y]; }
  double at(int x, int g, int y) const { return probs[4 * x + 2 * g + y]; }

  void validate() const;  // InvalidDistribution on bad support / sum

  // the two-point DGP used throughout the tests:
  // P(X=1|G=1)=0.7, P(X=1|G=0)=0.3, P(Y=1|X=0)=0.2, P(Y=1|X=1)=0.8, P(G=1)=0.5
  static DiscreteCells two_point();
};

struct DgpSpec {
  DgpId id = DgpId::setting1;
  double cmi_c = 0.0;              // mixture weight c >= 0 (cmi_sim)
  Vector cmi_beta;                 // default all-ones(3) when empty
  std::optional<DiscreteCells> cells;  // discrete_custom

  void validate() const;
};

Dataset generate(const DgpSpec& spec, std::size_t n, std::uint64_t seed);

// true conditional probabilities of the generating law, for oracle studies
double true_outcome_probability(const DgpSpec& spec,
                                const Eigen::Ref<const Vector>& x);
double true_group_probability(const DgpSpec& spec,
                              const Eigen::Ref<const Vector>& x);

struct McEstimate {
  double value = 0.0;
  double std_err = 0.0;  // Monte Carlo standard error (batch means)
};

// Ground-truth fairness estimand from the known generating law.
McEstimate mc_truth_fairness(const DgpSpec& spec, Metric metric, Kind kind,
                             double threshold, std::size_t n_mc,
                             std::uint64_t seed);

// Ground-truth association value for cmi_sim: plug-in mutual information of
// the binarized (Y, G) pair over a Monte Carlo sample. This reproduces the
// reference table for the c grid; the conditional-on-X functional targeted
// by the TL estimator is smaller at low c.
McEstimate mc_truth_cmi(const DgpSpec& spec, std::size_t n_mc,
                        std::uint64_t seed);

// Exact estimand by enumeration over a finite-support joint law.
double brute_force_estimand(const DiscreteCells& cells, MetricId metric,
                            double threshold = 0.5);

}  // namespace datafair

#endif
