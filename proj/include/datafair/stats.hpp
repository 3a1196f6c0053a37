#ifndef DATAFAIR_STATS_HPP
#define DATAFAIR_STATS_HPP

#include <span>

#include "datafair/types.hpp"

namespace datafair {

// Phi^{-1}(p), exact to double precision (not the rounded 1.96 at 95%).
double normal_quantile(double p);

double student_t_quantile(double p, double df);

double digamma(double x);

// sample standard deviation, divisor m-1
double sample_sd(const Vector& v);

double mean(std::span<const double> v);
double variance(std::span<const double> v);  // divisor m-1

struct WaldCi {
  double ci_low = 0.0;
  double ci_high = 0.0;
  double std_err = 0.0;
};

// point +- z_{(1+level)/2} * sd(eif)/sqrt(m); throws InsufficientData if m<2
WaldCi wald_interval(double point, const Vector& eif_values, double level);

// fills std_err/ci fields of an EstimateResult from its eif values
void attach_wald(EstimateResult& r, double level);

struct TTestResult {
  double diff = 0.0;
  double std_err = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double df = 0.0;
};

// Welch two-sample t test on raw values
TTestResult welch_ttest(std::span<const double> a, std::span<const double> b,
                        double level);

double spearman_rho(std::span<const double> a, std::span<const double> b);

}  // namespace datafair

#endif
