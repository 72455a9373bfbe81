#ifndef TAVC_STATS_HPP
#define TAVC_STATS_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tavc::stats {

double mean(std::span<const double> x);
double variance(std::span<const double> x);  // unbiased, n-1 denominator
double autocovariance(std::span<const double> x, std::size_t lag);
std::vector<double> autocorrelations(std::span<const double> x, std::size_t max_lag);

double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);

// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);
double chi_square_cdf(double x, double df);

struct KsResult {
    double statistic = 0.0; // sup |F_n - F|
    double p_value = 1.0;   // asymptotic, finite-n corrected
    std::size_t n = 0;
};

// One-sample KS against a continuous CDF. Samples need not be sorted.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

struct ChiSquareResult {
    double statistic = 0.0;
    double df = 0.0;
    double p_value = 1.0;
};

// Goodness of fit of observed counts against cell probabilities.
ChiSquareResult chi_square_test(std::span<const double> counts,
                                std::span<const double> probs);

// Homogeneity of two count vectors over the same cells.
ChiSquareResult chi_square_two_sample(std::span<const double> counts_a,
                                      std::span<const double> counts_b);

// Serial-independence chi-square on the transition contingency table of a
// categorical sequence (consecutive pairs), df = (k-1)^2.
ChiSquareResult chi_square_serial_independence(std::span<const int> seq, int n_categories);

} // namespace tavc::stats

#endif
