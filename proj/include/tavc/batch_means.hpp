#ifndef TAVC_BATCH_MEANS_HPP
#define TAVC_BATCH_MEANS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tavc/rng.hpp"
#include "tavc/trajectory.hpp"

namespace tavc {

// Batch-length schedule: either ell_T = ceil(T^a) or an explicit table.
// q, delta and lambda_prime parameterize the approximation-rate conditions
// the schedule is validated against.
struct BatchSchedule {
    enum class Rule { Power, Table };

    Rule rule = Rule::Power;
    double exponent = 2.0 / 3.0;                  // a, 0 < a < 1
    std::vector<std::pair<double, double>> table; // (T, ell), exact-match lookup
    double q = 8.0;
    double delta = 2.0;
    double lambda_prime = 0.24;

    double ell(double horizon) const;
};

struct BatchMeansEstimate {
    double ell = 0.0;
    std::size_t k = 0;
    std::vector<double> batch_means;
    double grand_mean = 0.0;
    double sigma2 = 0.0;
};

// Non-overlapping batch means: sigma2 = ell/(k-1) sum (Zbar_i - mean)^2,
// batch integrals exact through the bound stream; the trailing partial
// batch is discarded. TooFewBatches when k < 2.
BatchMeansEstimate batch_means(const BoundFunctional& stream, const BatchSchedule& schedule);
BatchMeansEstimate batch_means_fixed(const BoundFunctional& stream, double ell);

// Overlapping batch means over windows [j stride, j stride + ell]; reduces
// exactly to batch_means when stride == ell.
BatchMeansEstimate overlapping_batch_means(const BoundFunctional& stream, double ell,
                                           double stride);

// psi_T = max{ T^{1/(2q)} log T, T^{1/(2+delta)} log^2 T }.
double psi_rate(double horizon, double q, double delta);

struct ScheduleReport {
    double lambda = 0.0;             // min(delta/(2 delta + 4), lambda')
    double c_min = 0.0;              // batch-count summability needs c > c_min
    bool summability_feasible = false;
    bool ell_increasing = false;
    bool ell_over_horizon_decreasing = false;
    bool k_increasing = false;
    bool consistency_condition_decreasing = false; // psi_T^2 log T / ell trend
    bool clt_condition_decreasing = false;         // ell^{-1} psi_T (T log T)^{1/2} trend
    bool in_consistency_region = false;            // a > 1 - 2 lambda'
    std::vector<double> horizon;
    std::vector<double> ell;
    std::vector<double> k;
    std::vector<double> consistency_condition;
    std::vector<double> clt_condition;
    std::string to_text() const;
};

// Report-only validation of a power-rule schedule over a horizon grid.
ScheduleReport validate_batch_schedule(const BatchSchedule& schedule,
                                       std::span<const double> horizon_grid);

struct MseExperimentResult {
    double empirical_mse = 0.0;
    double mse_ci_lo = 0.0;   // bootstrap 95% CI
    double mse_ci_hi = 0.0;
    double predicted_leading = 0.0; // 2 sigma^4 ell / T
    double ratio = 0.0;
    double mean_estimate = 0.0;     // mean of the sigma2 estimates
    std::size_t reps = 0;
};

// Replicate experiment for the mean squared error of the batch-means
// estimator. replicate_sigma2 runs one replicate on the given stream and
// returns its estimate; replicate r uses RngStream(master_seed,
// stream_base + r). The oracle variance is injected, never estimated here.
MseExperimentResult mse_experiment(const std::function<double(RngStream&)>& replicate_sigma2,
                                   double sigma2_oracle, double ell, double horizon,
                                   std::size_t reps, std::uint64_t master_seed,
                                   std::uint64_t stream_base = 0, int threads = 1);

struct NormalityReport {
    double ks_statistic = 0.0;
    double ks_p_value = 0.0;
    double variance_ratio = 0.0; // empirical variance of standardized values
    double mean_standardized = 0.0;
    std::size_t n = 0;
};

// sqrt(k)(sigma2_hat - sigma2) / sqrt(2 sigma2^2) against N(0,1).
// InsufficientReplicates below 200.
NormalityReport bm_clt_check(std::span<const double> sigma2_estimates, double sigma2,
                             double k_batches);

// Standardized ergodic averages sqrt(T)(mu_hat - mu) / sigma against N(0,1).
NormalityReport clt_normality_check(std::span<const double> scaled_averages, double sigma2);

// Replicates run in a simple deterministic pool: results land by index.
std::vector<double> run_replicates(const std::function<double(RngStream&)>& replicate,
                                   std::size_t reps, std::uint64_t master_seed,
                                   std::uint64_t stream_base = 0, int threads = 1);

} // namespace tavc

#endif
