#ifndef TAVC_FLUCTUATION_HPP
#define TAVC_FLUCTUATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "tavc/rng.hpp"
#include "tavc/trajectory.hpp"

namespace tavc {

// beta_T = (2 a_T [log(T/a_T) + log log T])^{-1/2}; the scaling under which
// the supremum of Brownian increments over windows of length a_T tends to 1.
// DomainError for T <= e; requires 0 < a_T <= T.
double beta_normalizer(double horizon, double a_T);

struct FluctuationStat {
    double a_T = 0.0;
    double beta = 0.0;
    double raw_sup = 0.0;   // sup_{t, u <= a_T} |F(t+u) - F(t)|
    double statistic = 0.0; // beta * raw_sup
    std::size_t grid_points = 0;
};

// Double supremum of windowed increments of the cumulative functional,
// evaluated on the breakpoint set (event times and shifted window edges):
// exact for piecewise-linear F, grid-exact otherwise. O(n) sliding
// max/min over the merged grid. The functional must be centered when F is
// built (supplied mean); WindowTooLarge when a_T > T.
FluctuationStat fluctuation_statistic(const CumulativeFunctional& cumulative, double a_T);

// Max over windows of |F_j - F_i| for an irregular grid; helper shared with
// the Brownian calibration.
double sup_window_increment(std::span<const double> t, std::span<const double> f,
                            double window);

struct BrownianIncrementReport {
    std::vector<double> statistics; // one per path
    double max_statistic = 0.0;
    double min_statistic = 0.0;
    double mean_statistic = 0.0;
    double gap_from_one = 0.0; // |max - 1|
    std::size_t reps = 0;
};

// Discrete-grid Brownian paths; per path the normalized windowed-increment
// supremum, reported against the almost-sure limit 1.
BrownianIncrementReport brownian_increment_check(double horizon, double a_T,
                                                 std::size_t reps, std::uint64_t master_seed,
                                                 double grid_step = 1.0,
                                                 std::uint64_t stream_base = 0);

} // namespace tavc

#endif
