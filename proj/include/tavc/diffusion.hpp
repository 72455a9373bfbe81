#ifndef TAVC_DIFFUSION_HPP
#define TAVC_DIFFUSION_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tavc/rng.hpp"
#include "tavc/trajectory.hpp"

namespace tavc {

// Scalar time-homogeneous SDE dX = b(X) dt + sigma(X) dW on (lo, hi).
struct SdeModel {
    std::function<double(double)> drift;
    std::function<double(double)> vol;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    double x_ref = 0.0; // base point of the scale integral

    // Ellipticity probe: sigma > 0 on an interior grid.
    void check_elliptic(int probes = 33) const;
};

SdeModel make_ou_model(double theta, double sigma);
SdeModel make_double_well_model(double height = 1.0, double sigma = 1.0);

// Exact OU transition sampling: X_{t+d} | X_t = x ~ N(x e^{-theta d},
// sigma^2 (1 - e^{-2 theta d}) / (2 theta)); no discretisation bias.
GridPath ou_simulate_exact(double theta, double sigma, double x0, double horizon,
                           double delta, RngStream& rng);

// Euler-Maruyama with a blow-up guard.
GridPath euler_maruyama(const SdeModel& model, double x0, double horizon, double delta,
                        RngStream& rng, double blowup_guard = 1e8);

// s(u) = int_{x_ref}^{u} exp[-2 int_{x_ref}^{z} b/sigma^2] dz by nested
// adaptive quadrature at relative tolerance 1e-8.
double scale_function(const SdeModel& model, double u, double rel_tol = 1e-8);

// Derivative of the scale function, exp of the inner integral.
double scale_derivative(const SdeModel& model, double u, double rel_tol = 1e-8);

// Speed density m(u) = (s'(u) sigma^2(u))^{-1}. The derivative form is
// used: it is the one consistent with the stationary density (see README).
double speed_density(const SdeModel& model, double u, double rel_tol = 1e-8);

enum class TailVerdict { DivergesBothTails, InconclusiveLeft, InconclusiveRight,
                         InconclusiveBoth };

// Scale-function probe along a grid spanning both tails. The verdict only
// reports non-decaying marginal growth past the probe thresholds; it never
// claims a limit.
struct RecurrenceReport {
    std::vector<double> u;
    std::vector<double> s;
    TailVerdict verdict = TailVerdict::InconclusiveBoth;
    std::string summary;
};

RecurrenceReport recurrence_check(const SdeModel& model, std::span<const double> probe_grid,
                                  double min_growth_ratio = 0.9);

} // namespace tavc

#endif
