#ifndef TAVC_PDMP_HPP
#define TAVC_PDMP_HPP

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "tavc/rng.hpp"
#include "tavc/trajectory.hpp"

namespace tavc {

enum class PdmpEventKind { Start, Flip, Bounce, Refresh };

struct PdmpState {
    Eigen::VectorXd x;
    Eigen::VectorXd v;
};

// Piecewise-linear trajectory: position x[k] at segment start t[k], constant
// velocity v[k] until t[k+1]. Positions are continuous across events by
// construction; the final segment runs to the horizon.
struct PdmpPath {
    double horizon = 0.0;
    std::vector<double> t;
    std::vector<Eigen::VectorXd> x;
    std::vector<Eigen::VectorXd> v;
    std::vector<PdmpEventKind> kind;
    std::vector<int> flip_index; // flipped coordinate for Flip events, else -1

    int dim() const { return x.empty() ? 0 : static_cast<int>(x.front().size()); }
    std::size_t segments() const { return t.size(); }
    Eigen::VectorXd position_at(double s) const;
    const Eigen::VectorXd& velocity_at(double s) const;

    // Time fraction with v[coord] > 0.
    double velocity_positive_fraction(int coord) const;
};

// rate(s) = (a + b s)_+ along a ray; also used as a dominating envelope.
struct AffineRate {
    double a = 0.0;
    double b = 0.0;
};

// Target pi(dx) ~ e^{-U(x)} dx. Exact event-time inversion is used when the
// target declares its directional rates affine (Gaussian targets); otherwise
// thinning under the declared dominating envelope. Coordinate index i >= 0
// asks for the Zig-Zag rate of coordinate i; i == -1 for the full
// directional (bounce) rate.
struct TargetPotential {
    int dim = 0;
    std::function<double(const Eigen::VectorXd&)> potential;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;
    std::function<AffineRate(const Eigen::VectorXd& x, const Eigen::VectorXd& v, int i)>
        exact_affine_rate; // exact coefficients, or null
    std::function<AffineRate(const Eigen::VectorXd& x, const Eigen::VectorXd& v, int i)>
        rate_bound; // dominating envelope for thinning, or null

    // Finite-difference consistency of grad against potential.
    void check_gradient(RngStream& rng, int probes = 16, double tol = 1e-5) const;
};

TargetPotential make_gaussian_target(Eigen::VectorXd variances);
TargetPotential make_isotropic_gaussian_target(int dim);
// 1-d logistic distribution, U(x) = x/s + 2 log(1 + e^{-x/s}); |U'| <= 1/s.
TargetPotential make_logistic_target(double scale = 1.0);

// Zig-Zag sampler: coordinate i flips at rate (v_i d_i U(x))_+.
PdmpPath zigzag_simulate(const TargetPotential& target, const PdmpState& z0,
                         double horizon, RngStream& rng);

enum class BpsVelocityLaw { UnitSphere, Gaussian };

// Bouncy Particle Sampler: reflection v <- v - 2 (v.g / |g|^2) g at rate
// (v.grad U)_+ plus refreshment at the given rate (required positive). A
// bounce triggered where grad U = 0 is resolved as a refreshment.
PdmpPath bps_simulate(const TargetPotential& target, double refresh_rate,
                      const PdmpState& z0, double horizon, RngStream& rng,
                      BpsVelocityLaw law = BpsVelocityLaw::UnitSphere);

// (1/T) \int_0^T f(X_s) ds, exact for polynomial f.
double ergodic_average(const PdmpPath& path, const PolyFunctional& f);

double integrate_functional(const PdmpPath& path, const PolyFunctional& f,
                            double a, double b);

// Cumulative functional at event breakpoints (exact there); refine > 1
// subdivides segments to tighten the interpolation between breakpoints.
CumulativeFunctional cumulative_from_pdmp(const PdmpPath& path, const PolyFunctional& f,
                                          double center = 0.0, int refine = 1);

BoundFunctional bind_functional(const PdmpPath& path, PolyFunctional f);

} // namespace tavc

#endif
