#ifndef TAVC_TRAJECTORY_HPP
#define TAVC_TRAJECTORY_HPP

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <vector>

namespace tavc {

// Piecewise-constant path of a finite-state process on [0, horizon].
// Holds tile the interval; consecutive states differ unless fragments were
// concatenated (append merges equal neighbours to restore the invariant).
struct JumpPath {
    struct Hold {
        int state;
        double start;
        double duration;
    };

    std::vector<Hold> holds;
    double horizon = 0.0;

    bool empty() const { return holds.empty(); }
    int state_at(double t) const;
    int end_state() const { return holds.back().state; }

    // Total time spent in each of n states.
    std::vector<double> occupation(int n_states) const;

    // Counts of states sampled at times t0, t0+h, t0+2h, ... <= horizon.
    std::vector<double> sampled_counts(int n_states, double h, double t0 = 0.0) const;

    // Append a hold, merging with the last one if the state repeats.
    void push(int state, double duration);

    // Append another path (its times are shifted to start at this horizon).
    void append(const JumpPath& tail);

    void validate() const; // tiling and positivity checks, throws std::logic_error
};

// Multivariate polynomial in the position coordinates, stored as a sum of
// monomial terms. Exact segment integrals along linear motion for any
// degree; samplers advertise support up to degree 4.
class PolyFunctional {
public:
    struct Term {
        double coef;
        std::vector<int> powers; // one exponent per coordinate
    };

    PolyFunctional() = default;
    explicit PolyFunctional(std::vector<Term> terms);

    static PolyFunctional constant(double c, int dim);
    static PolyFunctional coordinate(int i, int dim, int power = 1, double coef = 1.0);

    int dim() const { return dim_; }
    int degree() const;
    bool empty() const { return terms_.empty(); }

    double operator()(const Eigen::VectorXd& x) const;

    // \int_0^dt f(x0 + v s) ds, exact.
    double integrate_along(const Eigen::VectorXd& x0, const Eigen::VectorXd& v,
                           double dt) const;

    PolyFunctional shifted(double c) const; // f + c
    PolyFunctional scaled(double c) const;  // c * f

private:
    std::vector<Term> terms_;
    int dim_ = 0;
};

// Scalar diffusion path on a uniform grid: values at 0, delta, ..., m*delta.
struct GridPath {
    double delta = 0.0;
    std::vector<double> values;

    double horizon() const {
        return values.empty() ? 0.0 : delta * static_cast<double>(values.size() - 1);
    }
    std::size_t steps() const { return values.empty() ? 0 : values.size() - 1; }
};

// Exact additive-functional integrals over [a, b] of f(X_s) ds.
double integrate_functional(const JumpPath& path, std::span<const double> f_by_state,
                            double a, double b);

// Trapezoidal on the grid (documented approximation for diffusion output).
double integrate_functional(const GridPath& path, const std::function<double(double)>& f,
                            double a, double b);

// Cumulative integral F(t) = \int_0^t f(X_s) ds evaluated at the path's
// breakpoints, with linear interpolation in between. For jump paths the
// interpolation is exact; for others it is exact at breakpoints.
struct CumulativeFunctional {
    std::vector<double> t; // sorted, t.front() == 0, t.back() == horizon
    std::vector<double> F; // F[i] = integral up to t[i]

    double horizon() const { return t.empty() ? 0.0 : t.back(); }
    double value(double s) const;

    static CumulativeFunctional from_jump(const JumpPath& path,
                                          std::span<const double> f_by_state,
                                          double center = 0.0);
    static CumulativeFunctional from_grid(const GridPath& path,
                                          const std::function<double(double)>& f,
                                          double center = 0.0);
};

// A trajectory bound to a functional: the uniform interface the estimators
// consume. Integrals are exact whenever the underlying pair supports it.
struct BoundFunctional {
    double horizon = 0.0;
    std::function<double(double, double)> integrate; // \int_a^b f(X_s) ds
};

BoundFunctional bind_functional(const JumpPath& path, std::vector<double> f_by_state);
BoundFunctional bind_functional(const GridPath& path, std::function<double(double)> f);

} // namespace tavc

#endif
