#ifndef TAVC_CTMC_HPP
#define TAVC_CTMC_HPP

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

#include "tavc/rng.hpp"
#include "tavc/trajectory.hpp"

namespace tavc {

// Probability vector: entries >= 0, sum 1 within 1e-12.
struct ProbVector {
    Eigen::VectorXd p;

    int size() const { return static_cast<int>(p.size()); }
    double operator[](int i) const { return p[i]; }
    void validate(double tol = 1e-12) const;
};

// Row-stochastic matrix.
struct StochasticMatrix {
    Eigen::MatrixXd M;

    int size() const { return static_cast<int>(M.rows()); }
    double operator()(int i, int j) const { return M(i, j); }
    void validate(double tol = 1e-10) const;
};

// Finite-state continuous-time Markov chain given by its generator.
// Construction validates: off-diagonals >= 0 and zero row sums (1e-12),
// and irreducibility of the off-diagonal support graph (SingularSystem).
class CtmcModel {
public:
    explicit CtmcModel(Eigen::MatrixXd generator, std::vector<std::string> labels = {});

    int size() const { return n_; }
    const Eigen::MatrixXd& generator() const { return q_; }
    const std::vector<std::string>& labels() const { return labels_; }
    double max_exit_rate() const { return max_exit_rate_; }
    bool reversible(double tol = 1e-10) const; // detailed balance w.r.t. pi

private:
    int n_;
    Eigen::MatrixXd q_;
    std::vector<std::string> labels_;
    double max_exit_rate_;
};

// Shared uniformization engine: e^{tQ} as a Poisson mixture of powers of
// the uniformized kernel, truncated when the tail mass is below 1e-14.
// Row-stochastic by construction. Not thread-safe (power cache grows
// lazily); use one evaluator per thread.
class TransitionEvaluator {
public:
    explicit TransitionEvaluator(const CtmcModel& model);

    double prob(double t, int x, int y);       // P_t(x, y)
    Eigen::MatrixXd matrix(double t);          // full P_t

private:
    void ensure_powers(int k);
    // weights[k] = e^{-lam} lam^k / k!, truncated; returns count
    int poisson_weights(double lam, std::vector<double>& w) const;

    double lambda_;
    Eigen::MatrixXd kernel_; // I + Q / lambda
    std::vector<Eigen::MatrixXd> powers_;
    std::vector<double> wbuf_;
};

// TV-distance profile: psi(t_j) = max_x (1/2) sum_y |P_t(x,y) - pi_y|.
// Factor-1/2 convention, documented.
struct ErgodicityProfile {
    std::vector<double> t;
    std::vector<double> psi_hat;
};

// pi Q = 0, sum pi = 1; residual ||pi Q||_inf <= 1e-10 or SingularSystem.
ProbVector stationary_distribution(const CtmcModel& model);

// P_t by uniformization, t >= 0.
StochasticMatrix transition_matrix(const CtmcModel& model, double t);

// Resolvent U = (I - Q)^{-1}: the kernel of the chain observed at
// independent Exp(1) times.
StochasticMatrix resolvent(const CtmcModel& model);

// Time-average variance constant of f: 2 <f_bar, f_hat>_pi where -Q f_hat =
// f_bar, pi(f_hat) = 0. SingularSystem if the Poisson equation fails.
double asymptotic_variance_exact(const CtmcModel& model, std::span<const double> f);

// alpha(s) = sup_{A,B} |P_pi(X_0 in A, X_s in B) - pi(A) pi(B)| by subset
// enumeration; TooManyStates for n > 12.
double alpha_mixing_exact(const CtmcModel& model, double s);

// |cov| <= 8 alpha^{1/r} normp normq with 1/p + 1/q + 1/r = 1.
// InvalidExponents when 1/p + 1/q >= 1.
bool davydov_bound_check(double cov, double alpha, double normp, double normq,
                         double p, double q);

ErgodicityProfile tv_ergodicity_profile(const CtmcModel& model,
                                        std::span<const double> grid);

// Gillespie path on [0, T].
JumpPath simulate_ctmc(const CtmcModel& model, int x0, double horizon, RngStream& rng);

} // namespace tavc

#endif
