#ifndef TAVC_SPLITTING_HPP
#define TAVC_SPLITTING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "tavc/ctmc.hpp"
#include "tavc/rng.hpp"
#include "tavc/trajectory.hpp"

namespace tavc {

// Certificate of the one-step minorisation U(x,.) >= alpha nu(.) on the
// small set C, with nu supported in C and equivalent to pi restricted to C.
struct MinorisationCert {
    std::vector<int> small_set;  // sorted state indices
    double alpha = 0.0;
    ProbVector nu;               // length n, zero off C
    std::vector<char> in_c;      // membership mask, length n

    bool contains(int x) const { return in_c[static_cast<std::size_t>(x)] != 0; }
};

// Resolvent split into alpha nu + (1 - alpha) W on C.
struct SplitKernel {
    MinorisationCert cert;
    StochasticMatrix resolvent;   // U
    Eigen::MatrixXd residual;     // |C| x n, rows indexed by position in small_set
    std::vector<int> c_index;     // state -> row of residual, or -1 off C
};

// The enlarged process Z = (Z1, Z2, Z3) sampled on [0, horizon]: Z1 is the
// chain itself, Z2 the uniform marks, Z3 the next resolvent state; both
// marks are constant between sampling times.
struct SplitChainPath {
    JumpPath path;                        // Z1
    std::vector<double> sampling_times;   // T_0 = 0 < T_1 < ... <= horizon
    std::vector<double> marks;            // u_n drawn at T_n
    std::vector<int> resolvent_next;      // Z3 at T_n
    std::vector<std::uint8_t> atom_hit;   // Z1 in C and u_n <= alpha
    double horizon = 0.0;

    std::vector<double> sampling_gaps() const;
};

// Atom-hit times S_n (successive visits of the atom by the sampled chain),
// regeneration epochs R_n (next sampling time after S_n), cycle lengths,
// and (once registered) cycle functionals. Cycle n spans [R_{n-1}, R_n]
// with R_0 = 0; cycle 1 starts from the arbitrary initial point and is
// excluded from stationary statistics. S_{n+1} >= R_n with equality when
// the atom is hit at the epoch itself.
struct RegenerationLog {
    double horizon = 0.0;
    std::vector<double> s_times;     // S_1..S_N
    std::vector<double> r_times;     // R_1..R_N
    std::vector<double> rho;         // rho_n = R_n - R_{n-1}
    std::vector<int> regen_states;   // Z1 at R_n (drawn from nu)
    std::vector<double> xi;          // filled by cycle_functionals

    std::size_t cycles() const { return r_times.size(); }
    std::size_t stationary_cycles() const { return cycles() > 0 ? cycles() - 1 : 0; }
};

// nu proportional to the elementwise row minimum of U over C (maximal alpha
// for this shape); DegenerateSmallSet when alpha leaves (0,1).
MinorisationCert build_minorisation(const CtmcModel& model, std::span<const int> small_set);

// W(x,.) = (U(x,.) - alpha nu) / (1 - alpha) for x in C; NegativeResidual
// if the certificate is violated beyond 1e-12.
SplitKernel residual_kernel(const MinorisationCert& cert, const StochasticMatrix& resolvent_u);

// Inter-sampling time with density p_t(x,xp) e^{-t} / U(x,xp): rejection
// from an Exp(1) proposal, accepted with probability p_t(x,xp).
double sample_sampling_time(TransitionEvaluator& ev, const StochasticMatrix& resolvent_u,
                            int x, int xp, RngStream& rng);

// Chain bridge on [0, t] from x to xp: forward paths accepted on endpoint
// match; RejectionBudgetExceeded after attempt_cap tries.
JumpPath sample_bridge(const CtmcModel& model, int x, int xp, double t, RngStream& rng,
                       std::uint64_t attempt_cap = 1000000);

struct SplitSimulation {
    SplitChainPath chain;
    RegenerationLog log;
};

// Steps I-IV of the split-chain construction on [0, horizon], plus the
// regeneration bookkeeping.
SplitSimulation simulate_split_chain(const CtmcModel& model, const SplitKernel& kernel,
                                     int x0, double horizon, RngStream& rng);

// Exact cycle integrals xi_n = int_{R_{n-1}}^{R_n} f(X_s) ds for all
// recorded cycles (index 0 is the flagged first cycle). Also stored in the
// log. InsufficientCycles below 2 cycles.
std::vector<double> cycle_functionals(RegenerationLog& log, const SplitChainPath& chain,
                                      std::span<const double> f_by_state);

struct RegenerativeEstimates {
    double rho_hat = 0.0;       // mean stationary cycle length
    double mean_hat = 0.0;      // ratio estimate of pi(f)
    double sigma2_xi = 0.0;     // Var(xi~) + 2 Cov(xi~_1, xi~_2), lag-1 corrected
    double sigma2_tavc = 0.0;   // sigma2_xi / rho_hat
    std::size_t cycles_used = 0;
};

// Cycle statistics over stationary cycles. The functionals are centered
// with xi~_n = xi_n - mean * rho_n; by default the ratio estimate
// sum(xi)/sum(rho) is used, or a caller-supplied mean (known_mean).
// Lags >= 2 are excluded by one-dependence rather than estimated.
// InsufficientCycles below 10 stationary cycles.
RegenerativeEstimates regenerative_estimates(const RegenerationLog& log,
                                             double known_mean,
                                             bool use_known_mean);
RegenerativeEstimates regenerative_estimates(const RegenerationLog& log);

struct LagCorrelationReport {
    std::vector<double> correlation; // lags 1..max_lag
    double band = 0.0;               // 99.9% normal band half-width
    bool lags_ge2_within_band = false;
    std::size_t n = 0;
};

// Sample autocorrelations of the cycle functionals with a 99.9% normal
// band; lag 1 is reported without a verdict (may be genuinely nonzero).
// InsufficientCycles below 100 values.
LagCorrelationReport one_dependence_test(std::span<const double> xi, int max_lag = 5);

// Empirical cycle-length moments E R_1^q for q in {1, 2, 4} with standard
// errors: a finiteness diagnostic, not a bound.
struct CycleMomentReport {
    double m1 = 0.0, m2 = 0.0, m4 = 0.0;
    double se1 = 0.0, se2 = 0.0, se4 = 0.0;
    std::size_t n = 0;
};
CycleMomentReport cycle_moment_report(const RegenerationLog& log);

} // namespace tavc

#endif
