#ifndef TAVC_QUADRATURE_HPP
#define TAVC_QUADRATURE_HPP

#include <functional>
#include <utility>
#include <vector>

namespace tavc::quad {

// Adaptive Simpson on [a, b]. Tolerance is relative to the accumulated
// integral magnitude (with an absolute floor). Throws QuadratureFailure
// when the recursion depth is exhausted before the tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-10, int max_depth = 60,
                        double abs_floor = 1e-300);

// Semi-infinite integral of f(t) * e^{-t} over [0, inf) via the substitution
// u = e^{-t}, then adaptive Simpson on (0, 1].
double exp_weighted_integral(const std::function<double(double)>& f,
                             double rel_tol = 1e-10);

// Gauss-Laguerre nodes and weights for \int_0^inf f(t) e^{-t} dt.
struct GaussLaguerre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLaguerre gauss_laguerre(int n);

} // namespace tavc::quad

#endif
