// Quadrature: Gauss-Legendre panels, adaptive bisection, an independent
// fixed-node rule for cross-checks, vertical-line contour integrals, and the
// smooth-cutoff dyadic-ladder regularization for oscillatory improper
// integrals on (0, inf).
#pragma once

#include <functional>

#include "ampsum/common.hpp"

namespace ampsum {

struct QuadratureSpec {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_depth = 20;
    double contour_height = 200.0;  // cap for vertical-line integrals
};

// nodes/weights for n-point Gauss-Legendre on [-1, 1], cached
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

// adaptive bisection with an embedded GL16/GL32 error estimate
cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               const QuadratureSpec& spec = {});
double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureSpec& spec = {});

// independent fixed-node rule (composite GL of given order on uniform panels)
cplx integrate_fixed(const std::function<cplx(double)>& f, double a, double b,
                     int panels, int order = 16);

// (1/2pi) * integral over t in [-T, T] of f(sigma + i t) dt, with the i dz
// factor left to the caller; integrates the vertical line at Re = sigma.
cplx vertical_line(const std::function<cplx(cplx)>& f, double sigma, double T,
                   const QuadratureSpec& spec = {});

// Regularized integral over (0, inf) of f with oscillatory, conditionally
// convergent tails: smooth cutoffs at eps and H, both pushed along a dyadic
// ladder until the value stabilizes.  Returns the last value; `spread` is
// the change over the final rung (exposes non-convergence).
struct LadderResult {
    cplx value;
    double spread;
    int rungs;
};
LadderResult oscillatory_ladder(const std::function<cplx(double)>& f, double h0,
                                double H0, int max_rungs = 8,
                                const QuadratureSpec& spec = {});

}  // namespace ampsum
