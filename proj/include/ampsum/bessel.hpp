// J-Bessel of complex order: ascending series, large-argument (Stokes)
// asymptotics, and the uniform imaginary-order form with exp(pi*gamma)
// scaling; plus Y0 and the trace-formula kernel B_{2 i t}.
#pragma once

#include "ampsum/common.hpp"

namespace ampsum {

enum class BesselRegime { series, large_argument, imaginary_order };

struct BesselValue {
    cplx value;
    double err_estimate;
    BesselRegime regime;
};

// J_nu(x), x > 0, complex nu.  Regime chosen by (|nu|, x); RegimeGap when no
// regime claims the point at the requested relative tolerance.
BesselValue bessel_J(cplx nu, double x, double rel_tol = 1e-9);

// forced-regime evaluations (for overlap checks)
cplx bessel_J_series(cplx nu, double x);
cplx bessel_J_asymptotic(cplx nu, double x, double* err = nullptr);

// e^{-pi gamma} J_{2 i gamma}(x): scaled so it is representable for large
// gamma; series evaluation with log-space terms
cplx bessel_J_imag_scaled_series(double gamma, double x);
// leading uniform asymptotic with two correction terms, same scaling
cplx bessel_J_imag_scaled_asymptotic(double gamma, double x);

double bessel_Y0(double x);
double bessel_J0(double x);

// B_{2 i t}(x) = (J_{-2 i t}(x) - J_{2 i t}(x)) / (2 sin(pi i t)); real for
// real t, continuous limit -Y_0(x) at t = 0
double kuznetsov_kernel_B(double t, double x);

// H^(1)_w(x) = J_w(x) + i Y_w(x) for complex w (w not an even integer pinch);
// used by the closed form of the oscillatory pair integral
cplx hankel1(cplx w, double x);

}  // namespace ampsum
