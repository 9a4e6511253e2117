// Real/complex-analytic components: Mellin transforms, the Mellin-Barnes
// separation, gamma-ratio decay, the oscillatory pair integral and its
// Bessel closed form, the D-factor double integral, the trace-formula
// transform h(V, lambda), the oscillatory I-integral with its decay audits,
// and twisted Poisson summation.
#pragma once

#include <functional>

#include "ampsum/bessel.hpp"
#include "ampsum/common.hpp"
#include "ampsum/quadrature.hpp"
#include "ampsum/testfunc.hpp"

namespace ampsum::arch {

// Mellin transform int_0^inf f(x) x^{s-1} dx of a compactly supported f
cplx mellin(const TestFunction& f, cplx s, const QuadratureSpec& spec = {});

struct MellinBarnesReport {
    cplx direct;        // 1/(1+x)^s
    cplx contour;       // (1/2 pi i) int Gamma(w)Gamma(s-w)/Gamma(s) x^{-w} dw
    double residual;
};

// ContourOutOfStrip unless 0 < c < Re(s)
MellinBarnesReport mellin_barnes_check(double x, cplx s, double c,
                                       const QuadratureSpec& spec = {});

struct GammaRatioSample {
    double t;            // alpha = 1/2 + i t
    double ratio;        // |Gamma(alpha) Gamma(s2 - alpha) / Gamma(s2)|
    double bound;        // |1 + t2 (1 - t/t2)|^{-1/2}
    double quotient;     // ratio / bound
};

std::vector<GammaRatioSample> gamma_ratio_decay(double alpha_re, cplx s2,
                                                const std::vector<double>& t_samples);

// ---- the oscillatory pair integral --------------------------------------------

// closed form of int_0^inf e(A/h + B h) h^{w-1} dh for A, B > 0:
//   (A/B)^{w/2} * i pi e^{i pi w / 2} * H^(1)_w(4 pi sqrt(A B))
cplx pair_integral_closed(double A, double B, cplx w);

struct PairIntegralReport {
    cplx quadrature;     // regularized ladder value
    cplx closed;         // Bessel closed form (A > 0 only)
    double residual;
    double ladder_spread;
    bool closed_form_asserted;  // false for A <= 0 (Degenerate domain)
};

PairIntegralReport bessel_pair_integral(double A, double B, cplx w,
                                        const QuadratureSpec& spec = {});

// ---- D factor -------------------------------------------------------------------

struct DFactorGeometry {
    double d0 = 1.0;   // d-circ
    double k = 1.0;
    double l1 = 1.0;
    double l2 = 1.0;
    double m = 1.0;
    double A(double x, double y) const {
        double rl = std::sqrt(l1 * l2);
        return x * d0 * d0 * k / (rl * y) + y * rl * l1 * l2 / (d0 * d0 * k * k * k * x) - m;
    }
    double B(double x, double y) const {
        return k / (std::sqrt(l1 * l2) * x * y);
    }
};

struct DFactorResult {
    cplx value;
    double err_estimate;
    double min_A, max_A;  // range of A over the support (sign-change visibility)
};

// 2-D quadrature of the V, W weighted pair integral over the supports of
// V(4 pi / x), W(4 pi / y)
DFactorResult d_factor(cplx s1, cplx s2, cplx w, const TestFunction& V,
                       const TestFunction& W, const DFactorGeometry& geom,
                       int nodes = 32);

// ---- trace-formula transform -----------------------------------------------------

enum class SpectralTag { holomorphic, maass };

struct SpectralPoint {
    SpectralTag tag;
    i64 weight = 0;    // holomorphic: even k >= 2
    double t = 0.0;    // maass: real spectral parameter
};

// holomorphic: i^k int V(x) J_{k-1}(x) dx/x ; maass: int V(x) B_{2it}(x) dx/x
cplx kuznetsov_h(const TestFunction& V, const SpectralPoint& lambda,
                 const QuadratureSpec& spec = {});

// ---- I-integral and decay audits ---------------------------------------------------

struct IIntegralParams {
    double d0 = 1.0, m = 1.0, l1 = 1.0, l2 = 1.0, k = 1.0;
    double p = 3.0, q = 5.0;
};

cplx oscillatory_I(double n, double x, double y, const IIntegralParams& par,
                   const TestFunction& F_M, const TestFunction& V,
                   const TestFunction& W, const QuadratureSpec& spec = {});

struct DecayFit {
    std::vector<double> abscissa;   // the dyadic ladder
    std::vector<double> magnitude;
    double exponent;                // OLS slope of -log|value| vs log abscissa
    bool pass(double min_exponent) const { return exponent >= min_exponent; }
};

// |I(n, ...)| over a dyadic ladder in n; the fitted decay exponent
DecayFit i_integral_decay(const std::vector<double>& n_ladder, double x, double y,
                          const IIntegralParams& par, const TestFunction& F_M,
                          const TestFunction& V, const TestFunction& W);

// |int e(-m/h + phases) h^{w-1} dh| over a ladder in m (the h-integral bound)
DecayFit h_integral_m_decay(const std::vector<double>& m_ladder, double x, double y,
                            const DFactorGeometry& geom, cplx w);

// ---- twisted Poisson -----------------------------------------------------------------

struct PoissonReport {
    cplx direct;   // sum_m weight(m mod c) F(m)
    cplx dual;     // (1/c) sum_k what(k) Fhat(k/c)
    double residual;
    i64 dual_terms;
};

PoissonReport poisson_twisted_check(const TestFunction& F, i64 c,
                                    const std::function<cplx(i64)>& weight,
                                    const QuadratureSpec& spec = {});

}  // namespace ampsum::arch
