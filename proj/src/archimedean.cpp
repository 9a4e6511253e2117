#include "ampsum/archimedean.hpp"

#include <algorithm>
#include <cmath>

#include "ampsum/gammafn.hpp"

namespace ampsum::arch {

cplx mellin(const TestFunction& f, cplx s, const QuadratureSpec& spec) {
    return integrate(
        [&](double x) { return f(x) * std::exp((s - 1.0) * std::log(x)); },
        f.support_lo(), f.support_hi(), spec);
}

MellinBarnesReport mellin_barnes_check(double x, cplx s, double c,
                                       const QuadratureSpec& spec) {
    if (c <= 0.0 || c >= s.real())
        throw ContourOutOfStrip("mellin_barnes_check: need 0 < c < Re(s)");
    MellinBarnesReport rep;
    rep.direct = std::exp(-s * std::log1p(x));
    double T = std::min(spec.contour_height, 55.0 + 2.0 * std::abs(s.imag()));
    cplx gs = clgamma(s);
    rep.contour = vertical_line(
        [&](cplx w) {
            return std::exp(clgamma(w) + clgamma(s - w) - gs - w * std::log(x));
        },
        c, T, spec);
    rep.residual = std::abs(rep.direct - rep.contour);
    return rep;
}

std::vector<GammaRatioSample> gamma_ratio_decay(double alpha_re, cplx s2,
                                                const std::vector<double>& t_samples) {
    std::vector<GammaRatioSample> out;
    double t2 = s2.imag();
    for (double t : t_samples) {
        cplx alpha(alpha_re, t);
        cplx num = clgamma(alpha) + clgamma(s2 - alpha) - clgamma(s2);
        GammaRatioSample s;
        s.t = t;
        s.ratio = std::exp(num.real());
        double denom = std::abs(1.0 + t2 * (1.0 - (t2 == 0.0 ? 0.0 : t / t2)));
        s.bound = denom <= 0.0 ? INFINITY : 1.0 / std::sqrt(denom);
        s.quotient = s.ratio / s.bound;
        out.push_back(s);
    }
    return out;
}

// ---- pair integral ---------------------------------------------------------------

cplx pair_integral_closed(double A, double B, cplx w) {
    if (A <= 0.0 || B <= 0.0)
        throw Degenerate("pair_integral_closed: needs A, B > 0");
    double arg = 4.0 * PI * std::sqrt(A * B);
    cplx pw = std::exp(0.5 * w * std::log(A / B));
    cplx rot = std::exp(cplx(0.0, 0.5 * PI) * w);
    return pw * cplx(0.0, PI) * rot * hankel1(w, arg);
}

namespace {

cplx pair_integrand(double A, double B, cplx w, double h) {
    double phase = A / h + B * h;
    return ec(phase) * std::exp((w - 1.0) * std::log(h));
}

}  // namespace

PairIntegralReport bessel_pair_integral(double A, double B, cplx w,
                                        const QuadratureSpec& spec) {
    if (B <= 0.0) throw Error("bessel_pair_integral: B must be positive");
    if (std::abs(w.real()) >= 1.0)
        throw Divergent("bessel_pair_integral: need |Re w| < 1");
    PairIntegralReport rep;
    double hstar = std::sqrt(std::abs(A) / B);
    if (hstar == 0.0) hstar = 1.0 / B;
    QuadratureSpec qs = spec;
    qs.abs_tol = std::min(spec.abs_tol, 1e-9);
    auto lr = oscillatory_ladder([&](double h) { return pair_integrand(A, B, w, h); },
                                 hstar / 16.0, hstar * 16.0, 8, qs);
    rep.quadrature = lr.value;
    rep.ladder_spread = lr.spread;
    rep.closed_form_asserted = A > 0.0;
    if (rep.closed_form_asserted) {
        rep.closed = pair_integral_closed(A, B, w);
        rep.residual = std::abs(rep.quadrature - rep.closed);
    } else {
        rep.closed = 0.0;
        rep.residual = std::nan("");
    }
    return rep;
}

// ---- D factor --------------------------------------------------------------------

namespace {

// the h-integral value used inside D: closed form for A > 0, exponentially
// small K-type regime for A < 0 (ladder when it still matters)
cplx h_integral_value(double A, double B, cplx w, const QuadratureSpec& spec) {
    if (A > 0.0) return pair_integral_closed(A, B, w);
    double decay = 4.0 * PI * std::sqrt(std::abs(A) * B);
    if (A < 0.0 && decay > 32.0) return 0.0;  // |value| < e^{-32}
    double hstar = std::sqrt(std::max(std::abs(A), 1e-8) / B);
    auto lr = oscillatory_ladder([&](double h) { return pair_integrand(A, B, w, h); },
                                 hstar / 16.0, hstar * 16.0, 7, spec);
    return lr.value;
}

}  // namespace

DFactorResult d_factor(cplx s1, cplx s2, cplx w, const TestFunction& V,
                       const TestFunction& W, const DFactorGeometry& geom,
                       int nodes) {
    // V(4 pi / x) is supported on x in [4 pi/(c+w), 4 pi/(c-w)]
    double ax = 4.0 * PI / V.support_hi(), bx = 4.0 * PI / V.support_lo();
    double ay = 4.0 * PI / W.support_hi(), by = 4.0 * PI / W.support_lo();
    const auto& [gx, gw] = gauss_legendre(nodes);

    QuadratureSpec inner;
    inner.abs_tol = 1e-9;
    inner.rel_tol = 1e-9;
    inner.max_depth = 16;

    DFactorResult out;
    out.min_A = INFINITY;
    out.max_A = -INFINITY;
    cplx acc = 0.0;
    double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    for (int i = 0; i < nodes; ++i) {
        double x = mx + hx * gx[i];
        double vx = V(4.0 * PI / x);
        if (vx == 0.0) continue;
        cplx xpow = std::exp((s1 - 1.0) * std::log(x));
        for (int j = 0; j < nodes; ++j) {
            double y = my + hy * gx[j];
            double wy = W(4.0 * PI / y);
            if (wy == 0.0) continue;
            double A = geom.A(x, y), B = geom.B(x, y);
            out.min_A = std::min(out.min_A, A);
            out.max_A = std::max(out.max_A, A);
            cplx hval = h_integral_value(A, B, w, inner);
            cplx ypow = std::exp((s2 - 1.0) * std::log(y));
            acc += gw[i] * gw[j] * vx * wy * hval * xpow * ypow;
        }
    }
    out.value = acc * hx * hy;
    out.err_estimate = 1e-7 * (1.0 + std::abs(out.value));
    return out;
}

// ---- trace-formula transform --------------------------------------------------------

cplx kuznetsov_h(const TestFunction& V, const SpectralPoint& lambda,
                 const QuadratureSpec& spec) {
    if (lambda.tag == SpectralTag::holomorphic) {
        if (lambda.weight < 2 || lambda.weight % 2 != 0)
            throw BadSpectralTag("kuznetsov_h: holomorphic weight must be even and >= 2");
        cplx nu((double)(lambda.weight - 1), 0.0);
        cplx ik = std::pow(cplx(0.0, 1.0), (double)(lambda.weight % 4));
        return ik * integrate(
                        [&](double x) { return V(x) * bessel_J(nu, x).value / x; },
                        V.support_lo(), V.support_hi(), spec);
    }
    if (lambda.tag == SpectralTag::maass) {
        double t = lambda.t;
        return integrate(
            [&](double x) { return cplx(V(x) * kuznetsov_kernel_B(t, x) / x, 0.0); },
            V.support_lo(), V.support_hi(), spec);
    }
    throw BadSpectralTag("kuznetsov_h: unknown tag");
}

// ---- I-integral ------------------------------------------------------------------------

cplx oscillatory_I(double n, double x, double y, const IIntegralParams& par,
                   const TestFunction& F_M, const TestFunction& V,
                   const TestFunction& W, const QuadratureSpec& spec) {
    double pq = par.p * par.q;
    double la = par.d0 * par.m / pq;
    double lb = par.l1 * par.l2 * par.m / (par.d0 * par.k * par.k * pq);
    return integrate(
        [&](double t) -> cplx {
            if (t <= 0.0) return 0.0;
            double f = F_M(t);
            if (f == 0.0) return 0.0;
            double v = V(4.0 * PI * std::sqrt(t * la) / x);
            double wv = W(4.0 * PI * std::sqrt(t * lb) / y);
            if (v == 0.0 || wv == 0.0) return 0.0;
            return ec(t * n / (x * y)) * f * v * wv / std::sqrt(t);
        },
        F_M.support_lo(), F_M.support_hi(), spec);
}

namespace {

DecayFit fit_decay(const std::vector<double>& xs, const std::vector<double>& mags) {
    DecayFit fit;
    fit.abscissa = xs;
    fit.magnitude = mags;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (mags[i] <= 0.0 || !std::isfinite(mags[i])) continue;
        double X = std::log(xs[i]), Y = -std::log(mags[i]);
        sx += X; sy += Y; sxx += X * X; sxy += X * Y;
        ++n;
    }
    fit.exponent = n >= 2 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    return fit;
}

}  // namespace

DecayFit i_integral_decay(const std::vector<double>& n_ladder, double x, double y,
                          const IIntegralParams& par, const TestFunction& F_M,
                          const TestFunction& V, const TestFunction& W) {
    std::vector<double> mags;
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-13;
    for (double n : n_ladder)
        mags.push_back(std::abs(oscillatory_I(n, x, y, par, F_M, V, W, spec)));
    return fit_decay(n_ladder, mags);
}

DecayFit h_integral_m_decay(const std::vector<double>& m_ladder, double x, double y,
                            const DFactorGeometry& geom, cplx w) {
    std::vector<double> mags;
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-10;
    for (double m : m_ladder) {
        DFactorGeometry g = geom;
        g.m = m;
        double A = g.A(x, y), B = g.B(x, y);
        double hstar = std::sqrt(std::max(std::abs(A), 1e-8) / B);
        auto lr = oscillatory_ladder(
            [&](double h) { return pair_integrand(A, B, w, h); }, hstar / 16.0,
            hstar * 16.0, 8, spec);
        mags.push_back(std::abs(lr.value));
    }
    return fit_decay(m_ladder, mags);
}

// ---- twisted Poisson ----------------------------------------------------------------------

PoissonReport poisson_twisted_check(const TestFunction& F, i64 c,
                                    const std::function<cplx(i64)>& weight,
                                    const QuadratureSpec& spec) {
    if (c <= 0) throw Error("poisson_twisted_check: c must be positive");
    PoissonReport rep;

    // direct side over the support of F
    cplx direct = 0.0;
    i64 lo = (i64)std::floor(F.support_lo()) - 1;
    i64 hi = (i64)std::ceil(F.support_hi()) + 1;
    for (i64 m = lo; m <= hi; ++m) {
        double f = F((double)m);
        if (f == 0.0) continue;
        direct += weight(imod(m, c)) * f;
    }
    rep.direct = direct;

    // dual side: what(k) = sum_a w(a) e(a k / c); Fhat by quadrature
    std::vector<cplx> what((size_t)c);
    for (i64 k = 0; k < c; ++k) {
        cplx s = 0.0;
        for (i64 a = 0; a < c; ++a) s += weight(a) * unit_phase(a * k, c);
        what[(size_t)k] = s;
    }
    auto Fhat = [&](double xi) {
        return integrate(
            [&](double x) { return F(x) * ec(-xi * x); }, F.support_lo(),
            F.support_hi(), spec);
    };
    cplx dual = 0.0;
    rep.dual_terms = 0;
    int quiet = 0;
    for (i64 k = 0;; ++k) {
        bool contributed = false;
        for (int sgn : {+1, -1}) {
            if (k == 0 && sgn < 0) continue;
            i64 kk = sgn * k;
            cplx wk = what[(size_t)imod(kk, c)];
            if (std::abs(wk) < 1e-17) continue;
            cplx fh = Fhat((double)kk / (double)c);
            dual += wk * fh;
            ++rep.dual_terms;
            if (std::abs(wk * fh) > 1e-14) contributed = true;
        }
        if (contributed) quiet = 0;
        else ++quiet;
        if (quiet >= (i64)(3 * c) || k > 500 * c) break;
    }
    rep.dual = dual / (double)c;
    rep.residual = std::abs(rep.direct - rep.dual);
    return rep;
}

}  // namespace ampsum::arch
