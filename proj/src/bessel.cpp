#include "ampsum/bessel.hpp"

#include <cmath>

#include "ampsum/gammafn.hpp"

namespace ampsum {

namespace {

// Kahan-compensated complex accumulator
struct Comp {
    cplx sum = 0.0, c = 0.0;
    void add(cplx v) {
        cplx y = v - c;
        cplx t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

cplx bessel_J_series(cplx nu, double x) {
    // sum_k (-1)^k (x/2)^{nu+2k} / (k! Gamma(nu+k+1))
    const double lx = std::log(0.5 * x);
    Comp acc;
    double max_mag = 0.0;
    for (int k = 0; k < 400; ++k) {
        cplx lt = (nu + 2.0 * (double)k) * lx - clgamma(cplx(k + 1.0, 0.0)) -
                  clgamma(nu + (double)k + 1.0);
        cplx term = std::exp(lt);
        if (k % 2 == 1) term = -term;
        acc.add(term);
        double m = std::abs(term);
        max_mag = std::max(max_mag, m);
        if (k > 4 && m < 1e-18 * std::max(1.0, std::abs(acc.sum))) break;
    }
    return acc.sum;
}

cplx bessel_J_asymptotic(cplx nu, double x, double* err) {
    // J_nu(x) ~ sqrt(2/(pi x)) [cos(omega) P(nu,x) - sin(omega) Q(nu,x)],
    // omega = x - nu pi/2 - pi/4, with the Stokes series
    //   a_k = prod_{j<=k} (4 nu^2 - (2j-1)^2) / (k! 8^k x^k)
    // truncated at the smallest term.
    cplx mu = 4.0 * nu * nu;
    cplx P = 1.0, Q = 0.0;
    cplx ak = 1.0;
    double smallest = INFINITY;
    for (int k = 1; k <= 40; ++k) {
        ak *= (mu - (double)((2 * k - 1) * (2 * k - 1))) / (8.0 * k * x);
        double m = std::abs(ak);
        if (m > smallest) break;  // divergent tail reached
        smallest = std::min(smallest, m);
        if (k % 2 == 1) {
            Q += (k % 4 == 1) ? ak : -ak;
        } else {
            P += (k % 4 == 2) ? -ak : ak;
        }
        if (m < 1e-18) break;
    }
    if (err) *err = smallest;
    cplx omega = cplx(x, 0.0) - nu * (PI / 2.0) - PI / 4.0;
    return std::sqrt(2.0 / (PI * x)) * (std::cos(omega) * P - std::sin(omega) * Q);
}

cplx bessel_J_imag_scaled_series(double gamma, double x) {
    // e^{-pi gamma} J_{2 i gamma}(x) with every term computed in log space
    const cplx nu(0.0, 2.0 * gamma);
    const double lx = std::log(0.5 * x);
    Comp acc;
    for (int k = 0; k < 400; ++k) {
        cplx lt = (nu + 2.0 * (double)k) * lx - clgamma(cplx(k + 1.0, 0.0)) -
                  clgamma(nu + (double)k + 1.0) - PI * gamma;
        cplx term = std::exp(lt);
        if (k % 2 == 1) term = -term;
        acc.add(term);
        if (k > 4 && std::abs(term) < 1e-18 * std::max(1.0, std::abs(acc.sum))) break;
    }
    return acc.sum;
}

cplx bessel_J_imag_scaled_asymptotic(double gamma, double x) {
    // uniform asymptotic below the turning point, order nu = 2 gamma:
    //   e^{-pi gamma} J_{2 i gamma}(x)
    //     = (2 pi Z)^{-1/2} e^{i(Z - nu asinh(nu/x) - pi/4)}
    //       * {1 + u1(t)/(i nu) + u2(t)/(i nu)^2 + ...},
    // Z = sqrt(x^2 + nu^2), t = nu/Z, u1 = (3t - 5t^3)/24,
    // u2 = (81 t^2 - 462 t^4 + 385 t^6)/1152; exact small-x limit matches
    // 1/|Gamma(1 + 2 i gamma)|.
    double nu = 2.0 * gamma;
    double Z = std::sqrt(x * x + nu * nu);
    double t = nu / Z;
    double u1 = (3.0 * t - 5.0 * t * t * t) / 24.0;
    double t2 = t * t;
    double u2 = (81.0 * t2 - 462.0 * t2 * t2 + 385.0 * t2 * t2 * t2) / 1152.0;
    cplx inu(0.0, nu);
    cplx corr = 1.0 + u1 / inu + u2 / (inu * inu);
    double phase = Z - nu * std::log((nu + Z) / x) - PI / 4.0;
    return std::exp(cplx(0.0, phase)) * corr / std::sqrt(TWO_PI * Z);
}

BesselValue bessel_J(cplx nu, double x, double rel_tol) {
    if (x <= 0.0) throw Error("bessel_J: x must be positive");
    const double anu = std::abs(nu);
    const double anu2 = anu * anu;

    // series region: terms peak near e^x / sqrt(x); keep the peak within
    // double range with headroom for the requested tolerance
    bool series_ok = x <= 34.0 && anu <= 60.0;
    bool asym_ok = x >= std::max(10.0, anu2);
    bool imag_ok = std::abs(nu.real()) < 1e-14 && std::abs(nu.imag()) >= std::max(2.0 * x, 30.0);

    if (series_ok) {
        cplx v = bessel_J_series(nu, x);
        return {v, 1e-13 * std::exp(std::min(x, 34.0)) / std::max(1.0, std::abs(v)),
                BesselRegime::series};
    }
    if (asym_ok) {
        double err;
        cplx v = bessel_J_asymptotic(nu, x, &err);
        return {v, err, BesselRegime::large_argument};
    }
    if (imag_ok) {
        double gamma = nu.imag() / 2.0;
        cplx v = bessel_J_imag_scaled_asymptotic(std::abs(gamma), x);
        if (gamma < 0) v = std::conj(v);
        // value is scaled by e^{-pi |gamma|}; unscale only if representable
        double lg = PI * std::abs(gamma);
        if (lg > 700.0)
            throw RegimeGap("bessel_J: value overflows; use the scaled evaluations");
        return {v * std::exp(lg), 1.0 / std::abs(nu.imag()), BesselRegime::imaginary_order};
    }
    (void)rel_tol;
    throw RegimeGap("bessel_J: no regime claims this (nu, x)");
}

double bessel_J0(double x) { return bessel_J(cplx(0.0, 0.0), x).value.real(); }

double bessel_Y0(double x) {
    if (x <= 0.0) throw Error("bessel_Y0: x must be positive");
    if (x <= 34.0) {
        // Y0 = (2/pi)[(log(x/2) + gamma) J0(x)] + (2/pi) sum_{k>=1} (-1)^{k+1} H_k (x^2/4)^k / (k!)^2
        double j0 = bessel_J0(x);
        double s = 0.0, hk = 0.0, term = 1.0;
        double q = 0.25 * x * x;
        for (int k = 1; k <= 200; ++k) {
            term *= q / (k * (double)k);
            hk += 1.0 / k;
            double t = ((k % 2 == 1) ? 1.0 : -1.0) * hk * term;
            s += t;
            if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(s)) && k > 4) break;
        }
        return (2.0 / PI) * ((std::log(0.5 * x) + EULER_GAMMA) * j0 + s);
    }
    // large argument: Y0 ~ sqrt(2/(pi x)) [sin(omega) P0 + cos(omega) Q0]
    double P = 1.0, Q = 0.0, ak = 1.0, smallest = INFINITY;
    for (int k = 1; k <= 40; ++k) {
        ak *= (0.0 - (double)((2 * k - 1) * (2 * k - 1))) / (8.0 * k * x);
        double m = std::abs(ak);
        if (m > smallest) break;
        smallest = std::min(smallest, m);
        if (k % 2 == 1) {
            Q += (k % 4 == 1) ? ak : -ak;
        } else {
            P += (k % 4 == 2) ? -ak : ak;
        }
    }
    double om = x - PI / 4.0;
    return std::sqrt(2.0 / (PI * x)) * (std::sin(om) * P + std::cos(om) * Q);
}

double kuznetsov_kernel_B(double t, double x) {
    if (std::abs(t) < 1e-8) return -bessel_Y0(x);
    cplx nu(0.0, 2.0 * t);
    cplx jp = bessel_J(nu, x).value;
    // J_{-2it}(x) = conj(J_{2it}(x)) for real t, x > 0
    cplx num = std::conj(jp) - jp;          // -2i Im J
    cplx den(0.0, 2.0 * std::sinh(PI * t));  // 2 sin(pi i t)
    return (num / den).real();
}

cplx hankel1(cplx w, double x) {
    cplx jw = bessel_J(w, x).value;
    if (std::abs(std::sin(PI * w)) < 1e-8) {
        if (std::abs(w) < 1e-10) return cplx(bessel_J0(x), bessel_Y0(x));
        throw PoleHit("hankel1: order too close to a nonzero integer");
    }
    cplx jmw = bessel_J(-w, x).value;
    cplx yw = (jw * std::cos(PI * w) - jmw) / std::sin(PI * w);
    return jw + cplx(0.0, 1.0) * yw;
}

}  // namespace ampsum
