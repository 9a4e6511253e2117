#include "ampsum/gammafn.hpp"

#include <cmath>

namespace ampsum {

namespace {

// Lanczos, g = 7, n = 9
constexpr double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lanczos_sum(cplx z) {
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + (double)(i - 1));
    return x;
}

constexpr double kBern[] = {
    // B_2, B_4, ..., B_28
    1.0 / 6,      -1.0 / 30,     1.0 / 42,      -1.0 / 30,   5.0 / 66,
    -691.0 / 2730, 7.0 / 6,      -3617.0 / 510, 43867.0 / 798, -174611.0 / 330,
    854513.0 / 138, -236364091.0 / 2730, 8553103.0 / 6, -23749461029.0 / 870};

}  // namespace

cplx cgamma(cplx z) {
    if (z.real() < 0.5) {
        // reflection
        return PI / (std::sin(PI * z) * cgamma(1.0 - z));
    }
    z -= 1.0;
    cplx x = lanczos_sum(z);
    cplx t = z + 7.5;
    return std::sqrt(TWO_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

cplx clgamma(cplx z) {
    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z); branch is the
        // principal one of each factor, adequate for the strips used here
        return std::log(PI / std::sin(PI * z)) - clgamma(1.0 - z);
    }
    cplx zm = z - 1.0;
    cplx x = lanczos_sum(zm);
    cplx t = zm + 7.5;
    return 0.5 * std::log(TWO_PI) + (zm + 0.5) * std::log(t) - t + std::log(x);
}

cplx hurwitz_zeta(cplx s, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0) throw Error("hurwitz_zeta: need 0 < alpha <= 1");
    if (s == cplx(1.0, 0.0)) throw PoleAt1("hurwitz_zeta: s = 1");
    // Euler-Maclaurin: sum_{k<N} (k+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
    //                  + sum_j B_2j/(2j)! * (s)_{2j-1} * (N+a)^{-s-2j+1}
    int N = (int)std::max(18.0, 1.4 * std::abs(s.imag()) + 18.0);
    cplx acc = 0.0;
    for (int k = 0; k < N; ++k) acc += std::exp(-s * std::log((double)k + alpha));
    double Na = N + alpha;
    cplx lg = std::log(Na);
    acc += std::exp((1.0 - s) * lg) / (s - 1.0);
    acc += 0.5 * std::exp(-s * lg);
    cplx poch = s;                 // (s)_1
    double fact = 2.0;             // (2j)!
    cplx napow = std::exp((-s - 1.0) * lg);
    for (int j = 1; j <= 14; ++j) {
        acc += kBern[j - 1] / fact * poch * napow;
        // update (s)_{2j-1} -> (s)_{2j+1}, (2j)! -> (2j+2)!, power -> -s-2j-1
        poch *= (s + (double)(2 * j - 1)) * (s + (double)(2 * j));
        fact *= (2 * j + 1) * (2 * j + 2);
        napow *= std::exp(-2.0 * lg);
    }
    return acc;
}

cplx zeta(cplx s) {
    if (s == cplx(1.0, 0.0)) throw PoleAt1("zeta: s = 1");
    return hurwitz_zeta(s, 1.0);
}

}  // namespace ampsum
