#include "ampsum/testfunc.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace ampsum {

namespace {

constexpr int kMaxDeriv = 12;

// g(u) = -1/(1-u^2) = -(1/2)[1/(1-u) + 1/(1+u)]
// g^(j)(u) = -(1/2)[ j!/(1-u)^(j+1) + (-1)^j j!/(1+u)^(j+1) ]
double g_derivative(int j, double u) {
    double fact = 1.0;
    for (int i = 2; i <= j; ++i) fact *= i;
    double a = std::pow(1.0 - u, -(j + 1));
    double b = std::pow(1.0 + u, -(j + 1));
    double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    return -0.5 * fact * (a + sgn * b);
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

double bump_profile(double u) {
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double bump_profile_derivative(int k, double u) {
    if (k == 0) return bump_profile(u);
    if (k > kMaxDeriv) throw Error("bump_profile_derivative: order too high");
    if (std::abs(u) >= 1.0 - 1e-12) return 0.0;
    // phi' = phi * g', so phi^(m+1) = sum_j C(m,j) phi^(j) g^(m+1-j)
    std::array<double, kMaxDeriv + 1> d{};
    d[0] = bump_profile(u);
    for (int m = 0; m < k; ++m) {
        double acc = 0.0;
        for (int j = 0; j <= m; ++j) acc += binom(m, j) * d[j] * g_derivative(m + 1 - j, u);
        d[m + 1] = acc;
    }
    return d[k];
}

TestFunction::TestFunction(double center, double width, int order)
    : center_(center), width_(width), order_(order) {
    if (width <= 0.0 || center - width < 0.0)
        throw Error("TestFunction: support must lie in (0, inf)");
}

double TestFunction::derivative(int k, double x) const {
    if (k < 0 || k > order_) throw Error("TestFunction: derivative order out of range");
    return bump_profile_derivative(k, (x - center_) / width_) / std::pow(width_, k);
}

// ---- smoothstep ----------------------------------------------------------------

namespace {

constexpr int kCdfN = 4096;

const std::vector<double>& cdf_prefix() {
    static const std::vector<double> prefix = [] {
        std::vector<double> pre(kCdfN + 1, 0.0);
        double h = 2.0 / kCdfN;
        for (int i = 0; i < kCdfN; ++i) {
            double a = -1.0 + i * h;
            pre[i + 1] = pre[i] + (bump_profile(a) + 4.0 * bump_profile(a + 0.5 * h) +
                                   bump_profile(a + h)) * h / 6.0;
        }
        return pre;
    }();
    return prefix;
}

double profile_mass() { return cdf_prefix().back(); }

// antiderivative of the profile from -1 to v: cached Simpson prefix table
// plus a local Gauss panel from the nearest node
double profile_cdf(double v) {
    if (v <= -1.0) return 0.0;
    if (v >= 1.0) return profile_mass();
    constexpr int N = kCdfN;
    const std::vector<double>& prefix = cdf_prefix();
    double h = 2.0 / N;
    int i = (int)std::floor((v + 1.0) / h);
    i = std::clamp(i, 0, N - 1);
    double a = -1.0 + i * h;
    // 5-point Gauss-Legendre on [a, v]
    static const double gx[5] = {-0.906179845938664, -0.538469310105683, 0.0,
                                 0.538469310105683, 0.906179845938664};
    static const double gw[5] = {0.236926885056189, 0.478628670499366,
                                 0.568888888888889, 0.478628670499366,
                                 0.236926885056189};
    double mid = 0.5 * (a + v), half = 0.5 * (v - a), tail = 0.0;
    for (int k = 0; k < 5; ++k) tail += gw[k] * bump_profile(mid + half * gx[k]);
    return prefix[i] + tail * half;
}

}  // namespace

double smoothstep(double x) {
    if (x <= 0.5) return 0.0;
    if (x >= 1.0) return 1.0;
    return profile_cdf(4.0 * x - 3.0) / profile_mass();
}

double smoothstep_derivative(int k, double x) {
    if (k == 0) return smoothstep(x);
    if (x <= 0.5 || x >= 1.0) return 0.0;
    double scale = std::pow(4.0, k);
    return scale * bump_profile_derivative(k - 1, 4.0 * x - 3.0) / profile_mass();
}

// ---- partition of unity ----------------------------------------------------------

double PartitionSpec::block(size_t j, double x) const {
    double M = M_list[j];
    return smoothstep(x / M) - smoothstep(x / (2.0 * M));
}

double PartitionSpec::block_derivative(size_t j, int k, double x) const {
    double M = M_list[j];
    return smoothstep_derivative(k, x / M) / std::pow(M, k) -
           smoothstep_derivative(k, x / (2.0 * M)) / std::pow(2.0 * M, k);
}

double PartitionSpec::sum_all(double x) const {
    double s = 0.0;
    for (size_t j = 0; j < M_list.size(); ++j) s += block(j, x);
    return s;
}

PartitionCheck partition_unity(double X_cap) {
    if (X_cap < 1.0) throw Error("partition_unity: X_cap must be >= 1");
    PartitionCheck out;
    out.spec.X_cap = X_cap;
    // blocks M = 2^j while the support [M/2, 2M] meets (0, X_cap]
    for (double M = 1.0; M / 2.0 <= X_cap; M *= 2.0) out.spec.M_list.push_back(M);
    out.block_count = out.spec.count();
    out.count_ok = (double)out.block_count <= 2.0 + std::log2(std::max(1.0, X_cap)) + 1e-9;

    const int G = 1000;
    out.max_partition_residual = 0.0;
    int max_i = 3;
    out.deriv_bound.assign(max_i + 1, 0.0);
    for (int g = 0; g < G; ++g) {
        // log-spaced grid over [1/4, X_cap]
        double x = 0.25 * std::pow(4.0 * X_cap, g / (double)(G - 1));
        double target = smoothstep(x);  // telescoped tail: eta(x/2^J) = 0 here
        double r = std::abs(out.spec.sum_all(x) - target);
        out.max_partition_residual = std::max(out.max_partition_residual, r);
        for (int i = 0; i <= max_i; ++i) {
            for (size_t j = 0; j < out.spec.count(); ++j) {
                double v = std::abs(std::pow(x, i) * out.spec.block_derivative(j, i, x));
                out.deriv_bound[i] = std::max(out.deriv_bound[i], v);
            }
        }
    }
    return out;
}

}  // namespace ampsum
