#include "ampsum/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "ampsum/testfunc.hpp"

namespace ampsum {

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> x(n), w(n);
    // Newton on Legendre polynomials from the asymptotic initial guess
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace {

cplx gl_panel(const std::function<cplx(double)>& f, double a, double b, int order) {
    const auto& [x, w] = gauss_legendre(order);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += w[i] * f(mid + half * x[i]);
    return s * half;
}

cplx adapt(const std::function<cplx(double)>& f, double a, double b,
           const QuadratureSpec& spec, int depth, double scale) {
    cplx coarse = gl_panel(f, a, b, 16);
    cplx fine = gl_panel(f, a, 0.5 * (a + b), 16) + gl_panel(f, 0.5 * (a + b), b, 16);
    double err = std::abs(fine - coarse);
    if (err < spec.abs_tol + spec.rel_tol * std::max(scale, std::abs(fine)))
        return fine;
    if (depth >= spec.max_depth)
        throw QuadratureFailure("integrate: adaptive depth exhausted");
    double m = 0.5 * (a + b);
    return adapt(f, a, m, spec, depth + 1, scale) + adapt(f, m, b, spec, depth + 1, scale);
}

}  // namespace

cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               const QuadratureSpec& spec) {
    if (a == b) return 0.0;
    return adapt(f, a, b, spec, 0, 0.0);
}

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureSpec& spec) {
    return integrate([&](double x) { return cplx(f(x), 0.0); }, a, b, spec).real();
}

cplx integrate_fixed(const std::function<cplx(double)>& f, double a, double b,
                     int panels, int order) {
    cplx s = 0.0;
    double h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) s += gl_panel(f, a + i * h, a + (i + 1) * h, order);
    return s;
}

cplx vertical_line(const std::function<cplx(cplx)>& f, double sigma, double T,
                   const QuadratureSpec& spec) {
    return integrate([&](double t) { return f(cplx(sigma, t)); }, -T, T, spec) /
           TWO_PI;
}

LadderResult oscillatory_ladder(const std::function<cplx(double)>& f, double h0,
                                double H0, int max_rungs,
                                const QuadratureSpec& spec) {
    // cut(x; eps, H): 1 on [eps, H], smooth to 0 on [eps/2, eps] and [H, 2H]
    auto cut_value = [](double x, double eps, double H) -> double {
        if (x <= 0.5 * eps || x >= 2.0 * H) return 0.0;
        double v = 1.0;
        if (x < eps) v *= smoothstep(x / eps);          // rises on [eps/2, eps]
        if (x > H) v *= 1.0 - smoothstep(0.5 * x / H);  // falls on [H, 2H]
        return v;
    };

    LadderResult out{0.0, INFINITY, 0};
    cplx prev = 0.0;
    double eps = h0, H = H0;
    for (int rung = 0; rung < max_rungs; ++rung) {
        // integrate over [eps/2, 2H] on geometric panels, adaptively refined
        auto g = [&](double x) { return f(x) * cut_value(x, eps, H); };
        cplx val = 0.0;
        double a = 0.5 * eps;
        while (a < 2.0 * H) {
            double b = std::min(a * 2.0, 2.0 * H);
            val += integrate(g, a, b, spec);
            a = b;
        }
        out.rungs = rung + 1;
        if (rung > 0) {
            out.spread = std::abs(val - prev);
            out.value = val;
            if (out.spread < spec.abs_tol * 10.0 + spec.rel_tol * std::abs(val)) return out;
        } else {
            out.value = val;
        }
        prev = val;
        eps *= 0.5;
        H *= 2.0;
    }
    return out;
}

}  // namespace ampsum
