#include "ampsum/lfunc.hpp"

#include <algorithm>
#include <cmath>

#include "ampsum/gammafn.hpp"

namespace ampsum::lfunc {

namespace {

cplx npow(double n, cplx s) { return std::exp(-s * std::log(n)); }  // n^{-s}

// L for principal chi mod q: zeta(s) * prod_{p | q} (1 - p^{-s})
cplx principal_L(i64 q, cplx s) {
    if (s == cplx(1.0, 0.0)) throw PoleAt1("dirichlet_L: principal character at s = 1");
    cplx v = zeta(s);
    for (auto [p, e] : factorize(q)) v *= (1.0 - npow((double)p, s));
    return v;
}

// Gaussian-smoothed sum over n <= cutoff of chi(n) n^{-s} e^{-(n/N)^2};
// the contour-shift error is superpolynomially small in N for nonprincipal
// chi.  N = 10 sqrt(q (1 + |t|)) + 50.
cplx smoothed_sum_value(const arith::DirichletCharacter& chi, cplx s, double* err) {
    const i64 q = chi.modulus();
    const double N = 10.0 * std::sqrt((double)q * (1.0 + std::abs(s.imag()))) + 50.0;
    const double cutoff = N * std::sqrt(38.0);  // e^{-38} ~ 3e-17
    cplx acc = 0.0;
    double block = 0.0;
    i64 block_start = (i64)(cutoff * 0.8);
    for (i64 n = 1; (double)n <= cutoff; ++n) {
        cplx c = chi(n);
        if (c == cplx(0.0)) continue;
        double u = (double)n / N;
        cplx term = c * npow((double)n, s) * std::exp(-u * u);
        acc += term;
        if (n >= block_start) block += std::abs(term);
    }
    if (err) *err = 10.0 * (block + 1e-16 * std::abs(acc));
    return acc;
}

bool near_half_line(cplx s) { return s.real() >= 0.4; }

}  // namespace

cplx periodic_L(const std::vector<cplx>& coeffs, cplx s) {
    // sum_n a(n) n^{-s} = M^{-s} sum_{j=1}^{M} a(j) zeta(s, j/M)
    const i64 M = (i64)coeffs.size();
    cplx acc = 0.0;
    for (i64 j = 1; j <= M; ++j) {
        if (coeffs[j - 1] == cplx(0.0)) continue;
        acc += coeffs[j - 1] * hurwitz_zeta(s, (double)j / (double)M);
    }
    return acc * npow((double)M, s);
}

LValue dirichlet_L(const arith::DirichletCharacter& chi, cplx s, Method method) {
    LValue out;
    out.s = s;
    out.modulus = chi.modulus();
    out.index = chi.index();
    out.method = method;

    if (chi.is_principal()) {
        if (s == cplx(1.0, 0.0)) throw PoleAt1("dirichlet_L: principal character at s = 1");
        out.value = principal_L(chi.modulus(), s);
        out.error_bound = 1e-12 * (1.0 + std::abs(out.value));
        return out;
    }

    switch (method) {
        case Method::smoothed_sum: {
            if (!near_half_line(s))
                throw Error("dirichlet_L: smoothed_sum needs Re(s) >= 0.4");
            out.value = smoothed_sum_value(chi, s, &out.error_bound);
            return out;
        }
        case Method::functional_equation: {
            if (!chi.is_primitive())
                throw NotPrimitive("dirichlet_L: functional_equation needs primitive chi");
            // completed L: Lambda(s) = (q/pi)^{(s+a)/2} Gamma((s+a)/2) L(s,chi)
            //             = eps(chi) Lambda(1-s, chibar)
            const i64 q = chi.modulus();
            const int a = chi.is_even() ? 0 : 1;
            cplx tau = arith::gauss_sum(chi);
            cplx eps = tau / (std::pow(cplx(0.0, 1.0), a) * std::sqrt((double)q));
            double dual_err;
            cplx dual = smoothed_sum_value(chi.conj(), 1.0 - s, &dual_err);
            cplx gamma_ratio = std::exp(clgamma((1.0 - s + (double)a) / 2.0) -
                                        clgamma((s + (double)a) / 2.0));
            cplx scale = std::pow((double)q / PI, 0.5 - s);
            out.value = eps * scale * gamma_ratio * dual;
            out.error_bound = dual_err * std::abs(eps * scale * gamma_ratio) +
                              1e-12 * std::abs(out.value);
            return out;
        }
        case Method::auto_select: {
            // imprimitive: reduce to the inducing character and patch Euler
            // factors at primes dividing q but not the conductor
            if (!chi.is_primitive()) {
                i64 f = chi.conductor();
                auto grp = arith::char_group(f);
                for (const auto& star : grp) {
                    bool match = true;
                    for (i64 x = 0; x < chi.modulus() && match; ++x) {
                        if (igcd(x, chi.modulus()) != 1) continue;
                        if (std::abs(star(x) - chi(x)) > 1e-12) match = false;
                    }
                    if (match) {
                        LValue inner = dirichlet_L(star, s, Method::auto_select);
                        cplx v = inner.value;
                        for (auto [p, e] : factorize(chi.modulus()))
                            if (f % p != 0) v *= (1.0 - star(p) * npow((double)p, s));
                        out.value = v;
                        out.error_bound = inner.error_bound * (1.0 + std::abs(v));
                        return out;
                    }
                }
                throw Error("dirichlet_L: inducing character not found");
            }
            const i64 q = chi.modulus();
            double tcost = (double)q * (1.0 + std::abs(s.imag()));
            if (tcost <= 3.0e4) {
                // Hurwitz route: exact continuation, modest cost
                std::vector<cplx> coeffs((size_t)q);
                for (i64 j = 1; j <= q; ++j) coeffs[j - 1] = chi(j);
                out.value = periodic_L(coeffs, s);
                out.error_bound = 1e-11 * (1.0 + std::abs(out.value));
            } else if (near_half_line(s)) {
                out.value = smoothed_sum_value(chi, s, &out.error_bound);
            } else {
                return dirichlet_L(chi, s, Method::functional_equation);
            }
            return out;
        }
    }
    throw Error("dirichlet_L: unreachable");
}

CFactorResult c_factor(const CFactorInput& in) {
    const cplx s1 = in.s1, s2 = in.s2, w = in.w;
    const cplx sB = s1 + 2.0 * s2 + 1.0 + w;
    const cplx sN = s2 + 1.0 + w;

    auto check_pole = [](const arith::DirichletCharacter& c, cplx s, const char* name) {
        if (c.is_principal() && std::abs(s - cplx(1.0, 0.0)) < 1e-12)
            throw PoleHit(std::string("c_factor: pole of ") + name);
    };

    // quadratic character (delta/.) evaluated pointwise; periodic mod 4|delta|
    const i64 D = in.delta;
    const i64 period = D == 0 ? 1 : 4 * (D < 0 ? -D : D);
    auto kron = [&](i64 n) { return (double)arith::kronecker(D, n); };

    CFactorResult out;
    double err_acc = 0.0;

    auto Lv = [&](const arith::DirichletCharacter& c, cplx s) {
        LValue v = dirichlet_L(c, s, Method::auto_select);
        err_acc += v.error_bound;
        return v.value;
    };
    // L for (delta/.) * chi through the periodic evaluator
    auto Lkron = [&](const arith::DirichletCharacter& c, cplx s) {
        i64 M = std::lcm(period, c.modulus());
        if (M > 200000) throw Overflow("c_factor: twisted modulus exceeds table limit");
        std::vector<cplx> coeffs((size_t)M);
        bool principal_like = true;
        for (i64 j = 1; j <= M; ++j) {
            cplx v = c(j) * kron(j);
            coeffs[j - 1] = v;
            if (std::abs(v - cplx(1.0)) > 1e-12 && v != cplx(0.0)) principal_like = false;
        }
        if (principal_like) {
            // the twisted character is principal mod M: ride on zeta
            if (std::abs(s - cplx(1.0, 0.0)) < 1e-12)
                throw PoleHit("c_factor: principal twisted factor at s = 1");
            cplx v = zeta(s);
            for (auto [p, e] : factorize(M)) v *= (1.0 - npow((double)p, s));
            err_acc += 1e-12 * std::abs(v);
            return v;
        }
        cplx v = periodic_L(coeffs, s);
        err_acc += 1e-11 * (1.0 + std::abs(v));
        return v;
    };

    auto chipsi = arith::product(in.chi, in.psi);
    check_pole(in.chi, s2, "L(s2, chi)");
    check_pole(in.psi, s1, "L(s1, psi)");
    check_pole(chipsi, s1 + s2, "L(s1+s2, chi psi)");

    cplx l_s2_chi = Lv(in.chi, s2);
    cplx l_s1_psi = Lv(in.psi, s1);
    cplx l_den = Lv(chipsi, s1 + s2);
    if (std::abs(l_den) < 1e-14) throw PoleHit("c_factor: L(s1+s2, chi psi) ~ 0");
    out.l_ratio_main = l_s2_chi * l_s1_psi / l_den;

    cplx l_dchi = Lkron(in.chi, sB);
    cplx l_chi = Lv(in.chi, sB);
    auto psibar = in.psi.conj();
    cplx l_psibar = Lv(psibar, sN);
    cplx l_dpsibar = Lkron(psibar, sN);
    if (std::abs(l_chi) < 1e-14 || std::abs(l_dpsibar) < 1e-14)
        throw PoleHit("c_factor: vanishing denominator in the delta ratios");
    out.l_ratio_delta = (l_dchi / l_chi) * (l_psibar / l_dpsibar);

    // B factor: direct series sum_{b squarefree} chi(b) kron(b) is *not* the
    // shape here; B is the mu^2 chi nu series at sB, absolutely convergent
    // for Re(sB) > 1.  nu is driven by delta alone away from S, so derive a
    // (m, a) pair with m^2 - 4 a = delta for the S-primes.
    if (sB.real() <= 1.0) throw Divergent("c_factor: Re(s1+2s2+w) <= 0 for B");
    i64 m0, a0;
    i64 dm = imod(D, 4);
    if (dm == 0) { m0 = 0; a0 = -D / 4; }
    else if (dm == 1) { m0 = 1; a0 = (1 - D) / 4; }
    else throw Error("c_factor: delta must be 0 or 1 mod 4");
    cplx B = 0.0;
    for (i64 b = 1; b <= in.b_series_cap; ++b) {
        if (arith::mobius(b) == 0) continue;
        cplx cv = in.chi(b);
        if (cv == cplx(0.0)) continue;
        // nu(b) for squarefree b: product of 1 + (delta/p) away from 2 delta
        double nu = 1.0;
        for (auto [p, e] : factorize(b)) {
            if (p != 2 && D % p != 0 && a0 % p != 0) {
                nu *= 1.0 + arith::jacobi(D, p);
            } else {
                i64 cnt = 0;
                for (i64 x = 0; x < p; ++x)
                    if (imod(a0 * x * x - m0 * x + 1, p) == 0) ++cnt;
                nu *= (double)cnt;
            }
            if (nu == 0.0) break;
        }
        if (nu == 0.0) continue;
        B += cv * nu * npow((double)b, sB);
    }
    out.b_factor = B;
    err_acc += std::pow((double)in.b_series_cap, 1.0 - sB.real()) * 3.0;

    out.value = out.l_ratio_main * out.l_ratio_delta * B;
    out.error_bound = err_acc * (1.0 + std::abs(out.value));
    return out;
}

ConvexityScan convexity_scan(i64 q_max, const std::vector<double>& t_grid) {
    if (q_max > arith::kTableLimit) throw Overflow("convexity_scan: q_max beyond table limit");
    ConvexityScan scan;
    auto primes = primes_up_to(q_max);
    for (i64 q : primes) {
        if (q < 3) continue;
        // cyclic group mod prime q: chi_j(g^L) = e(j L / (q-1)) with g the
        // smallest primitive root, matching the CharGroup labels
        const i64 ord = q - 1;
        i64 g = 2;
        {
            auto fac = factorize(ord);
            for (;; ++g) {
                bool ok = true;
                for (auto [pp, ee] : fac)
                    if (powmod(g, ord / pp, q) == 1) { ok = false; break; }
                if (ok) break;
            }
        }
        std::vector<i64> dlog((size_t)q, -1);
        {
            i64 x = 1;
            for (i64 L = 0; L < ord; ++L) {
                dlog[x] = L;
                x = mulmod(x, g, q);
            }
        }
        std::vector<cplx> roots((size_t)ord);
        for (i64 j = 0; j < ord; ++j) roots[j] = unit_phase(j, ord);

        ConvexityPoint pt{q, 0.0, 0.0, 0};
        for (double t : t_grid) {
            cplx s(0.5, t);
            // bucket the smoothed terms by discrete log, then run the DFT
            const double N = 10.0 * std::sqrt((double)q * (1.0 + std::abs(t))) + 50.0;
            const double cutoff = N * std::sqrt(38.0);
            std::vector<cplx> A((size_t)ord, 0.0);
            for (i64 n = 1; (double)n <= cutoff; ++n) {
                if (n % q == 0) continue;
                double u = (double)n / N;
                A[dlog[n % q]] += std::exp(-s * std::log((double)n)) * std::exp(-u * u);
            }
            for (i64 j = 1; j < ord; ++j) {
                cplx acc = 0.0;
                i64 idx = 0;
                for (i64 L = 0; L < ord; ++L) {
                    acc += roots[idx] * A[L];
                    idx += j;
                    if (idx >= ord) idx -= ord;
                }
                double m = std::abs(acc);
                if (m > pt.max_abs) { pt.max_abs = m; pt.at_t = t; pt.at_index = j; }
            }
        }
        scan.points.push_back(pt);
    }
    // OLS of log max against log q
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    i64 n = 0;
    for (const auto& pt : scan.points) {
        if (pt.max_abs <= 0.0) continue;
        double X = std::log((double)pt.q), Y = std::log(pt.max_abs);
        sx += X; sy += Y; sxx += X * X; sxy += X * Y;
        ++n;
    }
    if (n >= 2) {
        scan.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        scan.fit_intercept = (sy - scan.fitted_exponent * sx) / n;
    } else {
        scan.fitted_exponent = 0.0;
        scan.fit_intercept = 0.0;
    }
    return scan;
}

}  // namespace ampsum::lfunc
