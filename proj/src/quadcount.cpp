#include "ampsum/quadcount.hpp"

#include <cmath>
#include <functional>

namespace ampsum::quadcount {

i64 nu_brute(const QuadCountQuery& q) {
    if (q.n <= 0) throw Error("nu_brute: modulus must be positive");
    i64 cnt = 0;
    for (i64 x = 0; x < q.n; ++x)
        if (imod(q.a * x * x - q.m * x + q.b, q.n) == 0) ++cnt;
    return cnt;
}

namespace {

i64 pow_i64(i64 b, int e) {
    i64 r = 1;
    while (e--) r *= b;
    return r;
}

i64 nu_prime_power_brute(i64 p, int k, const QuadCountQuery& q) {
    QuadCountQuery qq = q;
    qq.n = pow_i64(p, k);
    return nu_brute(qq);
}

}  // namespace

NuResult nu_fast_full(const QuadCountQuery& q) {
    if (q.n <= 0) throw Error("nu_fast: modulus must be positive");
    if (q.n == 1) return {1, true};
    i64 delta = q.delta();
    NuResult res{1, true};
    for (auto [p, k] : factorize(q.n)) {
        i64 local;
        if (p != 2 && q.a % p != 0 && delta % p != 0) {
            local = 1 + arith::jacobi(delta, p);  // Hensel-stable for every k
        } else {
            local = nu_prime_power_brute(p, k, q);
            res.used_formula = false;
        }
        res.count *= local;
        if (res.count == 0) break;
    }
    return res;
}

LocalFactorReport local_factor_check(i64 pbar, cplx psi_val, int delta_sym, cplx r) {
    if (r.real() <= 0.0) throw Divergent("local_factor_check: Re(r) <= 0");
    if (pbar < 3 || pbar % 2 == 0 || !is_prime(pbar))
        throw Error("local_factor_check: pbar must be an odd prime");
    const double nu = 1.0 + delta_sym;
    const cplx x = psi_val * std::pow((double)pbar, -r);

    // truncated series 1 + nu * sum_{k>=1} x^k
    cplx series = 1.0;
    cplx xk = x;
    for (int k = 1; k <= 200 && std::abs(xk) > 1e-18; ++k) {
        series += nu * xk;
        xk *= x;
    }
    cplx closed = (1.0 + (double)delta_sym * x) / (1.0 - x);

    LocalFactorReport rep;
    rep.series_side = series;
    rep.closed_side = closed;
    rep.residual = std::abs(series - closed);

    // exact rational route: psi in {0, 1, -1} and r a positive integer
    rep.exact_rational = false;
    double rr = r.real();
    if (r.imag() == 0.0 && std::abs(psi_val.imag()) == 0.0 && rr == std::floor(rr)) {
        double pv = psi_val.real();
        if (pv == 0.0 || pv == 1.0 || pv == -1.0) {
            // x = pv / pbar^r as an exact fraction; closed/series identity
            //   1 + (1 + ds) x / (1 - x) == (1 + ds x) / (1 - x)
            // cross-multiplied over the common denominator:
            i64 den = 1;
            for (int i = 0; i < (int)rr; ++i) {
                if (den > (i64)4e17 / pbar) { den = 0; break; }  // overflow guard
                den *= pbar;
            }
            if (den > 0) {
                i64 xn = (i64)pv;  // numerator of x over den
                // lhs*(den - xn): (den - xn) + (1 + ds) xn ; rhs: den + ds*xn
                i64 lhs = (den - xn) + (i64)(1 + delta_sym) * xn;
                i64 rhs = den + (i64)delta_sym * xn;
                rep.exact_rational = (lhs == rhs);
            }
        }
    }
    return rep;
}

// ---- Euler products -----------------------------------------------------------
//
// Each of the e/n/b sums is a single Dirichlet series with multiplicative
// coefficients built from nu, so it factors exactly over primes; the product
// side below uses the exact local factors (direct local summation with the
// true nu values), and the ratio-shaped forms are reported alongside.

EulerReport euler_product_eval(const EulerParams& par) {
    const i64 delta = par.geom.delta();
    const auto& chi = par.chi;
    const auto& psi = par.psi;
    const cplx s_e = par.s1 + 2.0 * par.s2 + 1.0 + par.w;  // e and b sums
    const cplx s_n = par.s2 + 1.0 + par.w;
    const cplx s_ad = par.s1 + par.s2 + 1.0 + par.w;

    auto nu_at = [&](i64 n) -> double {
        QuadCountQuery q{n, par.geom.m, par.geom.a, par.geom.b};
        return (double)nu_fast(q);
    };

    // convergence guards (enforced at > 1 throughout)
    auto need = [&](cplx s, const char* which) {
        if (s.real() <= 1.0) throw Divergent(std::string("euler_product_eval: Re too small for ") + which);
    };

    EulerReport rep;
    rep.term_cap = par.term_cap;
    rep.prime_cap = par.prime_cap;
    rep.ad_exact = false;
    auto primes = primes_up_to(par.prime_cap);

    // S = primes dividing 2 * q_psi * Delta
    auto in_S = [&](i64 p) {
        return p == 2 || psi.modulus() % p == 0 || (delta != 0 && delta % p == 0);
    };

    auto run_series = [&](const std::function<cplx(i64)>& coeff, cplx s) {
        cplx acc = 0.0;
        for (i64 n = 1; n <= par.term_cap; ++n) {
            cplx c = coeff(n);
            if (c == cplx(0.0)) continue;
            acc += c * std::exp(-s * std::log((double)n));
        }
        return acc;
    };

    // exact local factor: 1 + sum_{k>=1} coeff(p^k) p^{-ks}, truncated at the
    // point where additional powers are below 1e-18
    auto local_factor = [&](const std::function<cplx(i64)>& coeff, i64 p, cplx s) {
        cplx acc = 1.0;
        double pk = (double)p;
        i64 pk_int = p;
        for (int k = 1; k <= 40; ++k) {
            double mag = std::pow(pk, -s.real());
            if (mag < 1e-18) break;
            acc += coeff(pk_int) * std::exp(-s * std::log(pk));
            if (pk_int > par.term_cap * 100) break;
            if (pk_int > (i64)1e15 / p) break;
            pk_int *= p;
            pk = (double)pk_int;
        }
        return acc;
    };

    switch (par.kind) {
        case EulerKind::e_sum: {
            need(s_e, "e_sum");
            auto coeff = [&](i64 n) -> cplx {
                int mu = arith::mobius(n);
                if (mu == 0) return 0.0;
                cplx cv = chi(n);
                if (cv == cplx(0.0)) return 0.0;
                return (double)mu * cv * nu_at(n);
            };
            rep.series_value = run_series(coeff, s_e);
            cplx prod = 1.0, paper = 1.0;
            for (i64 p : primes) {
                cplx lf = local_factor(coeff, p, s_e);
                prod *= lf;
                if (in_S(p)) {
                    rep.s_factors.emplace_back(p, lf);
                    paper *= lf;
                } else {
                    // ratio form (1 - chi(p) p^-s) / (1 + chi(p)(Delta/p) p^-s)
                    cplx u = chi(p) * std::exp(-s_e * std::log((double)p));
                    paper *= (1.0 - u) / (1.0 + u * (double)arith::jacobi(delta, p));
                }
            }
            rep.product_value = prod;
            rep.paper_form_value = paper;
            break;
        }
        case EulerKind::n_sum: {
            need(s_n, "n_sum");
            auto psibar = psi.conj();
            auto coeff = [&](i64 n) -> cplx {
                cplx pv = psibar(n);
                if (pv == cplx(0.0)) return 0.0;
                return pv * nu_at(n);
            };
            rep.series_value = run_series(coeff, s_n);
            cplx prod = 1.0, paper = 1.0;
            for (i64 p : primes) {
                cplx lf = local_factor(coeff, p, s_n);
                prod *= lf;
                if (in_S(p)) {
                    rep.s_factors.emplace_back(p, lf);
                    paper *= lf;
                } else {
                    cplx u = psibar(p) * std::exp(-s_n * std::log((double)p));
                    paper *= (1.0 + u * (double)arith::jacobi(delta, p)) / (1.0 - u);
                }
            }
            rep.product_value = prod;
            rep.paper_form_value = paper;
            break;
        }
        case EulerKind::b_sum: {
            need(s_e, "b_sum");
            auto coeff = [&](i64 n) -> cplx {
                int mu = arith::mobius(n);
                if (mu == 0) return 0.0;  // mu^2 support
                cplx cv = chi(n);
                if (cv == cplx(0.0)) return 0.0;
                return cv * nu_at(n);
            };
            rep.series_value = run_series(coeff, s_e);
            cplx prod = 1.0, paper = 1.0;
            for (i64 p : primes) {
                cplx lf = local_factor(coeff, p, s_e);
                prod *= lf;
                if (in_S(p)) {
                    rep.s_factors.emplace_back(p, lf);
                    paper *= lf;
                } else {
                    // (1 - chi^2 nu^2 p^-2s) / (1 - chi nu p^-s) with nu = 1 + (Delta/p)
                    double nu = 1.0 + arith::jacobi(delta, p);
                    cplx u = chi(p) * nu * std::exp(-s_e * std::log((double)p));
                    paper *= (1.0 - u * u) / (1.0 - u);
                }
            }
            rep.product_value = prod;
            rep.paper_form_value = paper;
            break;
        }
        case EulerKind::ad_cancel: {
            need(s_ad, "ad_cancel");
            // joint convolution sum_{a d = N} mu(a) nu(N) N^{-s}: the mu-sum
            // collapses every N > 1, so both the full double series and each
            // local factor must be exactly 1.
            cplx series = 0.0;
            for (i64 av = 1; av <= par.term_cap; ++av) {
                int mu = arith::mobius(av);
                if (mu == 0) continue;
                for (i64 dv = 1; av * dv <= par.term_cap; ++dv) {
                    i64 N = av * dv;
                    series += (double)mu * nu_at(N) * std::exp(-s_ad * std::log((double)N));
                }
            }
            rep.series_value = series;
            rep.product_value = 1.0;
            rep.paper_form_value = 1.0;
            // exact local statement: for every p and k >= 1 the coefficient of
            // p^{-ks} is nu(p^k) (mu(1) + mu(p)) = 0 -- integer arithmetic
            bool exact = true;
            for (i64 p : primes) {
                for (int k = 1; k <= 4; ++k) {
                    i64 pk = pow_i64(p, k);
                    if (pk > par.term_cap * 100) break;
                    i64 nu_val = nu_fast({pk, par.geom.m, par.geom.a, par.geom.b});
                    i64 coeff_k = nu_val * (1 + arith::mobius(p));
                    if (coeff_k != 0) exact = false;
                }
            }
            rep.ad_exact = exact;
            break;
        }
    }
    rep.residual = std::abs(rep.series_value - rep.product_value);
    rep.paper_form_residual = std::abs(rep.series_value - rep.paper_form_value);
    return rep;
}

}  // namespace ampsum::quadcount
