#include "ampsum/expsums.hpp"

#include <cmath>

namespace ampsum::expsums {

namespace {

// root-of-unity table for modulus c: roots[j] = e(j/c)
std::vector<cplx> root_table(i64 c) {
    std::vector<cplx> roots(c);
    for (i64 j = 0; j < c; ++j) roots[j] = unit_phase(j, c);
    return roots;
}

}  // namespace

ExpSumValue kloosterman(const arith::DirichletCharacter& chi, i64 l, i64 n, i64 c) {
    if (c <= 0) throw Error("kloosterman: modulus must be positive");
    if (c % chi.modulus() != 0) throw BadTwist("kloosterman: chi modulus must divide c");
    auto roots = root_table(c);
    cplx s = 0.0;
    i64 count = 0;
    l = imod(l, c);
    n = imod(n, c);
    for (i64 x = 1; x <= c; ++x) {
        if (igcd(x, c) != 1 && c != 1) continue;
        i64 xb = arith::mod_inverse(x, c).value;
        i64 ph = imod(l * (x % c) + n * xb, c);
        s += chi(x) * roots[ph];
        ++count;
    }
    if (c == 1) { s = chi(1); count = 1; }
    return {s, c, count};
}

ExpSumValue kloosterman(i64 l, i64 n, i64 c) {
    static const auto trivial = arith::char_group(1);
    return kloosterman(trivial[0], l, n, c);
}

GaussReductionReport gauss_reduction_check(const arith::DirichletCharacter& chi,
                                           const arith::DirichletCharacter& psi,
                                           i64 r, i64 arg) {
    const i64 p = chi.modulus(), q = psi.modulus();
    if (p == q || !is_prime(p) || !is_prime(q) || p % 2 == 0 || q % 2 == 0)
        throw Error("gauss_reduction_check: needs distinct odd prime moduli");
    if (r <= 0 || igcd(r, p * q) != 1)
        throw NotCoprime("gauss_reduction_check: gcd(r, pq) > 1");

    const i64 N = p * q * r;
    auto roots = root_table(N);

    // full sum over x (N)*: chi(xbar) psi(-xbar) e(xbar * arg / N)
    cplx full = 0.0;
    for (i64 x = 1; x < N; ++x) {
        if (igcd(x, N) != 1) continue;
        i64 xb = arith::mod_inverse(x, N).value;
        full += chi(xb) * psi(-xb) * roots[imod(xb * (arg % N), N)];
    }
    if (N == 1) full = 1.0;

    // CRT factorization: with u = xbar running over units mod N,
    //   e(u*arg/N) = e(u*arg*inv(qr)/p) e(u*arg*inv(pr)/q) e(u*arg*inv(pq)/r),
    // so the sum splits into a chi-factor mod p, a psi-factor mod q and a
    // Ramanujan factor mod r, with the psi(-1) sign pulled out front.
    auto factor_sum = [&](const arith::DirichletCharacter& om, i64 mod, i64 co) {
        i64 b = mulmod(imod(arg, mod), arith::mod_inverse(co, mod).value, mod);
        cplx s = 0.0;
        for (i64 u = 1; u <= mod; ++u) {
            if (igcd(u, mod) != 1 && mod != 1) continue;
            s += om(u) * unit_phase(mulmod(u % mod, b, mod), mod);
        }
        return s;
    };
    cplx fp = factor_sum(chi, p, imod(q * r, p));
    cplx fq = factor_sum(psi, q, imod(p * r, q));
    cplx fr;
    if (r == 1) {
        fr = 1.0;
    } else {
        fr = 0.0;
        i64 b = mulmod(imod(arg, r), arith::mod_inverse(p * q, r).value, r);
        for (i64 u = 1; u <= r; ++u) {
            if (igcd(u, r) != 1) continue;
            fr += unit_phase(mulmod(u, b, r), r);
        }
    }
    cplx crt = psi(-1) * fp * fq * fr;

    GaussReductionReport rep;
    rep.full_sum = full;
    rep.crt_product = crt;
    rep.crt_residual = std::abs(full - crt);
    rep.arg_coprime_pq = (igcd(arg, p * q) == 1);

    if (rep.arg_coprime_pq) {
        cplx tau_chi = arith::gauss_sum(chi);
        cplx tau_psi = arith::gauss_sum(psi);
        cplx cf = psi(-1) * chi.conj()(arg) * chi(q * r) * tau_chi * psi.conj()(arg) *
                  psi(p * r) * tau_psi * (double)arith::ramanujan_f(r, arg);
        rep.closed_form = cf;
        rep.closed_residual = std::abs(full - cf);
    } else {
        rep.closed_form = 0.0;
        rep.closed_residual = std::nan("");
    }
    return rep;
}

WeilReport weil_check(i64 l, i64 n, i64 p) {
    if (!is_prime(p)) throw Error("weil_check: p must be prime");
    auto s = kloosterman(l, n, p);
    WeilReport rep;
    rep.abs_value = std::abs(s.value);
    rep.bound = 2.0 * std::sqrt((double)p);
    rep.holds = rep.abs_value <= rep.bound + 1e-9;
    return rep;
}

}  // namespace ampsum::expsums
