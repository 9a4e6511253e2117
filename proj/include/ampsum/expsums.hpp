// Finite twisted exponential sums: the nebentypus Kloosterman sum
// S_chi(l, n, c) = sum_{x (c)*} chi(x) e((l x + n xbar)/c), its CRT behaviour,
// and the Gauss-sum factorization of the twisted full-unit sum mod p q r.
#pragma once

#include "ampsum/arith.hpp"
#include "ampsum/common.hpp"

namespace ampsum::expsums {

struct ExpSumValue {
    cplx value;
    i64 modulus;
    i64 term_count;  // phi(modulus) for full unit-range sums
};

// BadTwist when chi's modulus does not divide c
ExpSumValue kloosterman(const arith::DirichletCharacter& chi, i64 l, i64 n, i64 c);

// untwisted S(l, n, c)
ExpSumValue kloosterman(i64 l, i64 n, i64 c);

struct GaussReductionReport {
    cplx full_sum;        // sum over x (pqr)* of chi(xbar) psi(-xbar) e(xbar*arg/(pqr))
    cplx crt_product;     // product of the three CRT factor sums
    cplx closed_form;     // chi/psi Gauss-sum closed form (coprime arg only)
    double crt_residual;
    double closed_residual;  // NaN when gcd(arg, pq) > 1
    bool arg_coprime_pq;
};

// Verifies the CRT factorization of the twisted Gauss sum mod p*q*r, and for
// gcd(arg, pq) = 1 the closed form
//   psi(-1) chibar(arg) chi(qr) tau(chi) psibar(arg) psi(pr) tau(psi) f_r(arg).
// NotCoprime when gcd(r, pq) > 1.
GaussReductionReport gauss_reduction_check(const arith::DirichletCharacter& chi,
                                           const arith::DirichletCharacter& psi,
                                           i64 r, i64 arg);

struct WeilReport {
    double abs_value;
    double bound;  // 2 sqrt(p)
    bool holds;
};

WeilReport weil_check(i64 l, i64 n, i64 p);

}  // namespace ampsum::expsums
