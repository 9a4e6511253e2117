// Root counts nu_b(n, m, a) = #{x mod n : a x^2 - m x + b == 0} with the
// prime-power formula 1 + (Delta/p), Delta = m^2 - 4ab, Hensel stability and
// multiplicativity, plus the Euler-product identities for the mu/chi/nu
// weighted Dirichlet series and the joint a-d cancellation.
#pragma once

#include "ampsum/arith.hpp"
#include "ampsum/common.hpp"

namespace ampsum::quadcount {

struct QuadCountQuery {
    i64 n;  // modulus, >= 1
    i64 m;
    i64 a;
    i64 b;
    i64 delta() const { return m * m - 4 * a * b; }
};

i64 nu_brute(const QuadCountQuery& q);

struct NuResult {
    i64 count;
    bool used_formula;  // false when any prime-power factor fell back to brute
};

// multiplicative evaluation: per prime power p^k || n use 1 + (Delta/p) when
// p is odd and p does not divide 2 a Delta; otherwise count mod p^k directly
NuResult nu_fast_full(const QuadCountQuery& q);
inline i64 nu_fast(const QuadCountQuery& q) { return nu_fast_full(q).count; }

struct LocalFactorReport {
    cplx series_side;    // 1 + sum_{k>=1} nu psi^k p^{-kr}, truncated
    cplx closed_side;    // (1 + psi Delta_sym p^{-r}) / (1 - psi p^{-r})
    double residual;
    bool exact_rational;  // exact fraction equality when psi in {1,-1,0}, r integer
};

// Divergent when Re(r) <= 0
LocalFactorReport local_factor_check(i64 pbar, cplx psi_val, int delta_sym, cplx r);

enum class EulerKind { e_sum, n_sum, b_sum, ad_cancel };

struct EulerReport {
    cplx series_value;      // direct truncated Dirichlet series
    cplx product_value;     // truncated Euler product with exact local factors
    double residual;
    cplx paper_form_value;  // ratio-shaped product (report only)
    double paper_form_residual;
    std::vector<std::pair<i64, cplx>> s_factors;  // local factors at p | 2 q Delta
    bool ad_exact;          // ad_cancel: joint local factors identically 1
    i64 term_cap, prime_cap;
};

struct EulerParams {
    EulerKind kind;
    cplx s1, s2, w;
    QuadCountQuery geom;    // supplies (m, a, b = d-circ); Delta = m^2 - 4ab
    arith::DirichletCharacter chi;   // for e/b sums
    arith::DirichletCharacter psi;   // for the n sum; its modulus enters S
    i64 term_cap = 10000;
    i64 prime_cap = 1000;
};

// Divergent outside the absolute-convergence region.
EulerReport euler_product_eval(const EulerParams& par);

}  // namespace ampsum::quadcount
