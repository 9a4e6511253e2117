// Dirichlet L-values: principal characters through zeta, modest moduli
// through Hurwitz zeta, large moduli and the critical line through a
// Gaussian-smoothed sum, and the reflection route via the functional
// equation with the Gauss-sum root number.  On top: the C(s1,s2,w) ratio of
// L-values and an empirical convexity-exponent scan.
#pragma once

#include "ampsum/arith.hpp"
#include "ampsum/common.hpp"

namespace ampsum::lfunc {

enum class Method { smoothed_sum, functional_equation, auto_select };

struct LValue {
    cplx s;
    i64 modulus;
    i64 index;
    cplx value;
    double error_bound;
    Method method;
};

// PoleAt1 for principal chi at s = 1; NotPrimitive when functional_equation
// is requested for an imprimitive nonprincipal character.
LValue dirichlet_L(const arith::DirichletCharacter& chi, cplx s,
                   Method method = Method::auto_select);

// L-value of an arbitrary periodic coefficient sequence a(1..M) (period M)
// via Hurwitz zeta; exact analytic continuation, any s != 1-pole situations
// are the caller's concern.
cplx periodic_L(const std::vector<cplx>& coeffs, cplx s);

struct CFactorInput {
    cplx s1, s2, w;
    i64 delta;                       // the quadratic character is (delta/.)
    arith::DirichletCharacter chi;   // mod p
    arith::DirichletCharacter psi;   // mod q
    i64 b_series_cap = 20000;
};

struct CFactorResult {
    cplx value;
    double error_bound;
    cplx l_ratio_main;    // L(s2,chi) L(s1,psi) / L(s1+s2, chi psi)
    cplx l_ratio_delta;   // L(.,(D/.)chi)/L(.,chi) * L(.,psibar)/L(.,(D/.)psibar)
    cplx b_factor;
};

// PoleHit names the offending factor.
CFactorResult c_factor(const CFactorInput& in);

struct ConvexityPoint {
    i64 q;
    double max_abs;   // max over nonprincipal chi mod q and t in grid
    double at_t;
    i64 at_index;
};

struct ConvexityScan {
    std::vector<ConvexityPoint> points;
    double fitted_exponent;  // OLS slope of log max|L| against log q
    double fit_intercept;
};

// scans primes q <= q_max
ConvexityScan convexity_scan(i64 q_max, const std::vector<double>& t_grid);

}  // namespace ampsum::lfunc
