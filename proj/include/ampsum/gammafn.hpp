// Complex gamma (Lanczos), log-gamma, Riemann and Hurwitz zeta by
// Euler-Maclaurin; the scalar special functions everything else leans on.
#pragma once

#include "ampsum/common.hpp"

namespace ampsum {

cplx cgamma(cplx z);
cplx clgamma(cplx z);  // principal branch, accurate for Re(z) > 0

// Riemann zeta, complex s != 1
cplx zeta(cplx s);

// Hurwitz zeta(s, alpha), 0 < alpha <= 1, s != 1
cplx hurwitz_zeta(cplx s, double alpha);

}  // namespace ampsum
