// Equivalence classes X(c1,c2,n) of pairs (x, y) with c2 x + c1 y = n, the
// r-class set Y(c1,c2,n), the bijection between them with its inverse
// formulas, the exact phase rewrite, the n = 0 classification, and the
// finite reindexing identity relating the (c1,c2,x,y,k) and (n,r,d,lambda)
// parametrizations of the double Kloosterman sum.
#pragma once

#include <functional>
#include <set>

#include "ampsum/arith.hpp"
#include "ampsum/common.hpp"
#include "ampsum/testfunc.hpp"

namespace ampsum::reparam {

struct PairClass {
    i64 x, y;    // representatives in [0, c1), [0, c2)
    i64 c1, c2;
    i64 n;
    bool operator<(const PairClass& o) const {
        return std::tie(x, y) < std::tie(o.x, o.y);
    }
    bool operator==(const PairClass& o) const { return x == o.x && y == o.y; }
};

struct RClass {
    i64 r;  // unit representative in [0, |n|)
    i64 d;  // gcd(c1, c2)
    bool operator<(const RClass& o) const { return r < o.r; }
};

// one representative per class; oracle-exact by full enumeration
std::set<PairClass> enumerate_X(i64 c1, i64 c2, i64 n);

// all r in (Z/n)* meeting conditions (a') and (b'); DNotDividesN if gcd(c1,c2)
// does not divide n, and n = 0 is rejected (see zero_n_classify)
std::set<RClass> enumerate_Y(i64 c1, i64 c2, i64 n);

// X(c1, c2, 0): empty unless c1 = c2, in which case the classes {(x, -x)}
std::set<PairClass> zero_n_classify(i64 c1, i64 c2);

// the map (x, y) -> r1 and the exact inverse formulas
struct BijectionWitness {
    PairClass cls;
    i64 r1, r2;       // unit classes mod |n| with r1 r2 == 1 (mod n)
    i64 xbar_lift;    // (c2 + c1 r1)/n, an exact integer
    i64 ybar_lift;    // (c1 + c2 r2)/n
};

struct BijectionReport {
    i64 x_count = 0;
    i64 y_count = 0;
    bool counts_match = false;
    bool injective = false;
    bool onto = false;
    bool inverse_formulas_exact = false;
    std::vector<BijectionWitness> witnesses;
    bool pass() const {
        return counts_match && injective && onto && inverse_formulas_exact;
    }
};

BijectionReport bijection_check(i64 c1, i64 c2, i64 n);

// r1 class attached to (x, y) in X(c1, c2, n); n != 0
i64 r1_of_class(const PairClass& cls);

struct PhaseReport {
    Frac lhs;       // l*xbar/c1 + l'*ybar/c2 reduced mod 1
    Frac rhs;       // (l*r + l'*rbar)/n + (l*c2^2 + l'*c1^2)/(n*c1*c2)
    bool exact_equal;
    double complex_residual;
};

// Exact check of
//   e(l xbar/c1 + l' ybar/c2)
//     = e((l r + l' rbar)/n) * e((l c2^2 + l' c1^2)/(n c1 c2)),
// for the lifts of the inverse formulas; MismatchedClasses if (cls, r) are
// not bijection partners.
PhaseReport phase_identity_check(const PairClass& cls, const RClass& r, i64 l, i64 lp);

// ---- reindexing identity -----------------------------------------------------

struct ReindexGeometry {
    i64 l;       // phase numerator paired with xbar/c1
    i64 lp;      // phase numerator paired with ybar/c2
};

struct ReindexConfig {
    i64 p = 3, q = 5;               // c1 = 0 (p), c2 = 0 (q)
    i64 c1_cap = 45, c2_cap = 45;   // hard truncation on the moduli
    i64 n_cap = 30;                 // kernel support bound, |n| <= n_cap
    ReindexGeometry geom{1, 2};
    // kernel in n; compactly supported within [-n_cap, n_cap]
    std::function<double(double)> kernel;
    arith::DirichletCharacter chi, psi;  // mod p, mod q
};

struct ReindexReport {
    cplx lhs;              // (c1,c2,x,y,k) parametrization
    cplx rhs;              // (n,r,d,lambda) parametrization + n = 0 branch
    double difference;
    i64 lhs_terms = 0;
    i64 rhs_terms = 0;
    i64 noncoprime_terms = 0;   // terms with gcd(n, pq) > 1 (exact-lift branch)
    cplx noncoprime_mass = 0.0;
    bool char_factor_forms_agree = true;  // product form vs exact lifts, coprime n
    bool boundary_clean = false;          // widened windows add no terms
    bool pass(double tol) const {
        return difference < tol && boundary_clean && char_factor_forms_agree &&
               lhs_terms == rhs_terms;
    }
};

ReindexReport reindex_sum_check(const ReindexConfig& cfg);

}  // namespace ampsum::reparam
