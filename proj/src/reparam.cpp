#include "ampsum/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ampsum::reparam {

std::set<PairClass> enumerate_X(i64 c1, i64 c2, i64 n) {
    if (c1 <= 0 || c2 <= 0) throw Error("enumerate_X: moduli must be positive");
    std::set<PairClass> out;
    // (x, y) lifts with c2 x + c1 y = n exist iff c2 x + c1 y == n (mod c1 c2)
    i64 m = c1 * c2;
    for (i64 x = 0; x < c1; ++x) {
        if (igcd(x, c1) != 1 && c1 != 1) continue;
        for (i64 y = 0; y < c2; ++y) {
            if (igcd(y, c2) != 1 && c2 != 1) continue;
            if (imod(c2 * x + c1 * y - n, m) == 0) out.insert({x, y, c1, c2, n});
        }
    }
    return out;
}

std::set<RClass> enumerate_Y(i64 c1, i64 c2, i64 n) {
    if (n == 0) throw Error("enumerate_Y: n = 0 handled by zero_n_classify");
    i64 d = igcd(c1, c2);
    i64 an = n < 0 ? -n : n;
    if (an % d != 0) throw DNotDividesN("enumerate_Y: gcd(c1,c2) does not divide n");
    std::set<RClass> out;
    i64 c1d = c1 / d, c2d = c2 / d;
    for (i64 r = 0; r < an; ++r) {
        if (igcd(r, an) != 1 && an != 1) continue;
        // (a'): (c1/d) r + (c2/d) == 0 (mod n/d)
        if (imod(c1d * r + c2d, an / d) != 0) continue;
        // (b'): not 0 mod n/d' for any proper divisor d' of d
        bool minimal = true;
        for (i64 dp = 1; dp < d && minimal; ++dp) {
            if (d % dp != 0) continue;
            if (imod(c1d * r + c2d, an / dp) == 0) minimal = false;
        }
        if (minimal) out.insert({r, d});
    }
    return out;
}

std::set<PairClass> zero_n_classify(i64 c1, i64 c2) {
    std::set<PairClass> out;
    if (c1 != c2) {
        // c2 x + c1 y == 0 (mod c1 c2) forces c1 = c2 for unit x, y:
        // verified by the exhaustive enumeration as well
        return enumerate_X(c1, c2, 0);
    }
    for (i64 x = 0; x < c1; ++x) {
        if (igcd(x, c1) != 1 && c1 != 1) continue;
        out.insert({x, imod(-x, c2), c1, c2, 0});
    }
    return out;
}

i64 r1_of_class(const PairClass& cls) {
    if (cls.n == 0) throw Error("r1_of_class: n must be nonzero");
    i64 an = cls.n < 0 ? -cls.n : cls.n;
    i64 xbar = cls.c1 == 1 ? 0 : arith::mod_inverse(cls.x, cls.c1).value;
    // n xbar == c2 (mod c1), so r1 = (n xbar - c2)/c1 is an integer
    i64 num = cls.n * xbar - cls.c2;
    if (num % cls.c1 != 0) throw Error("r1_of_class: lift not integral");
    return imod(num / cls.c1, an);
}

BijectionReport bijection_check(i64 c1, i64 c2, i64 n) {
    if (n == 0) throw Error("bijection_check: n = 0 handled by zero_n_classify");
    i64 d = igcd(c1, c2);
    i64 an = n < 0 ? -n : n;
    if (an % d != 0) throw DNotDividesN("bijection_check: gcd(c1,c2) does not divide n");

    auto X = enumerate_X(c1, c2, n);
    auto Y = enumerate_Y(c1, c2, n);
    BijectionReport rep;
    rep.x_count = (i64)X.size();
    rep.y_count = (i64)Y.size();
    rep.counts_match = rep.x_count == rep.y_count;

    std::set<i64> images;
    bool formulas_ok = true, onto_ok = true;
    for (const auto& cls : X) {
        i64 r1 = r1_of_class(cls);
        images.insert(r1);
        if (an != 1 && igcd(r1, an) != 1) { formulas_ok = false; continue; }
        i64 r2 = an == 1 ? 0 : arith::mod_inverse(r1, an).value;

        // the inverse-formula lifts must be exact integers
        i64 num_x = cls.c2 + cls.c1 * r1;
        i64 num_y = cls.c1 + cls.c2 * r2;
        if (num_x % n != 0 || num_y % n != 0) { formulas_ok = false; continue; }
        i64 xbar = num_x / n, ybar = num_y / n;
        if (imod(xbar * cls.x - 1, c1) != 0) formulas_ok = false;
        if (imod(ybar * cls.y - 1, c2) != 0) formulas_ok = false;
        if (Y.find({r1, d}) == Y.end()) onto_ok = false;

        rep.witnesses.push_back({cls, r1, r2, xbar, ybar});
    }
    rep.injective = (i64)images.size() == rep.x_count;
    rep.onto = onto_ok && (i64)images.size() == rep.y_count;
    rep.inverse_formulas_exact = formulas_ok;
    return rep;
}

PhaseReport phase_identity_check(const PairClass& cls, const RClass& r, i64 l, i64 lp) {
    i64 n = cls.n;
    if (n == 0) throw Error("phase_identity_check: n must be nonzero");
    i64 an = n < 0 ? -n : n;
    if (r1_of_class(cls) != imod(r.r, an) || r.d != igcd(cls.c1, cls.c2))
        throw MismatchedClasses("phase_identity_check: (class, r) are not bijection partners");

    i64 r1 = imod(r.r, an);
    i64 r2 = an == 1 ? 0 : arith::mod_inverse(r1, an).value;
    i64 xbar = (cls.c2 + cls.c1 * r1) / n;
    i64 ybar = (cls.c1 + cls.c2 * r2) / n;

    PhaseReport rep;
    rep.lhs = Frac(l * xbar, cls.c1) + Frac(lp * ybar, cls.c2);
    Frac t1(l * r1 + lp * r2, n);
    Frac t2(l * cls.c2 * cls.c2 + lp * cls.c1 * cls.c1, n * cls.c1 * cls.c2);
    rep.rhs = t1 + t2;
    rep.exact_equal = (rep.lhs == rep.rhs);
    rep.complex_residual = std::abs(unit_phase(rep.lhs) - unit_phase(rep.rhs));
    return rep;
}

// ---- reindexing identity -----------------------------------------------------
//
// Both sides enumerate the same triples (C1, C2, n) with p | C1, q | C2,
// C1 <= cap1, C2 <= cap2 and kernel(n) != 0:
//
//  lhs: sum over unit pairs (x, y) and the k making n = C2 x + C1 y - k C1 C2,
//       weight chi(xbar) psi(ybar) e(l xbar/C1 + l' ybar/C2) / (C1 C2);
//  rhs: n != 0 terms through the r-class parametrization (n, r, d, c1', la),
//       C1 = d c1', C2 = d c2', c2' = -(c1' r + la n/d), (la, c1' d) = 1,
//       (c1', n/d) = 1, with the rewritten phase
//       e((l r + l' rbar)/n) e((l C2^2 + l' C1^2)/(n C1 C2)) and character
//       factor chi(-la) psi(ybar) from the exact lifts (xbar = -la); when
//       gcd(n, pq) = 1 this factor equals the product form
//       chi(C2) psi(C1) conj(chi psi)(n), which is asserted term by term;
//       plus the n = 0 branch over C1 = C2 = c, pq | c, classes (x, -x).

ReindexReport reindex_sum_check(const ReindexConfig& cfg) {
    if (cfg.p == cfg.q) throw Error("reindex_sum_check: p and q must be distinct");
    if (!cfg.kernel) throw Error("reindex_sum_check: kernel required");
    const i64 p = cfg.p, q = cfg.q;
    const i64 l = cfg.geom.l, lp = cfg.geom.lp;
    const auto& chi = cfg.chi;
    const auto& psi = cfg.psi;
    if (chi.modulus() != p || psi.modulus() != q)
        throw BadTwist("reindex_sum_check: characters must live mod p and mod q");

    auto kernel_at = [&](i64 n) { return cfg.kernel((double)n); };
    // the kernel must vanish outside the stated support
    for (i64 n = cfg.n_cap + 1; n <= cfg.n_cap + 3; ++n)
        if (kernel_at(n) != 0.0 || kernel_at(-n) != 0.0)
            throw TruncationMismatch("reindex_sum_check: kernel escapes |n| <= n_cap");

    ReindexReport rep;

    // ---- lhs: (C1, C2, x, y, k) ------------------------------------------------
    cplx lhs = 0.0;
    for (i64 C1 = p; C1 <= cfg.c1_cap; C1 += p) {
        for (i64 C2 = q; C2 <= cfg.c2_cap; C2 += q) {
            const double measure = 1.0 / ((double)C1 * (double)C2);
            const i64 m = C1 * C2;
            for (i64 x = 0; x < C1; ++x) {
                if (igcd(x, C1) != 1 && C1 != 1) continue;
                i64 xbar = C1 == 1 ? 0 : arith::mod_inverse(x, C1).value;
                for (i64 y = 0; y < C2; ++y) {
                    if (igcd(y, C2) != 1 && C2 != 1) continue;
                    i64 base = C2 * x + C1 * y;  // n = base - k m
                    // k window so that |n| <= n_cap
                    i64 k_lo = (i64)std::floor((double)(base - cfg.n_cap) / (double)m) - 1;
                    i64 k_hi = (i64)std::ceil((double)(base + cfg.n_cap) / (double)m) + 1;
                    i64 ybar = C2 == 1 ? 0 : arith::mod_inverse(y, C2).value;
                    cplx char_phase =
                        chi(xbar) * psi(ybar) *
                        unit_phase(Frac(l * xbar, C1) + Frac(lp * ybar, C2));
                    for (i64 k = k_lo; k <= k_hi; ++k) {
                        i64 n = base - k * m;
                        if (n < -cfg.n_cap || n > cfg.n_cap) continue;
                        double K = kernel_at(n);
                        if (K == 0.0) continue;
                        lhs += measure * K * char_phase;
                        ++rep.lhs_terms;
                    }
                }
            }
        }
    }

    // ---- rhs: n = 0 branch -------------------------------------------------------
    cplx rhs = 0.0;
    i64 pq = p * q;
    double K0 = kernel_at(0);
    if (K0 != 0.0) {
        for (i64 c = pq; c <= std::min(cfg.c1_cap, cfg.c2_cap); c += pq) {
            double measure = K0 / ((double)c * (double)c);
            for (i64 x = 0; x < c; ++x) {
                if (igcd(x, c) != 1 && c != 1) continue;
                i64 xbar = c == 1 ? 0 : arith::mod_inverse(x, c).value;
                // y = -x, ybar = -xbar; phase (l - l') xbar / c
                rhs += measure * chi(xbar) * psi(-xbar) *
                       unit_phase(imod((l - lp) * xbar, c), c);
                ++rep.rhs_terms;
            }
        }
    }

    // ---- rhs: n != 0 via (n, r, d, c1', lambda) ---------------------------------
    bool forms_agree = true;
    const auto chibar = chi.conj();
    const auto psibar = psi.conj();
    struct RangeResult {
        cplx acc = 0.0;
        i64 terms = 0;
        cplx nc_mass = 0.0;
        i64 nc_terms = 0;
    };
    auto add_range = [&](i64 extra_window, bool counting_only) -> RangeResult {
        RangeResult rr;
        cplx& acc = rr.acc;
        i64& terms = rr.terms;
        for (i64 n = -cfg.n_cap; n <= cfg.n_cap; ++n) {
            if (n == 0) continue;
            double K = kernel_at(n);
            if (K == 0.0) continue;
            i64 an = n < 0 ? -n : n;
            bool n_coprime = igcd(an, pq) == 1;
            for (i64 d = 1; d <= an; ++d) {
                if (an % d != 0) continue;
                i64 nd = n / d;  // signed n/d
                for (i64 c1p = 1; d * c1p <= cfg.c1_cap; ++c1p) {
                    if ((d * c1p) % p != 0) continue;
                    if (igcd(c1p, an / d) != 1 && an / d != 1) continue;
                    for (i64 r = 0; r < an; ++r) {
                        if (igcd(r, an) != 1 && an != 1) continue;
                        i64 rbar = an == 1 ? 0 : arith::mod_inverse(r, an).value;
                        // lambda window: c2' = -(c1' r + la * n/d) in (0, cap2/d]
                        i64 c2_cap_d = cfg.c2_cap / d;
                        // solve 0 < -(c1p*r + la*nd) <= c2_cap_d over integers la
                        i64 lo, hi;
                        if (nd > 0) {
                            // la <= -(c1p r + 1)/nd ... la >= -(c1p r + cap)/nd
                            lo = (i64)std::ceil((double)(-(c1p * r) - c2_cap_d) / (double)nd) - extra_window;
                            hi = (i64)std::floor((double)(-(c1p * r) - 1) / (double)nd) + extra_window;
                        } else {
                            lo = (i64)std::ceil((double)(c1p * r + 1) / (double)(-nd)) - extra_window;
                            hi = (i64)std::floor((double)(c1p * r + c2_cap_d) / (double)(-nd)) + extra_window;
                        }
                        for (i64 la = lo; la <= hi; ++la) {
                            i64 c2p = -(c1p * r + la * nd);
                            if (c2p <= 0 || c2p > c2_cap_d) continue;
                            if (igcd(la, c1p * d) != 1) continue;
                            i64 C1 = d * c1p, C2 = d * c2p;
                            if (C2 % q != 0) continue;
                            if (counting_only) { ++terms; continue; }

                            // exact lifts: xbar = (C2 + C1 r)/n = -la
                            i64 xbar = -la;
                            i64 num_y = C1 + C2 * rbar;
                            if (num_y % n != 0)
                                throw Error("reindex: ybar lift not integral");
                            i64 ybar = num_y / n;

                            cplx charf = chi(xbar) * psi(ybar);
                            Frac ph = Frac(l * r + lp * rbar, n) +
                                      Frac(l * C2 * C2 + lp * C1 * C1, n * C1 * C2);
                            cplx term = (K / ((double)C1 * (double)C2)) * charf * unit_phase(ph);
                            if (n_coprime) {
                                cplx pform = chi(C2) * psi(C1) * chibar(n) * psibar(n);
                                if (std::abs(charf - pform) > 1e-12) forms_agree = false;
                            } else {
                                rr.nc_mass += term;
                                ++rr.nc_terms;
                            }
                            acc += term;
                            ++terms;
                        }
                    }
                }
            }
        }
        return rr;
    };

    RangeResult main_rr = add_range(0, false);
    rhs += main_rr.acc;
    rep.rhs_terms += main_rr.terms;
    rep.noncoprime_terms = main_rr.nc_terms;
    rep.noncoprime_mass = main_rr.nc_mass;

    // boundary audit: widening the lambda window must add nothing
    RangeResult wide_rr = add_range(3, true);
    rep.boundary_clean = (wide_rr.terms == main_rr.terms);

    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.difference = std::abs(lhs - rhs);
    rep.char_factor_forms_agree = forms_agree;
    return rep;
}

}  // namespace ampsum::reparam
