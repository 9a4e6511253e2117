#include "ampsum/amplifier.hpp"

#include <cmath>

namespace ampsum::amplifier {

i64 prime_pi(i64 x) {
    if (x < 2) return 0;
    return (i64)primes_up_to(x).size();
}

HeckeSequence::HeckeSequence(std::uint64_t seed, i64 prime_cap,
                             const arith::DirichletCharacter& character)
    : prime_cap_(prime_cap), character_(character) {
    if (prime_cap < 2) throw Error("HeckeSequence: prime_cap must be >= 2");
    Rng rng(seed);
    for (i64 p : primes_up_to(prime_cap)) {
        double theta = rng.next_unit() * PI;
        double lp = 2.0 * std::cos(theta);
        if (std::abs(lp) > 2.0) ramanujan_ok_ = false;
        // chi(p) real for the sequences exercised here; complex nebentypus
        // values are folded through their real part only in report mode
        double chp = character_(p).real();
        std::vector<double> tbl;
        tbl.push_back(1.0);
        tbl.push_back(lp);
        for (int j = 1; j < 40; ++j)
            tbl.push_back(tbl[j] * lp - chp * tbl[j - 1]);
        tables_[p] = std::move(tbl);
    }
}

double HeckeSequence::at_prime_power(i64 p, int j) const {
    auto it = tables_.find(p);
    if (it == tables_.end()) throw Error("HeckeSequence: prime beyond cap");
    if (j < 0 || j >= (int)it->second.size()) throw Error("HeckeSequence: power beyond table");
    return it->second[(size_t)j];
}

double HeckeSequence::operator()(i64 n) const {
    if (n <= 0) throw Error("HeckeSequence: n must be positive");
    double v = 1.0;
    for (auto [p, e] : factorize(n)) v *= at_prime_power(p, e);
    return v;
}

double HeckeSequence::recursion_residual(i64 p, int j) const {
    if (j < 1) throw Error("recursion_residual: j >= 1");
    double chp = character_(p).real();
    return at_prime_power(p, 1) * at_prime_power(p, j) - at_prime_power(p, j + 1) -
           chp * at_prime_power(p, j - 1);
}

HeckeSequence satake_sequence(std::uint64_t seed, i64 prime_cap,
                              const arith::DirichletCharacter& character) {
    return HeckeSequence(seed, prime_cap, character);
}

AmplifierVector kmv_coefficients(const HeckeSequence& lambda, i64 L) {
    if (L < 1) throw Error("kmv_coefficients: L must be >= 1");
    AmplifierVector out;
    out.L = L;
    out.norm_sq = 0.0;
    out.linear_form = 0.0;
    i64 root = (i64)std::floor(std::sqrt((double)L));
    while ((root + 1) * (root + 1) <= L) ++root;
    while (root * root > L) --root;
    auto primes = primes_up_to(root);
    out.prime_count = (i64)primes.size();
    for (i64 p : primes) {
        double lp = lambda.at_prime_power(p, 1);
        double lp2 = lambda.at_prime_power(p, 2);
        out.x.emplace_back(p, lp);
        out.x.emplace_back(p * p, -1.0);
        out.norm_sq += lp * lp + 1.0;
        // grouped per prime: x_p lambda(p) + x_{p^2} lambda(p^2) = lp^2 - lp2,
        // which the recursion makes exactly 1 for the trivial character
        out.linear_form += lp * lp - lp2;
    }
    return out;
}

HeckeSquareReport hecke_square_expand(const std::vector<std::pair<i64, double>>& x,
                                      const HeckeSequence& lambda) {
    HeckeSquareReport rep;
    rep.asserted = lambda.trivial_character();
    double lin = 0.0;
    for (auto& [l, xl] : x) lin += xl * lambda(l);
    rep.direct = lin * lin;
    double exp_sum = 0.0;
    for (auto& [l1, x1] : x) {
        for (auto& [l2, x2] : x) {
            double inner = 0.0;
            i64 g = igcd(l1, l2);
            for (i64 k = 1; k <= g; ++k) {
                if (g % k != 0) continue;
                inner += lambda((l1 / k) * (l2 / k));
            }
            exp_sum += x1 * x2 * inner;
        }
    }
    rep.expanded = exp_sum;
    rep.residual = std::abs(rep.direct - rep.expanded);
    return rep;
}

std::vector<LowerBoundPoint> amplifier_lower_bound_check(const HeckeSequence& lambda,
                                                         const std::vector<i64>& L_ladder) {
    if (!lambda.trivial_character())
        throw NontrivialCharacter("amplifier_lower_bound_check: trivial character only");
    std::vector<LowerBoundPoint> out;
    for (i64 L : L_ladder) {
        auto vec = kmv_coefficients(lambda, L);
        LowerBoundPoint pt;
        pt.L = L;
        pt.linear_form_sq = vec.linear_form * vec.linear_form;
        pt.ratio = pt.linear_form_sq / (double)L;
        double pr = (double)vec.prime_count / std::sqrt((double)L);
        pt.floor_value = 0.1 * pr * pr;
        pt.holds = pt.ratio >= pt.floor_value;
        out.push_back(pt);
    }
    return out;
}

}  // namespace ampsum::amplifier
