// Synthetic Hecke-multiplicative sequences, the Hecke-square expansion of a
// short linear form, and the prime-counting collapse of the classical
// amplifier coefficient choice.
#pragma once

#include <map>

#include "ampsum/arith.hpp"
#include "ampsum/common.hpp"

namespace ampsum::amplifier {

class HeckeSequence {
  public:
    // lambda(ell) = 2 cos(theta_ell) at primes ell <= prime_cap, theta drawn
    // from the seeded generator; extended by the chi-twisted recursion
    // lambda(ell^{j+1}) = lambda(ell) lambda(ell^j) - chi(ell) lambda(ell^{j-1})
    // and multiplicatively across coprime arguments.
    HeckeSequence(std::uint64_t seed, i64 prime_cap,
                  const arith::DirichletCharacter& character);

    double operator()(i64 n) const;          // lambda(n), n >= 1 within cap
    double at_prime_power(i64 p, int j) const;
    bool trivial_character() const { return character_.is_principal() && character_.modulus() == 1; }
    const arith::DirichletCharacter& character() const { return character_; }
    i64 prime_cap() const { return prime_cap_; }
    bool ramanujan_ok() const { return ramanujan_ok_; }  // recorded, never used

    // residual of the Hecke relation at (p, j):
    // lambda(p) lambda(p^j) - lambda(p^{j+1}) - chi(p) lambda(p^{j-1})
    double recursion_residual(i64 p, int j) const;

  private:
    i64 prime_cap_;
    arith::DirichletCharacter character_;
    bool ramanujan_ok_ = true;
    std::map<i64, std::vector<double>> tables_;  // p -> lambda(p^j), j = 0..
};

HeckeSequence satake_sequence(std::uint64_t seed, i64 prime_cap,
                              const arith::DirichletCharacter& character);

struct AmplifierVector {
    i64 L;
    std::vector<std::pair<i64, double>> x;  // (l, x_l) on primes <= sqrt(L) and squares
    double norm_sq;                         // ||x||_2^2
    double linear_form;                     // sum_l x_l lambda(l), prime-grouped
    i64 prime_count;                        // pi(sqrt(L))
};

AmplifierVector kmv_coefficients(const HeckeSequence& lambda, i64 L);

struct HeckeSquareReport {
    double direct;     // |sum x_l lambda(l)|^2
    double expanded;   // sum_{l1,l2} x_{l1} x_{l2} sum_{k | (l1,l2)} lambda(l1 l2 / k^2)
    double residual;
    bool asserted;     // false (report-only) for nontrivial character
};

HeckeSquareReport hecke_square_expand(const std::vector<std::pair<i64, double>>& x,
                                      const HeckeSequence& lambda);

struct LowerBoundPoint {
    i64 L;
    double linear_form_sq;  // |sum x_l lambda(l)|^2 = pi(sqrt L)^2 for trivial chi
    double ratio;           // over L
    double floor_value;     // 0.1 (pi(sqrt L)/sqrt L)^2
    bool holds;
};

std::vector<LowerBoundPoint> amplifier_lower_bound_check(const HeckeSequence& lambda,
                                                         const std::vector<i64>& L_ladder);

i64 prime_pi(i64 x);

}  // namespace ampsum::amplifier
