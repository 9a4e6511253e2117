// Exact modular and multiplicative arithmetic: residues, inverses, Jacobi and
// Kronecker symbols, Moebius, Dirichlet characters, Gauss sums and the
// divisor sum f_n(m).
#pragma once

#include <memory>
#include <optional>

#include "ampsum/common.hpp"

namespace ampsum::arith {

// default table limits; moduli beyond these throw Overflow
inline constexpr i64 kSymbolLimit = 1'000'000;
inline constexpr i64 kTableLimit = 100'000;

struct Residue {
    i64 value;    // in [0, modulus)
    i64 modulus;  // > 0
};

// b with a*b == 1 (mod c); NonInvertible if gcd(a, c) > 1
Residue mod_inverse(i64 a, i64 c);

// Jacobi symbol (a/n), n odd positive; EvenModulus otherwise
int jacobi(i64 a, i64 n);

// Kronecker symbol (a/n) for n >= 1 (n = 1 and even n handled by the
// standard extension); used for the quadratic character (Delta/.)
int kronecker(i64 a, i64 n);

int mobius(i64 n);

// f_n(m) = sum_{b | (m, n)} mu(n/b) * b   (Ramanujan sum c_n(m))
i64 ramanujan_f(i64 n, i64 m);

// A Dirichlet character mod q stored as a full table of exponents: for a unit
// x, chi(x) = e(expo[x] / expo_den); expo[x] = -1 marks gcd(x, q) > 1.
class DirichletCharacter {
  public:
    // default: the trivial character mod 1
    DirichletCharacter() : expo_{0} {}

    i64 modulus() const { return q_; }
    i64 index() const { return index_; }
    i64 order() const { return order_; }
    bool is_principal() const { return order_ == 1; }
    bool is_primitive() const { return conductor_ == q_; }
    i64 conductor() const { return conductor_; }
    bool is_even() const { return even_; }  // chi(-1) == 1

    cplx operator()(i64 n) const {
        i64 e = expo_at(n);
        return e < 0 ? cplx(0.0, 0.0) : unit_phase(e, expo_den_);
    }
    // exponent of chi(n) as a fraction of a full turn; nullopt when chi(n)=0
    std::optional<Frac> phase(i64 n) const {
        i64 e = expo_at(n);
        if (e < 0) return std::nullopt;
        return Frac(e, expo_den_);
    }
    bool is_real() const { return order_ <= 2; }

    DirichletCharacter conj() const;

    // pointwise product as a character mod lcm(q1, q2)
    friend DirichletCharacter product(const DirichletCharacter& a,
                                      const DirichletCharacter& b);

  private:
    friend class CharGroup;
    i64 expo_at(i64 n) const { return expo_[imod(n, q_)]; }

    i64 q_ = 1;
    i64 index_ = 0;
    i64 order_ = 1;
    i64 conductor_ = 1;
    bool even_ = true;
    i64 expo_den_ = 1;
    std::vector<i64> expo_;  // size q_, exponent numerators, -1 on non-units
};

// The character group mod q.  Generators are chosen deterministically
// (<-1>, <5> for the 2-part, smallest primitive roots for odd prime powers,
// component order: 2-part first, then odd primes ascending).  Characters are
// indexed 0..phi(q)-1 by the lexicographic order of their exponent vectors,
// most significant component first; index 0 is principal.
class CharGroup {
  public:
    explicit CharGroup(i64 q);

    i64 modulus() const { return q_; }
    i64 size() const { return phi_; }  // number of characters
    DirichletCharacter character(i64 index) const;

  private:
    i64 q_;
    i64 phi_;
    // component j has order comp_order_[j]; log_[x] holds the exponent vector
    // of unit x packed per component; empty vector marks non-units.
    std::vector<i64> comp_order_;
    std::vector<std::vector<i64>> log_;  // size q_, per-unit exponent vectors
    i64 expo_den_;                       // lcm of component orders
};

// all phi(q) characters mod q in index order
std::vector<DirichletCharacter> char_group(i64 q);

DirichletCharacter product(const DirichletCharacter& a, const DirichletCharacter& b);

// tau(chi) = sum_x chi(x) e(x/q)
cplx gauss_sum(const DirichletCharacter& chi);

}  // namespace ampsum::arith
