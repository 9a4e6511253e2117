// Shared basics: error types, exact rational phases, deterministic RNG,
// small integer number theory helpers used across all modules.
#pragma once

#include <cstdint>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ampsum {

using cplx = std::complex<double>;
inline constexpr double PI = 3.141592653589793238462643383279502884;
inline constexpr double TWO_PI = 2.0 * PI;
inline constexpr double EULER_GAMMA = 0.577215664901532860606512090082402431;

inline const char* version() { return "ampsum 0.1.0"; }

// ---- errors ----------------------------------------------------------------

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

#define AMPSUM_ERROR(Name)                                       \
    struct Name : Error {                                        \
        explicit Name(const std::string& m = #Name) : Error(m) {} \
    }

AMPSUM_ERROR(NonInvertible);
AMPSUM_ERROR(EvenModulus);
AMPSUM_ERROR(Overflow);
AMPSUM_ERROR(BadTwist);
AMPSUM_ERROR(NotCoprime);
AMPSUM_ERROR(DNotDividesN);
AMPSUM_ERROR(MismatchedClasses);
AMPSUM_ERROR(TruncationMismatch);
AMPSUM_ERROR(Divergent);
AMPSUM_ERROR(PoleAt1);
AMPSUM_ERROR(NotPrimitive);
AMPSUM_ERROR(PoleHit);
AMPSUM_ERROR(QuadratureFailure);
AMPSUM_ERROR(ContourOutOfStrip);
AMPSUM_ERROR(RegimeGap);
AMPSUM_ERROR(BadSpectralTag);
AMPSUM_ERROR(NontrivialCharacter);
AMPSUM_ERROR(Degenerate);
AMPSUM_ERROR(ConfigError);
AMPSUM_ERROR(CacheCorrupt);

#undef AMPSUM_ERROR

// ---- integer helpers --------------------------------------------------------

using i64 = std::int64_t;
using i128 = __int128_t;

inline i64 igcd(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { i64 t = a % b; a = b; b = t; }
    return a;
}

inline i64 imod(i64 a, i64 m) {  // representative in [0, m)
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// Extended gcd: returns g and x with a*x = g (mod m') context handled by caller.
inline i64 egcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    i64 x1, y1;
    i64 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
    return (i64)((i128)a * b % m);
}

inline i64 powmod(i64 b, i64 e, i64 m) {
    b = imod(b, m);
    i64 r = 1 % m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<i64> primes_up_to(i64 n);

// prime -> exponent, ascending prime order
std::vector<std::pair<i64, int>> factorize(i64 n);

inline i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, e] : factorize(n)) r -= r / p;
    return r;
}

// ---- exact rational phases ---------------------------------------------------
//
// A phase is a rational number num/den interpreted mod 1.  All bijection and
// reindexing identities are exact statements about such phases, so they are
// compared as reduced fractions, with complex evaluation only at the end.

struct Frac {
    i64 num = 0;
    i64 den = 1;

    Frac() = default;
    Frac(i64 n, i64 d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw Error("Frac: zero denominator");
        if (den < 0) { den = -den; num = -num; }
        num %= den;
        if (num < 0) num += den;
        i64 g = igcd(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    Frac operator+(const Frac& o) const {
        i64 g = igcd(den, o.den);
        i128 d = (i128)(den / g) * o.den;
        i128 n = (i128)num * (o.den / g) + (i128)o.num * (den / g);
        i128 nn = n % d;
        if (nn < 0) nn += d;
        i128 a = nn, b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { nn /= a; d /= a; }
        if (d > INT64_MAX) throw Overflow("Frac overflow");
        Frac r;
        r.num = (i64)nn;
        r.den = (i64)d;
        if (r.num == 0) r.den = 1;
        return r;
    }

    bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
};

// e(a/c) = exp(2*pi*i*a/c) with the argument reduced mod c first.
inline cplx unit_phase(i64 a, i64 c) {
    if (c < 0) { a = -a; c = -c; }
    a = imod(a, c);
    double t = TWO_PI * (double)a / (double)c;
    return {std::cos(t), std::sin(t)};
}

inline cplx unit_phase(const Frac& f) { return unit_phase(f.num, f.den); }

// e(z) for real z
inline cplx ec(double z) {
    double t = TWO_PI * z;
    return {std::cos(t), std::sin(t)};
}

// ---- deterministic RNG --------------------------------------------------------
//
// splitmix64; fully specified so that seeded runs are byte-identical across
// platforms (std:: distributions are implementation-defined).

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double next_unit() {  // in [0, 1)
        return (double)(next_u64() >> 11) * 0x1.0p-53;
    }
    i64 next_below(i64 n) {  // in [0, n)
        return (i64)(next_u64() % (std::uint64_t)n);
    }
};

}  // namespace ampsum
