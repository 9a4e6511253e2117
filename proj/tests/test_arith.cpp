#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>

#include "ampsum/arith.hpp"

using namespace ampsum;
using namespace ampsum::arith;

TEST_CASE("mod_inverse basics and exhaustive oracle") {
    CHECK(mod_inverse(1, 7).value == 1);
    // oracle: exhaustive search
    auto by_search = [](i64 a, i64 c) {
        for (i64 b = 0; b < c; ++b)
            if (imod(a * b, c) == 1 % c) return b;
        return (i64)-1;
    };
    CHECK(mod_inverse(2, 5).value == by_search(2, 5));
    CHECK(mod_inverse(2, 5).value == 3);
    CHECK(mod_inverse(3, 7).value == 5);
    for (i64 c = 1; c <= 40; ++c)
        for (i64 a = 0; a < c; ++a) {
            if (igcd(a, c) != 1 && c != 1) continue;
            CHECK(mod_inverse(a, c).value == by_search(a, c));
        }
    CHECK_THROWS_AS(mod_inverse(4, 8), NonInvertible);
}

TEST_CASE("jacobi agrees with square detection at odd primes") {
    CHECK(jacobi(1, 3) == 1);
    CHECK(jacobi(2, 3) == -1);
    CHECK(jacobi(-4, 5) == 1);
    CHECK_THROWS_AS(jacobi(3, 8), EvenModulus);
    for (i64 p : primes_up_to(100)) {
        if (p == 2) continue;
        std::vector<bool> sq((size_t)p, false);
        for (i64 x = 0; x < p; ++x) sq[(size_t)imod(x * x, p)] = true;
        for (i64 a = 0; a < p; ++a) {
            int expect = (a == 0) ? 0 : (sq[(size_t)a] ? 1 : -1);
            CHECK(jacobi(a, p) == expect);
        }
    }
    // multiplicative in the lower argument across odd moduli
    CHECK(jacobi(2, 15) == jacobi(2, 3) * jacobi(2, 5));
}

TEST_CASE("kronecker extension") {
    CHECK(kronecker(5, 1) == 1);
    CHECK(kronecker(3, 8) == -1);   // (3/2)^3: 3 = 3 mod 8 -> -1 each
    CHECK(kronecker(17, 8) == 1);   // 17 = 1 mod 8
    CHECK(kronecker(4, 6) == 0);
    for (i64 p : {3, 5, 7, 11}) {
        for (i64 a = 1; a < p; ++a) CHECK(kronecker(a, p) == jacobi(a, p));
    }
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    // Sum over divisors of mu is the identity at 1
    for (i64 n = 2; n <= 200; ++n) {
        i64 s = 0;
        for (i64 d = 1; d <= n; ++d)
            if (n % d == 0) s += mobius(d);
        CHECK(s == 0);
    }
}

TEST_CASE("ramanujan_f worked values") {
    for (i64 m : {-3, 0, 1, 4, 10}) CHECK(ramanujan_f(1, m) == 1);
    CHECK(ramanujan_f(2, 3) == -1);
    CHECK(ramanujan_f(6, 4) == -1);
    // oracle: direct sum of mu(n/b) b over b | (m, n)
    auto direct = [](i64 n, i64 m) {
        i64 s = 0;
        for (i64 b = 1; b <= n; ++b) {
            if (n % b != 0) continue;
            if (m != 0 && m % b != 0) continue;
            s += mobius(n / b) * b;
        }
        return s;
    };
    for (i64 n = 1; n <= 60; ++n)
        for (i64 m = 0; m <= 30; ++m) CHECK(ramanujan_f(n, m) == direct(n, m));
}

TEST_CASE("ramanujan_f multiplicative in n for coprime factorizations") {
    for (i64 n = 1; n <= 100; ++n) {
        for (i64 a = 2; a * a <= n; ++a) {
            if (n % a != 0) continue;
            i64 b = n / a;
            if (igcd(a, b) != 1) continue;
            for (i64 m : {1, 2, 5, 12, 30})
                CHECK(ramanujan_f(n, m) == ramanujan_f(a, m) * ramanujan_f(b, m));
        }
    }
}

TEST_CASE("char_group sizes and structure") {
    CHECK(char_group(1).size() == 1);
    auto g5 = char_group(5);
    CHECK(g5.size() == 4);
    int principal = 0, real_nonprincipal = 0;
    for (auto& c : g5) {
        if (c.is_principal()) ++principal;
        else if (c.is_real()) ++real_nonprincipal;
    }
    CHECK(principal == 1);
    CHECK(real_nonprincipal == 1);
    CHECK(char_group(8).size() == 4);
    CHECK(char_group(16).size() == 8);
    CHECK(char_group(12).size() == 4);
}

TEST_CASE("character invariants across moduli") {
    for (i64 q = 1; q <= 36; ++q) {
        auto grp = char_group(q);
        CHECK((i64)grp.size() == euler_phi(q));
        for (auto& chi : grp) {
            CHECK(chi.order() >= 1);
            CHECK(euler_phi(q) % chi.order() == 0);
            // chi(n) = 0 iff gcd > 1; |chi| = 1 on units; periodicity; chi(1)=1
            CHECK(std::abs(chi(1) - cplx(1.0, 0.0)) < 1e-14);
            for (i64 n = 0; n < q; ++n) {
                if (q > 1 && igcd(n, q) != 1) {
                    CHECK(std::abs(chi(n)) == 0.0);
                } else {
                    CHECK(std::abs(std::abs(chi(n)) - 1.0) < 1e-14);
                    CHECK(std::abs(chi(n + q) - chi(n)) < 1e-14);
                }
            }
        }
        // exactly one principal; closure under conjugation
        int principal = 0;
        for (auto& chi : grp)
            if (chi.is_principal()) ++principal;
        CHECK(principal == 1);
    }
}

TEST_CASE("complete multiplicativity table check, q <= 50") {
    for (i64 q = 1; q <= 50; ++q) {
        for (auto& chi : char_group(q)) {
            for (i64 a = 0; a < q; ++a)
                for (i64 b = a; b < q; ++b) {
                    cplx lhs = chi(a) * chi(b);
                    cplx rhs = chi(imod(a * b, q));
                    CHECK(std::abs(lhs - rhs) < 1e-13);
                }
        }
    }
}

TEST_CASE("multiplicativity spot check on larger moduli") {
    Rng rng(99);
    for (i64 q : {121, 160, 200}) {
        auto grp = char_group(q);
        for (auto& chi : {grp[1], grp[grp.size() - 1]}) {
            for (int it = 0; it < 300; ++it) {
                i64 a = rng.next_below(q), b = rng.next_below(q);
                CHECK(std::abs(chi(a) * chi(b) - chi(imod(a * b, q))) < 1e-13);
            }
        }
    }
}

TEST_CASE("gauss sums") {
    // principal chi mod p: Ramanujan sum c_p(1) = mu(p) = -1
    for (i64 p : {3, 5, 7, 11}) {
        auto grp = char_group(p);
        CHECK(std::abs(gauss_sum(grp[0]) - cplx(-1.0, 0.0)) < 1e-12);
    }
    // quadratic character mod 5: tau = sqrt(5), real positive
    auto g5 = char_group(5);
    for (auto& chi : g5) {
        if (!chi.is_principal() && chi.is_real()) {
            cplx t = gauss_sum(chi);
            CHECK(std::abs(t - cplx(std::sqrt(5.0), 0.0)) < 1e-12);
        }
    }
    // any primitive chi mod 7: |tau| = sqrt(7)
    for (auto& chi : char_group(7)) {
        if (chi.is_principal()) continue;
        CHECK(std::abs(std::abs(gauss_sum(chi)) - std::sqrt(7.0)) < 1e-10);
    }
}

TEST_CASE("gauss sum magnitude for every primitive character, q <= 60") {
    for (i64 q = 3; q <= 60; ++q) {
        for (auto& chi : char_group(q)) {
            if (!chi.is_primitive() || chi.is_principal()) continue;
            CHECK(std::abs(std::abs(gauss_sum(chi)) - std::sqrt((double)q)) < 1e-9);
        }
    }
}

TEST_CASE("conductors and primitivity") {
    // mod 8: principal (cond 1), mod-4 induced (cond 4), two primitive (cond 8)
    auto g8 = char_group(8);
    std::map<i64, int> by_cond;
    for (auto& c : g8) by_cond[c.conductor()]++;
    CHECK(by_cond[1] == 1);
    CHECK(by_cond[4] == 1);
    CHECK(by_cond[8] == 2);
    // prime modulus: all nonprincipal characters primitive
    for (auto& c : char_group(13))
        CHECK(c.is_primitive() == !c.is_principal());
}

TEST_CASE("character labels are deterministic and principal is index 0") {
    auto a = char_group(35);
    auto b = char_group(35);
    CHECK(a[0].is_principal());
    for (size_t j = 0; j < a.size(); ++j) {
        CHECK(a[j].index() == (i64)j);
        for (i64 n = 0; n < 35; ++n) CHECK(a[j](n) == b[j](n));
    }
}

TEST_CASE("product characters multiply pointwise") {
    auto chi = char_group(3)[1];
    auto psi = char_group(5)[2];
    auto prod = product(chi, psi);
    CHECK(prod.modulus() == 15);
    for (i64 n = 0; n < 15; ++n)
        CHECK(std::abs(prod(n) - chi(n) * psi(n)) < 1e-13);
    // conjugation
    auto cc = chi.conj();
    for (i64 n = 0; n < 3; ++n) CHECK(std::abs(cc(n) - std::conj(chi(n))) < 1e-14);
}

TEST_CASE("table limit overflow") {
    CHECK_THROWS_AS(char_group(kTableLimit + 1), Overflow);
}
