#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oca/gf.hpp"

using namespace oca;

TEST_CASE("prime field arithmetic") {
    FieldSpec f(5);
    CHECK(f.add(3, 4) == 2);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.neg(2) == 3);
    CHECK(f.inv(2) == 3);
    CHECK(f.sub(1, 4) == 2);
    CHECK_THROWS(f.inv(0));
}

TEST_CASE("GF(4) with the least irreducible x^2+x+1") {
    FieldSpec f(4);
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == 2);
    // 2 encodes x; x*x = x+1 encodes 3
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.add(2, 3) == 1);
    CHECK(f.add(1, 1) == 0);
}

TEST_CASE("taylor coefficients by synthetic division") {
    FieldSpec f(5);
    // f(x) = (x+1)^2 = x^2+2x+1; around alpha=1: 4 + 4(x-1) + (x-1)^2
    auto c = taylor_coefficients(f, Poly{1, 2, 1}, 1, 3);
    CHECK(c == std::vector<int>{4, 4, 1});
    CHECK(poly_eval(f, Poly{1, 2, 1}, 1) == 4);
}

TEST_CASE("taylor expansion reconstructs the polynomial") {
    std::mt19937 rng(7);
    for (int v : {3, 4, 5, 7, 8, 9}) {
        FieldSpec f(v);
        for (int trial = 0; trial < 50; ++trial) {
            int deg = 1 + static_cast<int>(rng() % 4);
            Poly p(deg + 1);
            for (auto& coef : p) coef = static_cast<int>(rng() % v);
            int alpha = static_cast<int>(rng() % v);
            auto c = taylor_coefficients(f, p, alpha, deg + 1);
            for (int x = 0; x < v; ++x) {
                int shifted = f.sub(x, alpha);
                int acc = 0, pw = 1;
                for (int d = 0; d <= deg; ++d) {
                    acc = f.add(acc, f.mul(c[d], pw));
                    pw = f.mul(pw, shifted);
                }
                CHECK(acc == poly_eval(f, p, x));
            }
        }
    }
}

TEST_CASE("field axioms hold for all orders up to 16") {
    for (int v : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        FieldSpec f(v);
        for (int a = 0; a < v; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < v; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < v && a < 6; ++c) {
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                    CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
                }
            }
        }
        // multiplicative group: nonzero products never vanish
        for (int a = 1; a < v; ++a)
            for (int b = 1; b < v; ++b) CHECK(f.mul(a, b) != 0);
    }
}

TEST_CASE("prime power recognition") {
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(9));
    CHECK(is_prime_power(16));
    CHECK(is_prime_power(27));
    CHECK(is_prime_power(49));
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(15));
}

TEST_CASE("non prime powers are rejected") {
    CHECK_THROWS_AS(FieldSpec(6), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec(1), std::invalid_argument);
}
