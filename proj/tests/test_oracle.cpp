#include <doctest.h>

#include <stdexcept>

#include "f1zeta/arith.hpp"
#include "f1zeta/oracle.hpp"
#include "f1zeta/poly.hpp"

using namespace f1zeta;

TEST_CASE("lyndon_count: pinned values") {
    CHECK(lyndon_count(2, 1) == 2);
    CHECK(lyndon_count(2, 6) == 9);  // 54 aperiodic strings / 6
    CHECK(lyndon_count(1, 3) == 0);
    CHECK(lyndon_count(1, 1) == 1);
    CHECK(lyndon_count(0, 4) == 0);
    CHECK(lyndon_count(3, 2) == 3);  // (9 - 3) / 2
    for (int a = 0; a <= 8; ++a) CHECK(lyndon_count(a, 1) == a);
}

TEST_CASE("lyndon_count: envelope") {
    CHECK_THROWS_AS(lyndon_count(9, 3), std::domain_error);
    CHECK_THROWS_AS(lyndon_count(2, 15), std::domain_error);
    CHECK_THROWS_AS(lyndon_count(2, 0), std::domain_error);
    CHECK_THROWS_AS(lyndon_count(-1, 3), std::domain_error);
}

TEST_CASE("lyndon_count: agrees with the divisor-sum formula") {
    for (int a = 1; a <= 5; ++a)
        for (int n = 1; n <= 10; ++n) {
            CAPTURE(a);
            CAPTURE(n);
            CHECK(lyndon_count(a, n) == kappa(a, n));
        }
}

TEST_CASE("FieldSpec: construction and rejection") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64}) {
        const FieldSpec f = FieldSpec::make(q);
        CHECK(f.q() == q);
        int pe = 1;
        for (int i = 0; i < f.e(); ++i) pe *= f.p();
        CHECK(pe == q);
    }
    CHECK_THROWS_AS(FieldSpec::make(1), std::domain_error);
    CHECK_THROWS_AS(FieldSpec::make(6), std::domain_error);
    CHECK_THROWS_AS(FieldSpec::make(12), std::domain_error);
    CHECK_THROWS_AS(FieldSpec::make(65), std::domain_error);
}

TEST_CASE("FieldSpec: multiplicative structure is a field") {
    for (int q : {4, 8, 9, 16, 25, 27, 32, 49, 64}) {
        const FieldSpec f = FieldSpec::make(q);
        CAPTURE(q);
        for (int x = 0; x < q; ++x) {
            CHECK(f.mul(1, x) == x);
            CHECK(f.mul(x, 0) == 0);
            bool has_inverse = false;
            for (int y = 0; y < q; ++y) {
                CHECK(f.mul(x, y) == f.mul(y, x));
                if (x != 0 && y != 0) CHECK(f.mul(x, y) != 0);  // no zero divisors
                if (f.mul(x, y) == 1) has_inverse = true;
            }
            if (x != 0) CHECK(has_inverse);
        }
        // spot-check associativity on a grid
        for (int x = 1; x < q; x += 3)
            for (int y = 1; y < q; y += 5)
                for (int z = 1; z < q; z += 7)
                    CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
    }
}

TEST_CASE("count_affine: examples and envelope") {
    CHECK(count_affine(2, FieldSpec::make(3)) == 9);
    CHECK(count_affine(0, FieldSpec::make(5)) == 1);
    CHECK(count_affine(3, FieldSpec::make(2)) == 8);
    CHECK_THROWS_AS(count_affine(8, FieldSpec::make(8)), std::domain_error);  // 8^8 > 10^7
    CHECK_THROWS_AS(count_affine(-1, FieldSpec::make(2)), std::domain_error);
}

TEST_CASE("count_torus: examples") {
    CHECK(count_torus(2, FieldSpec::make(3)) == 4);
    CHECK(count_torus(1, FieldSpec::make(2)) == 1);
    CHECK(count_torus(3, FieldSpec::make(4)) == 27);
    CHECK(count_torus(0, FieldSpec::make(7)) == 1);
    CHECK_THROWS_AS(count_torus(9, FieldSpec::make(64)), std::domain_error);
}

TEST_CASE("count_projective: examples") {
    CHECK(count_projective(1, FieldSpec::make(3)) == 4);
    CHECK(count_projective(2, FieldSpec::make(2)) == 7);
    CHECK(count_projective(1, FieldSpec::make(5)) == 6);
    CHECK(count_projective(1, FieldSpec::make(4)) == 5);
    CHECK(count_projective(2, FieldSpec::make(4)) == 21);
    CHECK_THROWS_AS(count_projective(0, FieldSpec::make(3)), std::domain_error);
    CHECK_THROWS_AS(count_projective(8, FieldSpec::make(9)), std::domain_error);
}

TEST_CASE("count_product: examples") {
    CHECK(count_product({BigInt(4), BigInt(4)}) == 16);
    CHECK(count_product({}) == 1);
    CHECK(count_product({BigInt(6), BigInt(9)}) == 54);
}

TEST_CASE("point counts equal the counting polynomials") {
    for (int q : {2, 3, 4, 9}) {
        const FieldSpec field = FieldSpec::make(q);
        for (int r = 0; r <= 3; ++r) {
            CAPTURE(q);
            CAPTURE(r);
            CHECK(count_affine(r, field) == IntPolynomial::monomial(1, r).eval(q));
            CHECK(count_torus(r, field) == shifted_power(r).eval(q));
        }
        CHECK(count_projective(1, field) == IntPolynomial({1, 1}).eval(q));
        CHECK(count_projective(2, field) == IntPolynomial({1, 1, 1}).eval(q));
    }
}
