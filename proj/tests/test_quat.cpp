#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "regulus/errors.hpp"
#include "regulus/quat.hpp"

using namespace regulus;
using oracles::table_mul;

namespace {
const Quaternion e1 = Quaternion::basis(1);
const Quaternion e2 = Quaternion::basis(2);
const Quaternion e3 = Quaternion::basis(3);
const Quaternion e4 = Quaternion::basis(4);
}  // namespace

TEST_CASE("basis products match the structure-constant table") {
    for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
            const Quaternion got = Quaternion::basis(i) * Quaternion::basis(j);
            const Quaternion want = table_mul(Quaternion::basis(i), Quaternion::basis(j));
            CAPTURE(i);
            CAPTURE(j);
            CHECK(got == want);
        }
    }
    CHECK(e2 * e3 == e4);
    CHECK(e3 * e4 == e2);
    CHECK(e4 * e2 == e3);
    CHECK(e2 * e2 == -e1);
    CHECK(e3 * e3 == -e1);
    CHECK(e4 * e4 == -e1);
    CHECK(e3 * e2 == -e4);
}

TEST_CASE("general products match the table oracle") {
    oracles::Rng rng(31337);
    for (int k = 0; k < 200; ++k) {
        const Quaternion a = rng.quat(-4.0, 4.0);
        const Quaternion b = rng.quat(-4.0, 4.0);
        CHECK(max_abs_diff(a * b, table_mul(a, b)) <= 1e-12 * (1.0 + max_abs(table_mul(a, b))));
    }
    // exact on small integers
    const Quaternion a(1, -2, 3, 0);
    const Quaternion b(0, 4, -1, 2);
    CHECK(a * b == table_mul(a, b));
}

TEST_CASE("squaring 1 + e2 gives 2 e2") {
    const Quaternion q = e1 + e2;
    CHECK(q * q == 2.0 * e2);
    CHECK(q * q == table_mul(q, q));
}

TEST_CASE("identity is two-sided") {
    oracles::Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        const Quaternion q = rng.quat();
        CHECK(q * e1 == q);
        CHECK(e1 * q == q);
    }
}

TEST_CASE("componentwise operations") {
    CHECK(e1 + (-e1) == Quaternion());
    CHECK(2.0 * e3 == Quaternion(0, 0, 2, 0));
    CHECK(-(e2 + e4) == Quaternion(0, -1, 0, -1));
}

TEST_CASE("conjugate, norm, inverse") {
    CHECK(conj(Quaternion(1, 2, 3, 4)) == Quaternion(1, -2, -3, -4));
    CHECK(norm_sq(e1 + e2 + e3 + e4) == doctest::Approx(4.0));
    CHECK(inv(e2) == -e2);
    CHECK(inv(2.0 * e1) == 0.5 * e1);
    CHECK_THROWS_AS(inv(Quaternion()), DomainError);
}

TEST_CASE("associativity on random samples") {
    oracles::Rng rng(99);
    // exact for small integer components
    const Quaternion ia(1, -1, 2, 0), ib(0, 3, -2, 1), ic(2, 0, 1, -1);
    CHECK((ia * ib) * ic == ia * (ib * ic));
    for (int k = 0; k < 200; ++k) {
        const Quaternion a = rng.quat();
        const Quaternion b = rng.quat();
        const Quaternion c = rng.quat();
        const Quaternion lhs = (a * b) * c;
        const Quaternion rhs = a * (b * c);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * (1.0 + max_abs(lhs)));
    }
}

TEST_CASE("norm is multiplicative") {
    oracles::Rng rng(123);
    for (int k = 0; k < 200; ++k) {
        const Quaternion a = rng.quat();
        const Quaternion b = rng.quat();
        const double lhs = norm_sq(a * b);
        const double rhs = norm_sq(a) * norm_sq(b);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("conjugation reverses products") {
    oracles::Rng rng(321);
    for (int k = 0; k < 100; ++k) {
        const Quaternion a = rng.quat();
        const Quaternion b = rng.quat();
        const Quaternion lhs = conj(a * b);
        const Quaternion rhs = conj(b) * conj(a);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * (1.0 + max_abs(lhs)));
    }
}

TEST_CASE("a times inv(a) is the identity away from zero") {
    oracles::Rng rng(555);
    int checked = 0;
    while (checked < 100) {
        const Quaternion a = rng.quat();
        if (norm_sq(a) < 1e-8) continue;
        ++checked;
        CHECK(max_abs_diff(a * inv(a), e1) <= 1e-12);
    }
}

TEST_CASE("report text form") {
    CHECK(to_string(Quaternion(1, 2, 3, 4)) == "1 + 2 i + 3 j + 4 k");
    CHECK(to_string(Quaternion(0.5, -2, 0, 1)) == "0.5 - 2 i + 0 j + 1 k");
}
