#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "regulus/axial.hpp"
#include "regulus/errors.hpp"

using namespace regulus;
using namespace regulus::axial;
using oracles::pow_oracle;

namespace {
const Quaternion e1 = Quaternion::basis(1);
const Quaternion e2 = Quaternion::basis(2);
const Quaternion e3 = Quaternion::basis(3);

double pair_f0(const RegularFn& f, const Vec4& p) { return pair_of(f).f0(p); }
double pair_f1(const RegularFn& f, const Vec4& p) { return pair_of(f).f1(p); }
}  // namespace

TEST_CASE("power evaluation against repeated multiplication") {
    const Quaternion q = e1 + e2;
    CHECK(eval(power(2), q) == 2.0 * e2);
    CHECK(max_abs_diff(eval(power(2), q), pow_oracle(q, 2)) == 0.0);
    CHECK(eval(power(3), q) == Quaternion(-2, 2, 0, 0));
    CHECK(max_abs_diff(eval(power(3), q), pow_oracle(q, 3)) <= 1e-15);
}

TEST_CASE("exponential at (pi/2) e2 lands on e2") {
    const Quaternion q = (M_PI / 2.0) * e2;
    CHECK(max_abs_diff(eval(exp_fn(), q), e2) <= 1e-15);
}

TEST_CASE("constants evaluate on the identity axis") {
    oracles::Rng rng(5);
    for (int k = 0; k < 10; ++k)
        CHECK(eval(constant(2.5), rng.quat()) == Quaternion::real(2.5));
}

TEST_CASE("built-in pairs") {
    oracles::Rng rng(17);
    for (int k = 0; k < 50; ++k) {
        const Vec4 p = rng.vec4();
        const double rho = rho_of(p);
        // one recursion step from (f0, f1) = (1, q1): expanding (q1 + v)^2
        // with v^2 = -rho gives f1 = q1^2 - rho, f0 = 2 q1
        CHECK(pair_f1(power(2), p) == doctest::Approx(p[0] * p[0] - rho).epsilon(1e-13));
        CHECK(pair_f0(power(2), p) == doctest::Approx(2.0 * p[0]).epsilon(1e-13));
        // identity pair
        CHECK(pair_f0(identity(), p) == 1.0);
        CHECK(pair_f1(identity(), p) == p[0]);
    }
    // two recursion steps at (1,1,0,0): f1 = q1^3 - 3 q1 rho, f0 = 3 q1^2 - rho
    CHECK(pair_f1(power(3), {1, 1, 0, 0}) == doctest::Approx(-2.0));
    CHECK(pair_f0(power(3), {1, 1, 0, 0}) == doctest::Approx(2.0));
    // exponential pair at (0, pi/2, 0, 0)
    CHECK(std::abs(pair_f1(exp_fn(), {0, M_PI / 2, 0, 0})) <= 1e-15);
    CHECK(pair_f0(exp_fn(), {0, M_PI / 2, 0, 0}) == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
}

TEST_CASE("sum and scale") {
    const RegularFn zero = sum(power(1), scale_fn(-1.0, power(1)));
    oracles::Rng rng(23);
    for (int k = 0; k < 20; ++k)
        CHECK(max_abs_diff(eval(zero, rng.quat()), Quaternion()) == 0.0);

    CHECK(eval(scale_fn(3.0, identity()), e2) == 3.0 * e2);
    CHECK(max_abs_diff(eval(sum(power(2), constant(1)), e2), Quaternion()) == 0.0);
}

TEST_CASE("product matches quaternion multiplication of the evaluations") {
    // product(Identity, Identity) has the same pair as Power(2)
    oracles::Rng rng(29);
    const RegularFn sq = product(identity(), identity());
    for (int k = 0; k < 50; ++k) {
        const Vec4 p = rng.vec4();
        CHECK(pair_f0(sq, p) == doctest::Approx(pair_f0(power(2), p)).epsilon(1e-14));
        CHECK(pair_f1(sq, p) == doctest::Approx(pair_f1(power(2), p)).epsilon(1e-14));
    }

    const RegularFn f = power(2);
    const RegularFn g = exp_fn();
    const Quaternion q = e1 + e3;
    const Quaternion direct = eval(f, q) * eval(g, q);
    CHECK(max_abs_diff(eval(product(f, g), q), direct) <= 1e-12 * (1.0 + max_abs(direct)));

    for (int k = 0; k < 20; ++k) {
        const Quaternion r = rng.quat();
        CHECK(max_abs_diff(eval(product(constant(2), f), r), eval(scale_fn(2.0, f), r)) == 0.0);
    }
}

TEST_CASE("products commute exactly by the symmetric pair rule") {
    oracles::Rng rng(31);
    const RegularFn f = sum(power(3), constant(1));
    const RegularFn g = product(exp_fn(), identity());
    for (int k = 0; k < 50; ++k) {
        const Vec4 p = rng.vec4_off_axis();
        const Quaternion q = Quaternion::from_vec(p);
        CHECK(max_abs_diff(eval(product(f, g), q), eval(product(g, f), q)) == 0.0);
    }
}

TEST_CASE("reciprocal") {
    CHECK(max_abs_diff(eval(reciprocal(identity()), e2), -e2) == 0.0);
    oracles::Rng rng(37);
    for (int k = 0; k < 50; ++k) {
        const Vec4 p = rng.vec4_off_axis(1e-2);
        const double n = p[0] * p[0] + rho_of(p);
        CHECK(pair_f1(reciprocal(identity()), p) == doctest::Approx(p[0] / n).epsilon(1e-13));
        CHECK(pair_f0(reciprocal(identity()), p) == doctest::Approx(-1.0 / n).epsilon(1e-13));
        // f * (1/f) = e1 on the domain
        const Quaternion q = Quaternion::from_vec(p);
        const RegularFn f = sum(power(2), constant(1));
        if (!in_domain(reciprocal(f), p)) continue;
        const Quaternion prod = eval(f, q) * eval(reciprocal(f), q);
        CHECK(max_abs_diff(prod, e1) <= 1e-12);
    }
    for (int k = 0; k < 20; ++k) {
        CHECK(eval(reciprocal(constant(2)), rng.quat()) == Quaternion::real(0.5));
    }
    CHECK_THROWS_AS(eval(reciprocal(identity()), Quaternion()), DomainError);
}

TEST_CASE("empty-domain construction is allowed, evaluation refuses") {
    const RegularFn bad = reciprocal(constant(0));
    oracles::Rng rng(41);
    for (int k = 0; k < 10; ++k) {
        const Vec4 p = rng.vec4();
        CHECK_FALSE(in_domain(bad, p));
        CHECK_THROWS_AS(eval(bad, Quaternion::from_vec(p)), DomainError);
    }
}

TEST_CASE("composition") {
    oracles::Rng rng(43);
    const RegularFn p2p3 = compose(power(2), power(3));
    int checked = 0;
    while (checked < 100) {
        const Quaternion q = rng.quat();
        if (norm_sq(q) < 1e-2) continue;
        ++checked;
        const Quaternion want = pow_oracle(q, 6);
        CHECK(max_abs_diff(eval(p2p3, q), want) <= 1e-9 * (1.0 + max_abs(want)));
    }

    const RegularFn f = sum(power(2), constant(1));
    for (int k = 0; k < 30; ++k) {
        const Quaternion q = rng.quat();
        CHECK(max_abs_diff(eval(compose(identity(), f), q), eval(f, q)) == 0.0);
        CHECK(max_abs_diff(eval(compose(f, identity()), q), eval(f, q)) == 0.0);
        CHECK(eval(compose(exp_fn(), constant(0)), q) == Quaternion::real(1.0));
    }

    // evaluation equals nested evaluation
    for (int k = 0; k < 50; ++k) {
        const Quaternion q = rng.quat();
        const Quaternion inner = eval(f, q);
        const Quaternion want = eval(exp_fn(), inner);
        const Quaternion got = eval(compose(exp_fn(), f), q);
        CHECK(max_abs_diff(got, want) <= 1e-9 * (1.0 + max_abs(want)));
    }
}

TEST_CASE("representation soundness for powers up to 12") {
    oracles::Rng rng(47);
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k < 100; ++k) {
            const Quaternion q = rng.quat();
            const Quaternion want = pow_oracle(q, n);
            CHECK(max_abs_diff(eval(power(n), q), want) <= 1e-9 * (1.0 + max_abs(want)));
        }
    }
    // negative powers off zero
    for (int n : {-1, -2, -3}) {
        int checked = 0;
        while (checked < 100) {
            const Quaternion q = rng.quat();
            if (norm_sq(q) < 1e-2) continue;
            ++checked;
            const Quaternion want = pow_oracle(q, n);
            CHECK(max_abs_diff(eval(power(n), q), want) <= 1e-9 * (1.0 + max_abs(want)));
        }
    }
}

TEST_CASE("exponential circle law on a fixed imaginary direction") {
    oracles::Rng rng(53);
    for (int k = 0; k < 50; ++k) {
        Quaternion u = imag(rng.quat());
        if (norm_sq(u) < 1e-2) continue;
        u = (1.0 / norm(u)) * u;
        const double s = rng.uniform(-2.0, 2.0);
        const double t = rng.uniform(-2.0, 2.0);
        const Quaternion lhs = eval(exp_fn(), s * u) * eval(exp_fn(), t * u);
        const Quaternion rhs = eval(exp_fn(), (s + t) * u);
        CHECK(max_abs_diff(lhs, rhs) <= 1e-9 * (1.0 + max_abs(rhs)));
    }
}

TEST_CASE("regularity domains") {
    CHECK(in_domain(exp_fn(), {1, 0.5, 0, 0}));
    CHECK_FALSE(in_domain(exp_fn(), {1, 0, 0, 0}));  // real axis excluded
    CHECK(in_domain(power(-1), {0, 1, 0, 0}));
    CHECK_FALSE(in_domain(power(-1), {0, 0, 0, 0}));
    CHECK(in_domain(power(5), {0, 0, 0, 0}));
    // exp value still extends onto the axis even though the domain excludes it
    const Quaternion on_axis = Quaternion::real(0.7);
    CHECK(max_abs_diff(eval(exp_fn(), on_axis), Quaternion::real(std::exp(0.7))) <= 1e-14);
}

TEST_CASE("jet and real evaluations agree in value") {
    oracles::Rng rng(59);
    const RegularFn f = product(sum(power(2), constant(1)), compose(exp_fn(), power(1)));
    const AxialPair pair = pair_of(f);
    for (int k = 0; k < 50; ++k) {
        const Vec4 p = rng.vec4_off_axis();
        const JetVec4 jp = jet_point(p);
        CHECK(pair.f0(p) == doctest::Approx(pair.f0_jet(jp).val).epsilon(1e-14));
        CHECK(pair.f1(p) == doctest::Approx(pair.f1_jet(jp).val).epsilon(1e-14));
    }
}
