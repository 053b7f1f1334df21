#include "bargheat/errors.hpp"
#include "bargheat/operators.hpp"
#include "bargheat/suites.hpp"
#include "testing.hpp"

#include <numbers>

using namespace bargheat;
using namespace bargheat::ops;

namespace {

constexpr Kind kAllKinds[] = {Kind::DiracReal,    Kind::DiracComplex, Kind::EulerReal,
                              Kind::EulerComplex, Kind::HarmonicReal, Kind::HarmonicComplex};
constexpr Identity kAllIdentities[] = {Identity::LadderPosition, Identity::LadderMomentum, Identity::LadderLowering,
                                       Identity::LadderRaising,  Identity::HarmonicToEuler, Identity::EulerToHarmonic};

} // namespace

TEST_CASE("names round trip") {
    for (Kind k : kAllKinds) CHECK(parse_kind(kind_name(k)) == k);
    CHECK_FALSE(parse_kind("dirac").has_value());
    CHECK(kind_name(Kind::HarmonicComplex) == "harmonic-complex");
    CHECK(side_of(Kind::EulerReal) == Side::Real);
    CHECK(side_of(Kind::DiracComplex) == Side::Complex);
    CHECK_THROWS_AS(Operator(Kind::DiracReal, 0.0), DomainError);
}

TEST_CASE("apply examples") {
    for (double a : {0.5, 1.0, 2.0}) {
        INFO("a=" << a);
        const PolyGauss ground = PolyGauss::gaussian(Side::Real, 1.0, -a / 2.0);
        CHECK(distance(apply({Kind::HarmonicReal, a}, ground), -a * ground) <= 1e-15);
        CHECK(apply({Kind::DiracReal, a}, PolyGauss::gaussian(Side::Real, 1.0, a / 2.0)).is_zero());
        for (int n = 0; n <= 5; ++n) {
            const PolyGauss xn = PolyGauss::monomial(Side::Real, n);
            CHECK(distance(apply({Kind::EulerReal, a}, xn), (a * n) * xn) <= 1e-15);
            const PolyGauss zn = PolyGauss::monomial(Side::Complex, n);
            CHECK(distance(apply({Kind::EulerComplex, a}, zn), (-a * (2 * n + 1)) * zn) <= 1e-15);
        }
    }
    CHECK_THROWS_AS(apply({Kind::DiracReal, 1.0}, PolyGauss::constant(Side::Complex, 1.0)), UsageError);
    CHECK_THROWS_AS(apply({Kind::HarmonicComplex, 1.0}, PolyGauss::constant(Side::Real, 1.0)), UsageError);
}

TEST_CASE("apply on the complex Dirac operator") {
    const double a = 2.0;
    const PolyGauss F(Side::Complex, {1.0, 3.0});
    // (1/a) 3 + (z/2)(1 + 3z)
    CHECK(distance(apply({Kind::DiracComplex, a}, F), PolyGauss(Side::Complex, {1.5, 0.5, 1.5})) <= 1e-15);
}

TEST_CASE("apply is linear") {
    const PolyGauss f(Side::Real, {1.0, 0.0, -2.0}, -0.4, 0.2);
    const PolyGauss g(Side::Real, {0.0, {0.0, 1.0}, 1.0, 0.3}, -0.4, 0.2);
    const cplx l{0.7, -0.2}, m{-1.5, 1.0};
    for (Kind k : kAllKinds) {
        const Operator op(k, 1.3);
        const PolyGauss F = f.with_side(op.side()), G = g.with_side(op.side());
        CHECK(distance(apply(op, l * F + m * G), l * apply(op, F) + m * apply(op, G)) <= 1e-14);
    }
}

TEST_CASE("factorizations") {
    for (double a : {0.5, 1.0, 2.0}) {
        CHECK(factor_check({Kind::HarmonicReal, a}, PolyGauss::gaussian(Side::Real, 1.0, -a / 2.0)) <= 1e-15);
        CHECK(factor_check({Kind::HarmonicComplex, a}, PolyGauss::monomial(Side::Complex, 3)) <= 1e-15);
        CHECK(factor_check({Kind::HarmonicReal, a}, PolyGauss::zero(Side::Real)) == 0.0);
        for (const auto& f : suites::intertwine_set(a)) {
            CHECK(factor_check({Kind::HarmonicReal, a}, f) <= 1e-13);
            CHECK(factor_check({Kind::HarmonicComplex, a}, f.with_side(Side::Complex)) <= 1e-13);
        }
        // without the constant shift the product is off by exactly a g
        const PolyGauss g(Side::Real, {1.0, 2.0}, -0.3);
        const PolyGauss hg = apply({Kind::HarmonicReal, a}, g);
        CHECK(unshifted_factorization_defect(a, g) == doctest::Approx(distance(hg, hg + a * g)).epsilon(1e-12));
        CHECK(unshifted_factorization_defect(a, g) > 0.1);
    }
    CHECK_THROWS_AS(factor_check({Kind::DiracReal, 1.0}, PolyGauss::constant(Side::Real, 1.0)), UsageError);
}

TEST_CASE("intertwining examples") {
    for (double a : {0.5, 1.0, 2.0}) {
        const PolyGauss ground = PolyGauss::gaussian(Side::Real, 1.0, -a / 2.0);
        CHECK(intertwine_residual(Identity::LadderLowering, ground, a) <= 1e-15);
        CHECK(intertwine_residual(Identity::HarmonicToEuler, times_var(ground), a) <= 1e-15);
        for (Identity id : kAllIdentities) CHECK(intertwine_residual(id, PolyGauss::zero(Side::Real), a) == 0.0);
    }
    // left side of the lowering identity on the ground state: B(-2 a x g) = -a z (pi/a)^{1/4}
    const double a = 1.0;
    const PolyGauss ground = PolyGauss::gaussian(Side::Real, 1.0, -a / 2.0);
    const PolyGauss lhs = bargmann_image(apply({Kind::DiracReal, a}, ground), a);
    CHECK(distance(lhs, PolyGauss(Side::Complex, {0.0, -a * std::pow(std::numbers::pi / a, 0.25)})) <= 1e-15);
}

TEST_CASE("all identities hold on the test family") {
    for (double a : {0.5, 1.0, 2.0})
        for (const auto& f : suites::intertwine_set(a))
            for (Identity id : kAllIdentities) {
                INFO(identity_name(id) << " a=" << a << " " << to_record(f));
                CHECK(intertwine_residual(id, f, a) <= 1e-12);
            }
}

TEST_CASE("eigen structure") {
    for (double a : {0.5, 1.0, 2.0})
        for (int n = 0; n <= 2; ++n) {
            const PolyGauss h = suites::hermite_state(a, n);
            CHECK(h.degree() == n);
            CHECK(distance(apply({Kind::HarmonicReal, a}, h), (-a * (2 * n + 1)) * h) <= 1e-14);
        }
}
