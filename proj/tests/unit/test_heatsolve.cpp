#include "bargheat/errors.hpp"
#include "bargheat/heatsolve.hpp"
#include "bargheat/suites.hpp"
#include "bargheat/verify.hpp"
#include "testing.hpp"

#include <numbers>
#include <random>

using namespace bargheat;
using namespace bargheat::heat;
using ops::Kind;
using std::numbers::pi;

namespace {

const cplx I{0.0, 1.0};

PolyGauss real_init() { return PolyGauss(Side::Real, {1.0, 0.5, -0.25}, -0.6, 0.2); }
PolyGauss complex_init() { return PolyGauss(Side::Complex, {1.0, -0.5 * I, 0.3}, 0.1, {0.2, 0.1}); }

PolyGauss init_for(Kind k) { return ops::side_of(k) == Side::Real ? real_init() : complex_init(); }

constexpr Kind kAllKinds[] = {Kind::DiracReal,    Kind::DiracComplex, Kind::EulerReal,
                              Kind::EulerComplex, Kind::HarmonicReal, Kind::HarmonicComplex};

cplx probe(Kind k) { return ops::side_of(k) == Side::Real ? cplx(0.4) : cplx(0.4, -0.3); }

} // namespace

TEST_CASE("dirac flows") {
    const PolyGauss one_c = PolyGauss::constant(Side::Complex, 1.0);
    const PolyGauss one_r = PolyGauss::constant(Side::Real, 1.0);
    CHECK_REL(solve_dirac_complex(one_c, 1.0, 2.0, 0.0), std::exp(1.0), 1e-15);
    CHECK_REL(solve_dirac_complex(PolyGauss::monomial(Side::Complex, 1), 1.0, 1.0, 1.0), 2.0 * std::exp(0.75), 1e-15);
    CHECK_REL(solve_dirac_real(one_r, 1.0, 1.0, 0.0), std::exp(-0.5), 1e-15);
    CHECK_REL(solve_dirac_real(PolyGauss::gaussian(Side::Real, 1.0, -1.0), 2.0, 0.5, 1.0), std::exp(-3.5), 1e-15);
    const PolyGauss f = complex_init();
    CHECK_REL(solve_dirac_complex(f, 1.5, 0.0, {0.3, 0.3}), f(cplx(0.3, 0.3)), 1e-15);
    CHECK_REL(solve_dirac_real(real_init(), 1.5, 0.0, 0.3), real_init()(0.3), 1e-15);
}

TEST_CASE("euler flows") {
    const PolyGauss x2 = PolyGauss::monomial(Side::Real, 2);
    CHECK_REL(solve_euler_real(x2, 1.0, std::log(2.0), 1.0), 4.0, 1e-14);
    for (double t : {0.0, 0.5, 3.0}) CHECK_REL(solve_euler_real(real_init(), 0.7, t, 0.0), real_init()(0.0), 1e-15);
    CHECK_REL(solve_euler_real(real_init(), 0.7, 0.0, 1.3), real_init()(1.3), 1e-15);
    for (double a : {0.5, 2.0})
        CHECK_REL(solve_euler_complex(PolyGauss::constant(Side::Complex, 1.0), a, 0.8, {1.0, 2.0}), std::exp(-a * 0.8),
                  1e-15);
    CHECK_REL(solve_euler_complex(PolyGauss::monomial(Side::Complex, 1), 1.0, 1.0, 1.0), std::exp(-3.0), 1e-15);
    CHECK_REL(solve_euler_complex(complex_init(), 1.0, 0.0, I), complex_init()(I), 1e-15);
}

TEST_CASE("mehler kernel values") {
    CHECK(mehler_kernel(1.0, 0.25, 0.0, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * pi * std::sinh(0.5))).epsilon(1e-14));
    CHECK(mehler_kernel(1.0, 0.25, 0.0, 0.0) == doctest::Approx(0.55265166844956).epsilon(1e-12));
    const double t = 1e-4, x = 0.005, s = -0.005;
    const double heat = std::exp(-(x - s) * (x - s) / (4.0 * t)) / std::sqrt(4.0 * pi * t);
    CHECK(std::abs(mehler_kernel(1.0, t, x, s) / heat - 1.0) <= 1e-3);
    CHECK_THROWS_AS(mehler_kernel(1.0, 0.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(mehler_kernel(1.0, -0.1, 0.0, 0.0), DomainError);
}

TEST_CASE("mehler forms agree, kernel is symmetric and positive") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ua(0.3, 2.5), ut(0.05, 1.5), ux(-2.0, 2.0);
    for (int k = 0; k < 100; ++k) {
        const double a = ua(rng), t = ut(rng), x = ux(rng), s = ux(rng);
        const double p = mehler_kernel(a, t, x, s, MehlerForm::Product);
        CHECK(p > 0.0);
        CHECK(std::abs(p - mehler_kernel(a, t, x, s, MehlerForm::Hyperbolic)) <= 1e-12 * p);
        CHECK(std::abs(p - mehler_kernel(a, t, s, x)) <= 1e-12 * p);
        CHECK(mehler_kernel(a, t, x, s, MehlerForm::HyperbolicUnhalved) / p == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("harmonic real flow") {
    for (double a : {0.5, 1.0, 2.0})
        for (double t : {0.1, 0.7}) {
            const PolyGauss h0 = suites::hermite_state(a, 0), h1 = suites::hermite_state(a, 1);
            for (double x : {-1.0, 0.0, 0.6}) {
                INFO("a=" << a << " t=" << t << " x=" << x);
                CHECK_REL(solve_harmonic_real(h0, a, t, x), std::exp(-a * t) * h0(x), 1e-13);
                CHECK_REL(solve_harmonic_real(h1, a, t, x), std::exp(-3.0 * a * t) * h1(x), 1e-13);
                CHECK_REL(solve_harmonic_real(h1, a, t, x, Method::Quadrature), std::exp(-3.0 * a * t) * h1(x), 1e-10);
            }
        }
    const PolyGauss y0 = real_init();
    CHECK(solve_harmonic_real(y0, 1.0, 0.0, 0.3) == y0(0.3));
    CHECK_THROWS_AS(solve_harmonic_real(PolyGauss::gaussian(Side::Real, 1.0, 2.0), 1.0, 0.5, 0.0), DivergenceError);
}

TEST_CASE("harmonic real flow recovers the initial value at small t") {
    const PolyGauss y0 = PolyGauss::gaussian(Side::Real, 1.0, -1.0);
    double sup = 0.0;
    for (int k = 0; k <= 80; ++k) {
        const double x = -2.0 + k * 0.05;
        sup = std::max(sup, std::abs(solve_harmonic_real(y0, 1.0, 1e-3, x) - y0(x)));
    }
    CHECK(sup <= 0.01);
}

TEST_CASE("complex harmonic kernel") {
    for (double a : {0.5, 1.0, 2.0}) {
        for (cplx z : {cplx(0.0), cplx(0.5, -1.0)})
            for (cplx w : {cplx(0.0), cplx(-0.3, 0.2)})
                CHECK_REL(harmonic_kernel_complex(a, 0.0, z, w), std::exp((a / 2.0) * z * std::conj(w)), 1e-15);
        for (double t : {0.2, 1.0})
            CHECK_REL(harmonic_kernel_complex(a, t, 0.0, 0.0), std::exp(-a * t / 2.0) / std::sqrt(std::cosh(a * t)),
                      1e-15);
        CHECK_REL(harmonic_kernel_complex(a, 0.0, 0.0, 0.0, Prefactor::TwoI), 2.0 * I, 1e-15);
    }
    const KernelSpec spec{KernelFamily::ComplexHarmonic, 1.0, 0.4};
    CHECK_REL(kernel_value(spec, {0.2, 0.1}, {0.5, 0.5}), harmonic_kernel_complex(1.0, 0.4, {0.2, 0.1}, {0.5, 0.5}),
              0.0);
    const KernelSpec mehler{KernelFamily::Mehler, 1.0, 0.4};
    CHECK_REL(kernel_value(mehler, 0.2, -0.5), mehler_kernel(1.0, 0.4, 0.2, -0.5), 0.0);
}

TEST_CASE("complex harmonic flow") {
    const PolyGauss one = PolyGauss::constant(Side::Complex, 1.0);
    for (double a : {0.5, 1.0, 2.0})
        for (double t : {0.1, 0.8})
            for (cplx z : {cplx(0.0), cplx(1.0, 0.5), cplx(-0.7, -1.2)}) {
                const cplx want =
                    std::exp(-a * t / 2.0) / std::sqrt(std::cosh(a * t)) * std::exp(-(a / 4.0) * z * z * std::tanh(a * t));
                INFO("a=" << a << " t=" << t << " z=" << z);
                CHECK_REL(solve_harmonic_complex(one, a, t, z, Method::Series), want, 1e-13);
                CHECK_REL(solve_harmonic_complex(one, a, t, z, Method::Exact), want, 1e-14);
                CHECK_REL(solve_harmonic_complex(one, a, t, z, Method::Quadrature), want, 1e-9);
            }
    const PolyGauss V0 = complex_init();
    for (Method m : {Method::Series, Method::Exact})
        CHECK_REL(solve_harmonic_complex(V0, 1.0, 0.0, {0.3, 0.4}, m), V0(cplx(0.3, 0.4)), 1e-12);

    const PolyGauss z1 = PolyGauss::monomial(Side::Complex, 1);
    const auto taylor = verify::taylor_evolve({Kind::HarmonicComplex, 1.0}, z1, 0.1, 12, 1e-10);
    for (cplx z : {cplx(1.0), cplx(0.3, -0.6)}) CHECK_NEAR(solve_harmonic_complex(z1, 1.0, 0.1, z), taylor.value(z), 1e-6);
}

TEST_CASE("2i prefactor breaks reproduction by 2i") {
    const PolyGauss V0 = complex_init();
    const cplx z{0.4, 0.1};
    const cplx two_i = solve_harmonic_complex(V0, 1.0, 0.0, z, Method::Series, 64, Prefactor::TwoI);
    CHECK_REL(two_i / V0(z), 2.0 * I, 1e-12);
}

TEST_CASE("exact residual vanishes for every operator") {
    for (double a : {0.5, 1.0, 2.0})
        for (Kind k : kAllKinds)
            for (double t : {0.0, 0.3, 1.1}) {
                const HeatProblem p{{k, a}, t, init_for(k)};
                if (k == Kind::HarmonicReal && t == 0.0) continue;
                INFO(ops::kind_name(k) << " a=" << a << " t=" << t);
                CHECK(exact_residual(p) <= 1e-12);
            }
}

TEST_CASE("conjugation route agrees with the closed forms") {
    for (double a : {0.5, 1.0, 2.0})
        for (Kind k : kAllKinds)
            for (double t : {0.2, 0.9}) {
                const HeatProblem p{{k, a}, t, init_for(k)};
                const PolyGauss route = conjugation_image(p);
                const PolyGauss direct = solution_image(p);
                INFO(ops::kind_name(k) << " a=" << a << " t=" << t);
                for (cplx v : verify::default_probes(ops::side_of(k))) {
                    const cplx d = direct(v);
                    CHECK(std::abs(route(v) - d) <= 1e-8 * std::max(1.0, std::abs(d)));
                    CHECK(std::abs(solution_value(p, v) - d) <= 1e-12 * std::max(1.0, std::abs(d)));
                }
            }
}

TEST_CASE("solution_value rejects a side mismatch") {
    const HeatProblem p{{Kind::DiracReal, 1.0}, 0.5, complex_init()};
    CHECK_THROWS_AS(solution_value(p, 0.1), UsageError);
}
