#include "bargheat/bargmann.hpp"
#include "bargheat/errors.hpp"
#include "testing.hpp"

#include <numbers>

using namespace bargheat;
using namespace bargheat::bargmann;
using std::numbers::pi;

namespace {

const cplx I{0.0, 1.0};

std::vector<cplx> disk_probes() {
    std::vector<cplx> out{0.0};
    for (double r : {0.5, 1.2, 2.0})
        for (int k = 0; k < 5; ++k) out.push_back(std::polar(r, 2.0 * pi * k / 5.0 + r));
    return out;
}

} // namespace

TEST_CASE("forward transform examples") {
    const double a = 1.3;
    const PolyGauss g = PolyGauss::gaussian(Side::Real, 1.0, -a / 2.0);
    // the full-parameter convention: spec.a = a/2 is B_{a/2}
    for (cplx z : disk_probes()) CHECK_REL(forward(g, {a / 2.0}, z), std::pow(pi / a, 0.25), 1e-14);
    CHECK_NEAR(forward(PolyGauss::zero(Side::Real), {1.0}, {0.3, 0.2}), 0.0, 0.0);

    const PolyGauss f = PolyGauss::gaussian(Side::Real, 1.0, -2.0);
    const double closed = std::pow(4.0 / pi, 0.25) * std::sqrt(pi) / 2.0;
    CHECK_REL(forward(f, {2.0}, 1.0), closed, 1e-14);
    CHECK_REL(forward_quadrature(f, {2.0, 64}, 1.0), closed, 1e-10);
    CHECK_THROWS_AS(forward(PolyGauss::gaussian(Side::Real, 1.0, 0.6), {1.0}, 0.0), DivergenceError);
}

TEST_CASE("forward quadrature matches the exact path") {
    const PolyGauss f(Side::Real, {1.0, -0.5, 0.25, 0.0, 0.1}, {-0.8, 0.2}, {0.3, -0.2});
    for (double a : {0.5, 1.0, 2.0})
        for (cplx z : disk_probes()) CHECK_REL(forward_quadrature(f, {a, 64}, z), forward(f, {a}, z), 1e-10);
}

TEST_CASE("forward_samples integrates a callable") {
    const PolyGauss f(Side::Real, {0.0, 1.0}, -0.5);
    auto sampled = [&f](double x) { return f(x); };
    CHECK_REL(forward_samples(sampled, {1.0, 64}, {0.4, 0.3}, {1.5, 0.0}), forward(f, {1.0}, {0.4, 0.3}), 1e-11);
}

TEST_CASE("inverse transform examples") {
    for (double a : {0.5, 1.0, 2.0}) {
        const PolyGauss one = PolyGauss::constant(Side::Complex, 1.0);
        for (double x : {-1.5, 0.0, 0.7}) {
            const double want = std::pow(2.0 * a / pi, 0.25) * std::exp(-a * x * x);
            CHECK_REL(inverse(one, {a}, x, Method::Series), want, 1e-13);
            CHECK_REL(inverse(one, {a}, x, Method::Quadrature), want, 1e-10);
            CHECK_REL(inverse(one, {a}, x, Method::Exact), want, 1e-14);
        }
        CHECK_NEAR(inverse(PolyGauss::zero(Side::Complex), {a}, 0.3), 0.0, 0.0);
    }
}

TEST_CASE("inverse undoes forward") {
    for (double a : {0.5, 1.0, 2.0}) {
        const PolyGauss f(Side::Real, {1.0, 1.0}, -a / 2.0);
        const PolyGauss F = forward_image(f, {a});
        CHECK(distance(inverse_image(F, {a}), f) <= 1e-14);
        for (int k = 0; k < 20; ++k) {
            const double x = -3.0 + 6.0 * k / 19.0;
            CHECK_NEAR(inverse(F, {a, 64}, x, Method::Series), f(x), 1e-10);
            CHECK_NEAR(inverse(F, {a, 64}, x, Method::Quadrature), f(x), 1e-8);
        }
    }
}

TEST_CASE("reproducing kernel examples") {
    const double a = 1.0;
    const PolyGauss one = PolyGauss::constant(Side::Complex, 1.0);
    const PolyGauss w2 = PolyGauss::monomial(Side::Complex, 2);
    const PolyGauss ex = PolyGauss::gaussian(Side::Complex, 1.0, 0.0, 0.3);
    CHECK_NEAR(reproduce(one, a, {0.4, -0.3}, 64), 1.0, 1e-12);
    CHECK_NEAR(reproduce(w2, a, {1.0, 1.0}, 64), 2.0 * I, 1e-10);
    for (cplx z : disk_probes()) {
        CHECK_REL(reproduce(ex, a, z, Method::Series), std::exp(0.3 * z), 1e-13);
        CHECK_REL(reproduce(ex, a, z, Method::Exact), std::exp(0.3 * z), 1e-14);
    }
}

TEST_CASE("reproducing property for polynomials") {
    const PolyGauss F(Side::Complex, {1.0, -I, 0.5, 0.0, 0.25, 0.1, -0.05});
    for (double a : {0.5, 1.0, 2.0})
        for (cplx z : disk_probes()) {
            INFO("a=" << a << " z=" << z);
            CHECK_NEAR(reproduce(F, a, z, Method::Quadrature), F(z), 1e-8);
            CHECK_NEAR(reproduce(F, a, z, Method::Series), F(z), 1e-12);
        }
}

TEST_CASE("antiholomorphic pairing paths agree") {
    const PolyGauss F(Side::Complex, {1.0, 0.5, I}, {0.1, 0.05}, 0.2);
    const cplx gamma{0.08, -0.05}, mu{0.3, 0.6};
    const double a = 1.0;
    const cplx exact = antiholomorphic_pairing(F, gamma, mu, a, Method::Exact);
    CHECK_REL(antiholomorphic_pairing(F, gamma, mu, a, Method::Series), exact, 1e-12);
    CHECK_REL(antiholomorphic_pairing(F, gamma, mu, a, Method::Quadrature, 64), exact, 1e-9);
}

TEST_CASE("fourier_r examples") {
    for (double a : {0.5, 1.0, 2.0})
        for (double r : {0.5, 1.0, 3.0}) {
            const PolyGauss f = PolyGauss::gaussian(Side::Real, 1.0, -a * r / 2.0);
            for (double x : {-1.0, 0.0, 0.8}) {
                CHECK_REL(fourier_r(f, a, r, x), std::sqrt(2.0) * f(x), 1e-14);
                CHECK_REL(fourier_r_inverse(fourier_image(f, a, r), a, r, x), f(x), 1e-13);
            }
            CHECK_NEAR(fourier_r(PolyGauss::zero(Side::Real), a, r, 0.2), 0.0, 0.0);
        }
    const PolyGauss g(Side::Real, {1.0, 2.0, -0.5}, -0.4, 0.3);
    CHECK(distance(fourier_inverse_image(fourier_image(g, 1.2, 0.7), 1.2, 0.7), g) <= 1e-13);
}

TEST_CASE("fourier conjugation at r = 1") {
    const double a = 1.0;
    const PolyGauss F(Side::Complex, {1.0, -0.4, 0.3, 0.1});
    for (cplx z : disk_probes()) {
        CHECK_REL(fock_fourier_conj(F, a, 1.0, z, Method::Series), std::sqrt(2.0) * F(I * z), 1e-12);
        CHECK_REL(fock_fourier_conj(F, a, 1.0, z, Method::Quadrature), std::sqrt(2.0) * F(I * z), 1e-8);
        CHECK_REL(fock_fourier_conj_inverse(F, a, 1.0, z, Method::Series), F(-I * z) / std::sqrt(2.0), 1e-12);
        CHECK_REL(fock_dilation(F, a, 1.0, z, Method::Series), F(z), 1e-12);
    }
}

TEST_CASE("fourier conjugation of the constant") {
    const PolyGauss one = PolyGauss::constant(Side::Complex, 1.0);
    for (double a : {0.5, 2.0})
        for (double r : {0.4, 1.7})
            for (cplx z : disk_probes()) {
                const cplx env = std::exp(-(a / 4.0) * z * z * (r * r - 1.0) / (r * r + 1.0));
                CHECK_REL(fock_fourier_conj(one, a, r, z, Method::Series), 2.0 * std::sqrt(r / (r * r + 1.0)) * env, 1e-12);
                CHECK_REL(fock_dilation(one, a, r, z, Method::Series), std::sqrt(2.0 / (r * r + 1.0)) * env, 1e-12);
            }
    const double a = 1.0, t = 0.6, r = std::exp(a * t);
    for (cplx z : disk_probes())
        CHECK_REL(fock_dilation(one, a, r, z, Method::Exact),
                  std::exp(-a * t / 2.0) / std::sqrt(std::cosh(a * t)) * std::exp(-(a / 4.0) * z * z * std::tanh(a * t)),
                  1e-13);
}

TEST_CASE("planar formulas match the symbolic compositions") {
    const PolyGauss F(Side::Complex, {0.5, 1.0, -I, 0.2}, 0.05, {0.1, -0.1});
    for (double a : {0.5, 1.0, 2.0})
        for (double r : {0.5, 1.0, 2.0}) {
            const PolyGauss cf = conjugated_fourier(F, a, r), ci = conjugated_fourier_inverse(F, a, r),
                            cd = conjugated_dilation(F, a, r);
            for (cplx z : disk_probes()) {
                INFO("a=" << a << " r=" << r << " z=" << z);
                CHECK_REL(fock_fourier_conj(F, a, r, z, Method::Series), cf(z), 1e-10);
                CHECK_REL(fock_fourier_conj_inverse(F, a, r, z, Method::Series), ci(z), 1e-10);
                CHECK_REL(fock_dilation(F, a, r, z, Method::Series), cd(z), 1e-10);
            }
            CHECK(distance(conjugated_fourier_inverse(cf, a, r), F) <= 1e-12);
        }
}
