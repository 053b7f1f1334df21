#include "bargheat/bargmann.hpp"

#include "bargheat/errors.hpp"
#include "bargheat/numgrid.hpp"
#include "bargheat/series.hpp"

#include <cmath>
#include <numbers>

namespace bargheat::bargmann {

namespace {

constexpr cplx I{0.0, 1.0};

void check_spec(const TransformSpec& spec) {
    if (!(spec.a > 0.0)) throw DomainError("TransformSpec: a must be positive");
    if (spec.order < 1) throw DomainError("TransformSpec: order must be positive");
}

void check_side(const PolyGauss& g, Side side, const char* who) {
    if (!g.is_zero() && g.side() != side)
        throw UsageError(std::string(who) + ": expected a " + std::string(side_name(side)) + "-side function");
}

cplx kernel_norm(double a) { return std::pow(2.0 * a / std::numbers::pi, 0.25); }

struct ConjParams {
    cplx gamma;
    cplx mu;
    cplx envelope; // exp(-(a/4) z^2 (r^2-1)/(r^2+1))
};

ConjParams conj_params(double a, double r, cplx z) {
    if (!(a > 0.0) || !(r > 0.0)) throw DomainError("Fourier family: a and r must be positive");
    const double r2 = r * r;
    const double q = (r2 - 1.0) / (r2 + 1.0);
    return {a / 4.0 * (1.0 - r2) / (r2 + 1.0), I * a * r * z / (r2 + 1.0), std::exp(-a / 4.0 * z * z * q)};
}

} // namespace

cplx forward(const PolyGauss& f, const TransformSpec& spec, cplx z) {
    check_spec(spec);
    return forward_image(f, spec)(z);
}

PolyGauss forward_image(const PolyGauss& f, const TransformSpec& spec) {
    check_spec(spec);
    check_side(f, Side::Real, "forward");
    return bargmann_image(f.with_side(Side::Real), 2.0 * spec.a);
}

cplx forward_quadrature(const PolyGauss& f, const TransformSpec& spec, cplx z) {
    check_spec(spec);
    check_side(f, Side::Real, "forward_quadrature");
    if (f.is_zero()) return 0.0;
    if (!(f.alpha().real() < spec.a / 2.0))
        throw DivergenceError("forward_quadrature: requires Re(alpha) < a/2");
    const double width = spec.a - f.alpha().real();
    const double center = (f.beta() + 2.0 * spec.a * z).real() / (2.0 * width);
    return forward_samples([&f](double x) { return f(x); }, spec, z, {width, center});
}

cplx forward_samples(const std::function<cplx(double)>& f, const TransformSpec& spec, cplx z,
                     const Envelope& envelope) {
    check_spec(spec);
    const auto rule = numgrid::gauss_rule(spec.order, envelope.width);
    const double a = spec.a;
    const cplx tail = -a * z * z / 2.0;
    return kernel_norm(a) *
           numgrid::integrate_line(
               rule, [&](double x) { return f(x) * std::exp(2.0 * a * x * z - a * x * x + tail); },
               envelope.center);
}

cplx antiholomorphic_pairing(const PolyGauss& F, cplx gamma, cplx mu, double a, Method method, int order) {
    if (!(a > 0.0)) throw DomainError("antiholomorphic_pairing: a must be positive");
    check_side(F, Side::Complex, "antiholomorphic_pairing");
    if (F.is_zero()) return 0.0;
    switch (method) {
    case Method::Exact:
        return heat_flow(F, gamma / (a * a))(mu / a);
    case Method::Series:
        return series::coordinate_pairing(F, PolyGauss::gaussian(Side::Complex, 1.0, gamma, mu), a, false);
    case Method::Quadrature: {
        const auto rule = numgrid::adapted_planar_rule(order, a, F.alpha() + std::conj(gamma),
                                                       F.beta() + std::conj(mu));
        return numgrid::integrate(rule, [&](cplx w) {
            const cplx wb = std::conj(w);
            return F(w) * std::exp(gamma * wb * wb + mu * wb);
        });
    }
    }
    throw UsageError("antiholomorphic_pairing: unknown method");
}

cplx inverse(const PolyGauss& F, const TransformSpec& spec, double x, Method method) {
    check_spec(spec);
    const double a = spec.a;
    if (method == Method::Exact) return inverse_image(F, spec)(x);
    return kernel_norm(a) * std::exp(-a * x * x) *
           antiholomorphic_pairing(F.with_side(Side::Complex), -a / 2.0, 2.0 * a * x, a, method, spec.order);
}

PolyGauss inverse_image(const PolyGauss& F, const TransformSpec& spec) {
    check_spec(spec);
    check_side(F, Side::Complex, "inverse");
    return bargmann_preimage(F.with_side(Side::Complex), 2.0 * spec.a);
}

cplx reproduce(const PolyGauss& F, double a, cplx z, int order) {
    return reproduce(F, a, z, Method::Quadrature, order);
}

cplx reproduce(const PolyGauss& F, double a, cplx z, Method method, int order) {
    return antiholomorphic_pairing(F, 0.0, a * z, a, method, order);
}

cplx fourier_r(const PolyGauss& f, double a, double r, double x) {
    if (!(a > 0.0) || !(r > 0.0)) throw DomainError("fourier_r: a and r must be positive");
    check_side(f, Side::Real, "fourier_r");
    return std::sqrt(a * r / std::numbers::pi) * integral(times_exp(f, 0.0, I * a * r * x));
}

cplx fourier_r_inverse(const PolyGauss& g, double a, double r, double t) {
    if (!(a > 0.0) || !(r > 0.0)) throw DomainError("fourier_r_inverse: a and r must be positive");
    check_side(g, Side::Real, "fourier_r_inverse");
    return 0.5 * std::sqrt(a * r / std::numbers::pi) * integral(times_exp(g, 0.0, -I * a * r * t));
}

PolyGauss fourier_image(const PolyGauss& f, double a, double r) {
    if (!(a > 0.0) || !(r > 0.0)) throw DomainError("fourier_image: a and r must be positive");
    check_side(f, Side::Real, "fourier_image");
    return std::sqrt(a * r / std::numbers::pi) * integrate_with_source(f, I * a * r, Side::Real);
}

PolyGauss fourier_inverse_image(const PolyGauss& g, double a, double r) {
    if (!(a > 0.0) || !(r > 0.0)) throw DomainError("fourier_inverse_image: a and r must be positive");
    check_side(g, Side::Real, "fourier_inverse_image");
    return 0.5 * std::sqrt(a * r / std::numbers::pi) * integrate_with_source(g, -I * a * r, Side::Real);
}

cplx fock_fourier_conj(const PolyGauss& F, double a, double r, cplx z, Method method, int order) {
    const auto p = conj_params(a, r, z);
    const double pref = 2.0 * std::sqrt(r / (r * r + 1.0));
    return pref * p.envelope * antiholomorphic_pairing(F, p.gamma, p.mu, a / 2.0, method, order);
}

cplx fock_fourier_conj_inverse(const PolyGauss& F, double a, double r, cplx z, Method method, int order) {
    return 0.5 * fock_fourier_conj(F, a, r, -z, method, order);
}

cplx fock_dilation(const PolyGauss& F, double a, double r, cplx z, Method method, int order) {
    const auto p = conj_params(a, r, z);
    const double pref = std::sqrt(2.0 / (r * r + 1.0));
    return pref * p.envelope *
           antiholomorphic_pairing(compose_affine(F, -I, 0.0), p.gamma, p.mu, a / 2.0, method, order);
}

PolyGauss conjugated_fourier(const PolyGauss& F, double a, double r) {
    return bargmann_image(fourier_image(bargmann_preimage(F, a), a, r), a);
}

PolyGauss conjugated_fourier_inverse(const PolyGauss& F, double a, double r) {
    return bargmann_image(fourier_inverse_image(bargmann_preimage(F, a), a, r), a);
}

PolyGauss conjugated_dilation(const PolyGauss& F, double a, double r) {
    return bargmann_image(compose_affine(bargmann_preimage(F, a), r, 0.0), a);
}

} // namespace bargheat::bargmann
