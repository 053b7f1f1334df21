#include "bargheat/heatsolve.hpp"

#include "bargheat/errors.hpp"
#include "bargheat/numgrid.hpp"

#include <cmath>
#include <numbers>

namespace bargheat::heat {

namespace {

using ops::Kind;

void check_time(double t, const char* who) {
    if (!(t >= 0.0)) throw DomainError(std::string(who) + ": t must be nonnegative");
}

void check_a(double a, const char* who) {
    if (!(a > 0.0)) throw DomainError(std::string(who) + ": a must be positive");
}

void check_side(const PolyGauss& g, Side side, const char* who) {
    if (!g.is_zero() && g.side() != side)
        throw UsageError(std::string(who) + ": expected a " + std::string(side_name(side)) + "-side function");
}

// Exponent coefficients of the product-form Mehler kernel:
// K = norm * exp(xx x^2 + ss s^2 + xs x s).
struct MehlerCoeffs {
    double norm, xx, ss, xs;
};

MehlerCoeffs mehler_coeffs(double a, double t) {
    const double ep = std::exp(2.0 * a * t), em = std::exp(-2.0 * a * t);
    const double d = ep - em;
    return {std::sqrt(a / std::numbers::pi) / std::sqrt(d), -a * ep / d + a / 2.0, -a * em / d - a / 2.0,
            2.0 * a / d};
}

void check_mehler_damping(const PolyGauss& y0, double a, double t) {
    if (y0.is_zero()) return;
    const double bound = 0.5 * a / std::tanh(2.0 * a * t);
    if (!(y0.alpha().real() < bound))
        throw DivergenceError("solve_harmonic_real: requires Re(alpha) < (a/2) coth(2at)");
}

} // namespace

cplx solve_dirac_complex(const PolyGauss& U0, double a, double t, cplx z) {
    check_a(a, "solve_dirac_complex");
    check_time(t, "solve_dirac_complex");
    return std::exp(z * t / 2.0 + t * t / (4.0 * a)) * U0(z + t / a);
}

cplx solve_dirac_real(const PolyGauss& u0, double a, double t, double x) {
    check_a(a, "solve_dirac_real");
    check_time(t, "solve_dirac_real");
    return std::exp(-a * x * t - a * t * t / 2.0) * u0(x + t);
}

cplx solve_euler_real(const PolyGauss& v0, double a, double t, double x) {
    check_a(a, "solve_euler_real");
    check_time(t, "solve_euler_real");
    return v0(std::exp(a * t) * x);
}

cplx solve_euler_complex(const PolyGauss& Y0, double a, double t, cplx z) {
    check_a(a, "solve_euler_complex");
    check_time(t, "solve_euler_complex");
    return std::exp(-a * t) * Y0(std::exp(-2.0 * a * t) * z);
}

PolyGauss dirac_complex_image(const PolyGauss& U0, double a, double t) {
    check_a(a, "dirac_complex_image");
    check_time(t, "dirac_complex_image");
    check_side(U0, Side::Complex, "dirac_complex_image");
    return times_exp(compose_affine(U0.with_side(Side::Complex), 1.0, t / a), 0.0, t / 2.0,
                     std::exp(t * t / (4.0 * a)));
}

PolyGauss dirac_real_image(const PolyGauss& u0, double a, double t) {
    check_a(a, "dirac_real_image");
    check_time(t, "dirac_real_image");
    check_side(u0, Side::Real, "dirac_real_image");
    return times_exp(compose_affine(u0.with_side(Side::Real), 1.0, t), 0.0, -a * t, std::exp(-a * t * t / 2.0));
}

PolyGauss euler_real_image(const PolyGauss& v0, double a, double t) {
    check_a(a, "euler_real_image");
    check_time(t, "euler_real_image");
    check_side(v0, Side::Real, "euler_real_image");
    return compose_affine(v0.with_side(Side::Real), std::exp(a * t), 0.0);
}

PolyGauss euler_complex_image(const PolyGauss& Y0, double a, double t) {
    check_a(a, "euler_complex_image");
    check_time(t, "euler_complex_image");
    check_side(Y0, Side::Complex, "euler_complex_image");
    return std::exp(-a * t) * compose_affine(Y0.with_side(Side::Complex), std::exp(-2.0 * a * t), 0.0);
}

double mehler_kernel(double a, double t, double x, double s, MehlerForm form) {
    check_a(a, "mehler_kernel");
    if (!(t > 0.0)) throw DomainError("mehler_kernel: t must be positive");
    switch (form) {
    case MehlerForm::Product: {
        const double ep = std::exp(a * t), em = std::exp(-a * t);
        const double d = ep * ep - em * em;
        const double q = ep * x - em * s;
        return std::sqrt(a / std::numbers::pi) / std::sqrt(d) *
               std::exp(-a * q * q / d + a / 2.0 * (x * x - s * s));
    }
    case MehlerForm::Hyperbolic:
    case MehlerForm::HyperbolicUnhalved: {
        const double sh = std::sinh(2.0 * a * t);
        const double expo = -a / 2.0 * (x * x + s * s) / std::tanh(2.0 * a * t) + a * x * s / sh;
        const double norm = form == MehlerForm::Hyperbolic ? std::sqrt(a / (2.0 * std::numbers::pi * sh))
                                                           : std::sqrt(a / std::numbers::pi) / std::sqrt(sh);
        return norm * std::exp(expo);
    }
    }
    throw UsageError("mehler_kernel: unknown form");
}

cplx solve_harmonic_real(const PolyGauss& y0, double a, double t, double x, Method method, int order) {
    check_a(a, "solve_harmonic_real");
    check_time(t, "solve_harmonic_real");
    check_side(y0, Side::Real, "solve_harmonic_real");
    if (t == 0.0 || y0.is_zero()) return y0(x);
    check_mehler_damping(y0, a, t);
    const auto k = mehler_coeffs(a, t);
    const cplx alpha = y0.alpha() + k.ss;
    const cplx beta = y0.beta() + k.xs * x;
    switch (method) {
    case Method::Exact:
    case Method::Series: {
        // complete the square so the large exponents cancel before exp()
        const cplx s0 = -beta / (2.0 * alpha);
        const PolyGauss p = compose_affine(PolyGauss(Side::Real, y0.coeffs()), 1.0, s0);
        const cplx log_front = k.xx * x * x - beta * beta / (4.0 * alpha);
        return k.norm * std::exp(log_front) * integral(PolyGauss(Side::Real, p.coeffs(), alpha));
    }
    case Method::Quadrature: {
        const double width = -alpha.real();
        const double center = beta.real() / (2.0 * width);
        const auto rule = numgrid::gauss_rule(order, width);
        return k.norm * numgrid::integrate_line(
                            rule,
                            [&](double s) { return y0(s) * std::exp(k.xx * x * x + k.ss * s * s + k.xs * x * s); },
                            center);
    }
    }
    throw UsageError("solve_harmonic_real: unknown method");
}

PolyGauss harmonic_real_image(const PolyGauss& y0, double a, double t) {
    check_a(a, "harmonic_real_image");
    check_time(t, "harmonic_real_image");
    check_side(y0, Side::Real, "harmonic_real_image");
    if (t == 0.0 || y0.is_zero()) return y0.with_side(Side::Real);
    check_mehler_damping(y0, a, t);
    const auto k = mehler_coeffs(a, t);
    return times_exp(integrate_with_source(times_exp(y0, k.ss, 0.0), k.xs, Side::Real), k.xx, 0.0, k.norm);
}

cplx complex_kernel_prefactor(double a, double t, Prefactor prefactor) {
    const double sc = std::sqrt(std::cosh(a * t));
    if (prefactor == Prefactor::TwoI) return cplx(0.0, 2.0) / sc;
    return std::exp(-a * t / 2.0) / sc;
}

cplx harmonic_kernel_complex(double a, double t, cplx z, cplx w, Prefactor prefactor) {
    check_a(a, "harmonic_kernel_complex");
    check_time(t, "harmonic_kernel_complex");
    const cplx wb = std::conj(w);
    const double th = std::tanh(a * t);
    return complex_kernel_prefactor(a, t, prefactor) *
           std::exp(a / 4.0 * (wb * wb - z * z) * th + a * z * wb / (2.0 * std::cosh(a * t)));
}

cplx solve_harmonic_complex(const PolyGauss& V0, double a, double t, cplx z, Method method, int order,
                            Prefactor prefactor) {
    check_a(a, "solve_harmonic_complex");
    check_time(t, "solve_harmonic_complex");
    check_side(V0, Side::Complex, "solve_harmonic_complex");
    if (V0.is_zero()) return 0.0;
    const double th = std::tanh(a * t);
    const cplx mu = a * z / (2.0 * std::cosh(a * t));
    return complex_kernel_prefactor(a, t, prefactor) * std::exp(-a / 4.0 * z * z * th) *
           bargmann::antiholomorphic_pairing(V0, a / 4.0 * th, mu, a / 2.0, method, order);
}

PolyGauss harmonic_complex_image(const PolyGauss& V0, double a, double t, Prefactor prefactor) {
    check_a(a, "harmonic_complex_image");
    check_time(t, "harmonic_complex_image");
    check_side(V0, Side::Complex, "harmonic_complex_image");
    if (V0.is_zero()) return PolyGauss::zero(Side::Complex);
    const double th = std::tanh(a * t);
    const PolyGauss flowed = heat_flow(V0.with_side(Side::Complex), th / a);
    return times_exp(compose_affine(flowed, 1.0 / std::cosh(a * t), 0.0), -a / 4.0 * th, 0.0,
                     complex_kernel_prefactor(a, t, prefactor));
}

cplx kernel_value(const KernelSpec& spec, cplx p, cplx q) {
    if (spec.family == KernelFamily::Mehler) return mehler_kernel(spec.a, spec.t, p.real(), q.real());
    return harmonic_kernel_complex(spec.a, spec.t, p, q, spec.prefactor);
}

PolyGauss solution_image(const HeatProblem& p) {
    const double a = p.op.a();
    check_time(p.t, "solution_image");
    check_side(p.init, p.op.side(), "solution_image");
    switch (p.op.kind()) {
    case Kind::DiracReal: return dirac_real_image(p.init, a, p.t);
    case Kind::DiracComplex: return dirac_complex_image(p.init, a, p.t);
    case Kind::EulerReal: return euler_real_image(p.init, a, p.t);
    case Kind::EulerComplex: return euler_complex_image(p.init, a, p.t);
    case Kind::HarmonicReal: return harmonic_real_image(p.init, a, p.t);
    case Kind::HarmonicComplex: return harmonic_complex_image(p.init, a, p.t);
    }
    throw UsageError("solution_image: unknown operator kind");
}

PolyGauss conjugation_image(const HeatProblem& p) {
    const double a = p.op.a();
    check_time(p.t, "conjugation_image");
    check_side(p.init, p.op.side(), "conjugation_image");
    const PolyGauss& g = p.init;
    switch (p.op.kind()) {
    case Kind::DiracReal:
        return bargmann_preimage(times_exp(bargmann_image(g, a), 0.0, -a * p.t), a);
    case Kind::DiracComplex:
        return bargmann_image(times_exp(bargmann_preimage(g, a), 0.0, p.t), a);
    case Kind::EulerReal:
        return bargmann_preimage(harmonic_complex_image(bargmann_image(g, a), a, p.t), a);
    case Kind::EulerComplex:
        return bargmann_image(harmonic_real_image(bargmann_preimage(g, a), a, p.t), a);
    case Kind::HarmonicReal:
        return bargmann_preimage(euler_complex_image(bargmann_image(g, a), a, p.t), a);
    case Kind::HarmonicComplex:
        return bargmann_image(euler_real_image(bargmann_preimage(g, a), a, p.t), a);
    }
    throw UsageError("conjugation_image: unknown operator kind");
}

PolyGauss time_derivative_image(const HeatProblem& p) {
    const double a = p.op.a();
    const double t = p.t;
    check_time(t, "time_derivative_image");
    check_side(p.init, p.op.side(), "time_derivative_image");
    const PolyGauss g = p.init.with_side(p.op.side());
    switch (p.op.kind()) {
    case Kind::DiracReal: {
        // u = e^{-axt - at^2/2} u0(x + t)
        const PolyGauss u = dirac_real_image(g, a, t);
        const PolyGauss du0 =
            times_exp(compose_affine(derivative(g), 1.0, t), 0.0, -a * t, std::exp(-a * t * t / 2.0));
        return (-a) * times_var(u) + (-a * t) * u + du0;
    }
    case Kind::DiracComplex: {
        const PolyGauss U = dirac_complex_image(g, a, t);
        const PolyGauss dU0 = times_exp(compose_affine(derivative(g), 1.0, t / a), 0.0, t / 2.0,
                                        std::exp(t * t / (4.0 * a)) / a);
        return 0.5 * times_var(U) + (t / (2.0 * a)) * U + dU0;
    }
    case Kind::EulerReal: {
        const double r = std::exp(a * t);
        return (a * r) * times_var(compose_affine(derivative(g), r, 0.0));
    }
    case Kind::EulerComplex: {
        const double r = std::exp(-2.0 * a * t);
        return (-a) * euler_complex_image(g, a, t) +
               (-2.0 * a * r * std::exp(-a * t)) * times_var(compose_affine(derivative(g), r, 0.0));
    }
    case Kind::HarmonicReal: {
        const PolyGauss Y0 = bargmann_image(g, a);
        const HeatProblem q{ops::Operator(Kind::EulerComplex, a), t, Y0};
        return bargmann_preimage(time_derivative_image(q), a);
    }
    case Kind::HarmonicComplex: {
        const PolyGauss v0 = bargmann_preimage(g, a);
        const HeatProblem q{ops::Operator(Kind::EulerReal, a), t, v0};
        return bargmann_image(time_derivative_image(q), a);
    }
    }
    throw UsageError("time_derivative_image: unknown operator kind");
}

cplx solution_value(const HeatProblem& p, cplx point, Method method, int order) {
    const double a = p.op.a();
    check_time(p.t, "solution_value");
    check_side(p.init, p.op.side(), "solution_value");
    switch (p.op.kind()) {
    case Kind::DiracReal: return solve_dirac_real(p.init, a, p.t, point.real());
    case Kind::DiracComplex: return solve_dirac_complex(p.init, a, p.t, point);
    case Kind::EulerReal: return solve_euler_real(p.init, a, p.t, point.real());
    case Kind::EulerComplex: return solve_euler_complex(p.init, a, p.t, point);
    case Kind::HarmonicReal: return solve_harmonic_real(p.init, a, p.t, point.real(), method, order);
    case Kind::HarmonicComplex: return solve_harmonic_complex(p.init, a, p.t, point, method, order);
    }
    throw UsageError("solution_value: unknown operator kind");
}

double exact_residual(const HeatProblem& p) {
    return distance(time_derivative_image(p), ops::apply(p.op, solution_image(p)));
}

} // namespace bargheat::heat
