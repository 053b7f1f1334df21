#pragma once

#include "bargheat/polygauss.hpp"

#include <functional>

namespace bargheat::bargmann {

/// How a planar or line integral is evaluated.
///   Exact      closed Gaussian calculus on PolyGauss data
///   Series     orthonormal Fock-coordinate (anti-holomorphic moment) sums
///   Quadrature Gauss rules fitted to the integrand's envelope
enum class Method { Exact, Series, Quadrature };

/// B_a(f)(z) = (2a/pi)^{1/4} int f(x) exp(2axz - ax^2 - az^2/2) dx.
///
/// `a` here is the transform's own parameter. The heat-problem code works
/// with B_{a/2} and passes half of its operator parameter.
struct TransformSpec {
    double a = 1.0;
    int order = 64;
};

/// Gaussian envelope exp(-width (x - center)^2) that a sampled integrand is
/// integrated against.
struct Envelope {
    double width = 1.0;
    double center = 0.0;
};

/// Exact forward transform. DivergenceError unless Re(alpha) < spec.a / 2.
cplx forward(const PolyGauss& f, const TransformSpec& spec, cplx z);
PolyGauss forward_image(const PolyGauss& f, const TransformSpec& spec);

/// Forward transform by a Gauss rule of spec.order nodes fitted to the
/// envelope of the integrand.
cplx forward_quadrature(const PolyGauss& f, const TransformSpec& spec, cplx z);
cplx forward_samples(const std::function<cplx(double)>& f, const TransformSpec& spec, cplx z,
                     const Envelope& envelope);

/// B_a^{-1}(F)(x) = (2a/pi)^{1/4} int F(w) exp(2ax conj(w) - ax^2 - (a/2) conj(w)^2) d lambda_a(w).
cplx inverse(const PolyGauss& F, const TransformSpec& spec, double x, Method method = Method::Series);
PolyGauss inverse_image(const PolyGauss& F, const TransformSpec& spec);

/// int F(w) exp(gamma conj(w)^2 + mu conj(w)) d lambda_a(w).
/// Exact path: (exp((gamma/a^2) d^2) F)(mu / a).
cplx antiholomorphic_pairing(const PolyGauss& F, cplx gamma, cplx mu, double a, Method method,
                             int order = 64);

/// int F(w) exp(a z conj(w)) d lambda_a(w); equals F(z) on F_a^2.
cplx reproduce(const PolyGauss& F, double a, cplx z, int order);
cplx reproduce(const PolyGauss& F, double a, cplx z, Method method, int order = 64);

// --- Fourier family and its conjugates ----------------------------------
//
// From here on `a` is the operator parameter: the conjugations use B_{a/2}
// and the measure d lambda_{a/2}.

/// F_r f(x) = sqrt(ar/pi) int f(t) exp(i a r x t) dt.
cplx fourier_r(const PolyGauss& f, double a, double r, double x);
/// Inverse of F_r: (1/2) sqrt(ar/pi) int g(x) exp(-i a r x t) dx.
cplx fourier_r_inverse(const PolyGauss& g, double a, double r, double t);
PolyGauss fourier_image(const PolyGauss& f, double a, double r);
PolyGauss fourier_inverse_image(const PolyGauss& g, double a, double r);

/// B_{a/2} F_r B_{a/2}^{-1} F at z, as the closed planar-integral formula
/// 2 sqrt(r/(r^2+1)) exp(-(a/4) z^2 (r^2-1)/(r^2+1))
///   * int F(w) exp((a/4) conj(w)^2 (1-r^2)/(r^2+1)) exp(i a r z conj(w)/(r^2+1)) d lambda_{a/2}(w).
cplx fock_fourier_conj(const PolyGauss& F, double a, double r, cplx z, Method method, int order = 64);
/// B_{a/2} F_r^{-1} B_{a/2}^{-1} F at z; the same integral at -z, halved.
cplx fock_fourier_conj_inverse(const PolyGauss& F, double a, double r, cplx z, Method method,
                               int order = 64);
/// B_{a/2} h_r B_{a/2}^{-1} F at z with h_r f(x) = f(rx):
/// sqrt(2/(r^2+1)) exp(-(a/4) z^2 (r^2-1)/(r^2+1))
///   * int F(-i w) exp((a/4) conj(w)^2 (1-r^2)/(r^2+1)) exp(i a r z conj(w)/(r^2+1)) d lambda_{a/2}(w).
cplx fock_dilation(const PolyGauss& F, double a, double r, cplx z, Method method, int order = 64);

/// The same three operators composed symbolically from bargmann_preimage,
/// fourier_image / dilation and bargmann_image.
PolyGauss conjugated_fourier(const PolyGauss& F, double a, double r);
PolyGauss conjugated_fourier_inverse(const PolyGauss& F, double a, double r);
PolyGauss conjugated_dilation(const PolyGauss& F, double a, double r);

} // namespace bargheat::bargmann
