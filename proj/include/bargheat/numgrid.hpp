#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace bargheat {

using cplx = std::complex<double>;

namespace numgrid {

/// Gauss rule for integrals against exp(-a x^2) on the real line.
///
/// sum_i weights[i] * f(nodes[i]) approximates the integral of
/// exp(-a x^2) f(x) and is exact for polynomials of degree <= 2*order-1.
struct QuadratureRule {
    int order = 0;
    double a = 1.0;
    std::vector<double> nodes;   // strictly increasing, symmetric about 0
    std::vector<double> weights; // positive, sum sqrt(pi/a)
};

/// Builds the rule from the eigen-decomposition of the Hermite Jacobi matrix,
/// polishes every node with Newton steps on the orthonormal recurrence and
/// takes weights from the Christoffel function, so tail weights keep full
/// relative accuracy. Throws DomainError for order < 1, order > 300 or a <= 0.
QuadratureRule gauss_rule(int order, double a);

/// sum_i w_i f(x_i): the Gaussian-weighted integral.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);
cplx integrate(const QuadratureRule& rule, const std::function<cplx(double)>& f);

/// Plain integral of f over the real line, using `rule` as the envelope
/// exp(-rule.a (x - center)^2) absorbed into the integrand.
cplx integrate_line(const QuadratureRule& rule, const std::function<cplx(double)>& f,
                    double center = 0.0);

/// Cubature nodes and weights for the planar measure
/// d lambda_a(z) = (a/pi) exp(-a|z|^2) dz:  sum_k weights[k] F(nodes[k]).
///
/// The isotropic rule is the tensor square of the 1-d rule. An adapted rule
/// rotates, rescales and recentres the tensor grid to match a given Gaussian
/// envelope of the integrand; its weights still refer to d lambda_a.
struct PlanarRule {
    double a = 1.0;
    QuadratureRule base_u;
    QuadratureRule base_v;
    std::vector<cplx> nodes;
    std::vector<double> weights;
};

PlanarRule planar_rule(int order, double a);

/// Rule adapted to integrands whose modulus behaves like
/// exp(Re(sigma w^2) + Re(lambda w)) against d lambda_a. Requires
/// |sigma| < a (DivergenceError otherwise).
PlanarRule adapted_planar_rule(int order, double a, cplx sigma, cplx lambda);

cplx integrate(const PlanarRule& rule, const std::function<cplx(cplx)>& f);

} // namespace numgrid
} // namespace bargheat
