#pragma once

#include "bargheat/numgrid.hpp"
#include "bargheat/polygauss.hpp"

#include <functional>

namespace bargheat::numgrid {

/// Integral of f conj(g) over the real line with the given rule; the rule's
/// weight exp(-a x^2) is absorbed into the integrand.
/// DivergenceError unless Re(alpha_f + conj(alpha_g)) < 0.
cplx l2_inner(const PolyGauss& f, const PolyGauss& g, const QuadratureRule& rule);

/// Same, with a rule of the given order fitted to the envelope of f conj(g).
cplx l2_inner(const PolyGauss& f, const PolyGauss& g, int order);

/// Sampled version: f and g are callables, the envelope is supplied.
cplx l2_inner(const std::function<cplx(double)>& f, const std::function<cplx(double)>& g,
              const QuadratureRule& rule, double center = 0.0);

/// Inner product of the Fock space F_a^2: integral of F conj(G) d lambda_a.
/// Polynomial pairs use <z^n, z^m> = delta_nm n!/a^n exactly; everything
/// else goes through an adapted PlanarRule of the given order per axis.
cplx fock_inner(const PolyGauss& F, const PolyGauss& G, double a, int order = 64);

/// Same pairing as a sum over orthonormal monomial coordinates.
cplx fock_inner_series(const PolyGauss& F, const PolyGauss& G, double a);

} // namespace bargheat::numgrid
