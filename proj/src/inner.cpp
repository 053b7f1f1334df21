#include "bargheat/inner.hpp"

#include "bargheat/errors.hpp"
#include "bargheat/series.hpp"

#include <cmath>

namespace bargheat::numgrid {

namespace {

void require_side(const PolyGauss& g, Side side, const char* who) {
    if (!g.is_zero() && g.side() != side)
        throw UsageError(std::string(who) + ": expected a " + std::string(side_name(side)) + "-side function");
}

} // namespace

cplx l2_inner(const PolyGauss& f, const PolyGauss& g, const QuadratureRule& rule) {
    require_side(f, Side::Real, "l2_inner");
    require_side(g, Side::Real, "l2_inner");
    if (f.is_zero() || g.is_zero()) return 0.0;
    if (!((f.alpha() + std::conj(g.alpha())).real() < 0.0))
        throw DivergenceError("l2_inner: f conj(g) does not decay");
    return integrate_line(rule, [&](double x) { return f(x) * std::conj(g(x)); });
}

cplx l2_inner(const PolyGauss& f, const PolyGauss& g, int order) {
    require_side(f, Side::Real, "l2_inner");
    require_side(g, Side::Real, "l2_inner");
    if (f.is_zero() || g.is_zero()) return 0.0;
    const cplx alpha = f.alpha() + std::conj(g.alpha());
    const cplx beta = f.beta() + std::conj(g.beta());
    if (!(alpha.real() < 0.0)) throw DivergenceError("l2_inner: f conj(g) does not decay");
    const double w = -alpha.real();
    const auto rule = gauss_rule(order, w);
    return integrate_line(rule, [&](double x) { return f(x) * std::conj(g(x)); }, beta.real() / (2.0 * w));
}

cplx l2_inner(const std::function<cplx(double)>& f, const std::function<cplx(double)>& g,
              const QuadratureRule& rule, double center) {
    return integrate_line(rule, [&](double x) { return f(x) * std::conj(g(x)); }, center);
}

cplx fock_inner(const PolyGauss& F, const PolyGauss& G, double a, int order) {
    if (!(a > 0.0)) throw DomainError("fock_inner: a must be positive");
    require_side(F, Side::Complex, "fock_inner");
    require_side(G, Side::Complex, "fock_inner");
    if (F.is_zero() || G.is_zero()) return 0.0;
    if (F.is_polynomial() && G.is_polynomial()) {
        cplx acc = 0.0;
        double norm = 1.0; // n!/a^n
        for (int n = 0; n <= std::min(F.degree(), G.degree()); ++n) {
            acc += F.coeff(n) * std::conj(G.coeff(n)) * norm;
            norm *= (n + 1) / a;
        }
        return acc;
    }
    const auto rule = adapted_planar_rule(order, a, F.alpha() + G.alpha(), F.beta() + G.beta());
    return integrate(rule, [&](cplx w) { return F(w) * std::conj(G(w)); });
}

cplx fock_inner_series(const PolyGauss& F, const PolyGauss& G, double a) {
    require_side(F, Side::Complex, "fock_inner_series");
    require_side(G, Side::Complex, "fock_inner_series");
    return series::coordinate_pairing(F, G, a, /*conjugate_second=*/true);
}

} // namespace bargheat::numgrid
