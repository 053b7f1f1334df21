#include "bargheat/series.hpp"

#include "bargheat/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bargheat::series {

cplx coordinate_pairing(const PolyGauss& F, const PolyGauss& H, double a, bool conjugate_second) {
    if (!(a > 0.0)) throw DomainError("coordinate_pairing: a must be positive");
    if (F.is_zero() || H.is_zero()) return 0.0;

    auto term = [&](cplx f, cplx h) { return f * (conjugate_second ? std::conj(h) : h); };

    if (F.is_polynomial() || H.is_polynomial()) {
        const int n = (F.is_polynomial() ? F.degree() : H.degree()) + 1;
        const auto fc = fock_coordinates(F, a, n);
        const auto hc = fock_coordinates(H, a, n);
        cplx acc = 0.0;
        for (int k = 0; k < n; ++k) acc += term(fc[k], hc[k]);
        return acc;
    }

    // per-step decay of the coordinates of exp(alpha w^2 + ...)
    const double rho = std::sqrt(2.0 * std::abs(F.alpha()) / a) * std::sqrt(2.0 * std::abs(H.alpha()) / a);
    if (!(rho < 1.0))
        throw DivergenceError("coordinate_pairing: Fock coordinates do not decay (rate " +
                              format_double(rho) + ")");
    const double peak = (std::norm(F.beta()) + std::norm(H.beta())) / a;
    int n = static_cast<int>(std::min(8192.0, 64.0 + 2.0 * (F.degree() + H.degree()) + 4.0 * peak));
    const double geometric = 1.0 / (1.0 - std::max(rho, 0.5));
    for (;;) {
        const auto fc = fock_coordinates(F, a, n);
        const auto hc = fock_coordinates(H, a, n);
        cplx acc = 0.0;
        double mass = 0.0;
        for (int k = 0; k < n; ++k) {
            const cplx t = term(fc[k], hc[k]);
            acc += t;
            mass += std::abs(t);
        }
        const double last = std::abs(term(fc[n - 1], hc[n - 1])) + std::abs(term(fc[n - 2], hc[n - 2]));
        const double tail = last * geometric;
        if (tail <= 1e-14 * mass || mass == 0.0) return acc;
        if (n >= 8192) throw AccuracyError("coordinate_pairing: series did not converge", tail / mass);
        n = std::min(2 * n, 8192);
    }
}

} // namespace bargheat::series
