#include "bargheat/verify.hpp"

#include "bargheat/errors.hpp"
#include "bargheat/inner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bargheat::verify {

namespace {

using heat::HeatProblem;

HeatProblem at_time(const HeatProblem& p, double t) { return {p.op, t, p.init}; }

void check_steps(double t, double h_t, double h_x) {
    if (!(h_t > 0.0) || !(h_x > 0.0)) throw DomainError("fd_residual: steps must be positive");
    if (!(h_t < t)) throw DomainError("fd_residual: step h_t must be smaller than t");
}

// Gaussian in s of K_a(x, s, t): norm * exp(xx x^2 + ss s^2 + xs x s).
struct Mehler {
    double norm, xx, ss, xs;
};

Mehler mehler(double a, double t) {
    const double ep = std::exp(2.0 * a * t), em = std::exp(-2.0 * a * t);
    const double d = ep - em;
    return {std::sqrt(a / std::numbers::pi) / std::sqrt(d), -a * ep / d + a / 2.0, -a * em / d - a / 2.0,
            2.0 * a / d};
}

} // namespace

DefectReport make_report(std::string check, std::string params, double defect, double tolerance, double seconds) {
    return {std::move(check), std::move(params), defect, tolerance, defect <= tolerance, seconds};
}

double fd_residual_real(const ops::Operator& op, const std::function<cplx(double, double)>& u, double t, double x,
                        double h_t, double h_x) {
    check_steps(t, h_t, h_x);
    if (op.side() != Side::Real) throw UsageError("fd_residual_real: real-side operator expected");
    const double a = op.a();
    const cplx ut = (u(t + h_t, x) - u(t - h_t, x)) / (2.0 * h_t);
    const cplx u0 = u(t, x);
    const cplx up = u(t, x + h_x), um = u(t, x - h_x);
    const cplx ux = (up - um) / (2.0 * h_x);
    const cplx uxx = (up - 2.0 * u0 + um) / (h_x * h_x);
    cplx Lu;
    switch (op.kind()) {
    case ops::Kind::DiracReal: Lu = ux - a * x * u0; break;
    case ops::Kind::EulerReal: Lu = a * x * ux; break;
    case ops::Kind::HarmonicReal: Lu = uxx - a * a * x * x * u0; break;
    default: throw UsageError("fd_residual_real: real-side operator expected");
    }
    return std::abs(ut - Lu);
}

double fd_residual(const HeatProblem& problem, double t, cplx point, double h_t, double h_x) {
    check_steps(t, h_t, h_x);
    if (problem.op.side() == Side::Real) {
        auto u = [&](double s, double x) { return heat::solution_value(at_time(problem, s), x); };
        return fd_residual_real(problem.op, u, t, point.real(), h_t, h_x);
    }
    const cplx ut = (heat::solution_value(at_time(problem, t + h_t), point) -
                     heat::solution_value(at_time(problem, t - h_t), point)) /
                    (2.0 * h_t);
    const cplx Lu = ops::apply(problem.op, heat::solution_image(at_time(problem, t)))(point);
    return std::abs(ut - Lu);
}

double richardson_ratio(const HeatProblem& problem, double t, cplx point, double h) {
    return fd_residual(problem, t, point, h, h) / fd_residual(problem, t, point, h / 2.0, h / 2.0);
}

std::vector<cplx> default_probes(Side side) {
    if (side == Side::Real) return {-2.0, -1.25, -0.5, 0.0, 0.3, 1.0, 1.7, 2.0};
    std::vector<cplx> out{0.0};
    for (double r : {0.7, 1.4, 2.0})
        for (int k = 0; k < 6; ++k) out.push_back(std::polar(r, k * std::numbers::pi / 3.0 + 0.2 * r));
    return out;
}

TaylorResult taylor_evolve(const ops::Operator& op, const PolyGauss& f0, double t, int order, double threshold) {
    return taylor_evolve(op, f0, t, order, threshold, default_probes(op.side()));
}

TaylorResult taylor_evolve(const ops::Operator& op, const PolyGauss& f0, double t, int order, double threshold,
                           const std::vector<cplx>& probes) {
    if (order < 0) throw DomainError("taylor_evolve: order must be nonnegative");
    PolyGauss term = f0.with_side(op.side());
    PolyGauss sum = term;
    for (int k = 1; k <= order; ++k) {
        term = (t / k) * ops::apply(op, term);
        sum = sum + term;
    }
    if (order == 0 || sum.is_zero()) return {sum, 0.0};
    double top = 0.0, mass = 0.0;
    for (cplx p : probes) {
        top = std::max(top, std::abs(term(p)));
        mass = std::max(mass, std::abs(sum(p)));
    }
    const double estimate = mass > 0.0 ? top / mass : top;
    if (!(estimate <= threshold))
        throw AccuracyError("taylor_evolve: last term " + format_double(estimate) + " above threshold", estimate);
    return {sum, estimate};
}

double semigroup_defect(double a, double t1, double t2, double x, double y, double b) {
    if (!(t1 > 0.0) || !(t2 > 0.0)) throw DomainError("semigroup_defect: times must be positive");
    if (b == 0.0) b = a;
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("semigroup_defect: a must be positive");
    const Mehler k1 = mehler(a, t1), k2 = mehler(b, t2);
    // K_a(x, s, t1) K_b(s, y, t2) as a Gaussian in s.
    const PolyGauss integrand = PolyGauss::gaussian(Side::Real, k1.norm * k2.norm * std::exp(k1.xx * x * x + k2.ss * y * y),
                                                    k1.ss + k2.xx, k1.xs * x + k2.xs * y);
    const cplx composed = integral(integrand);
    return std::abs(composed - heat::mehler_kernel(a, t1 + t2, x, y));
}

double semigroup_defect(const heat::KernelSpec& spec, double t1, double t2, double x, double y) {
    if (spec.family != heat::KernelFamily::Mehler) throw UsageError("semigroup_defect: Mehler kernel only");
    return semigroup_defect(spec.a, t1, t2, x, y);
}

double flow_semigroup_defect(const HeatProblem& problem, double t1, double t2, cplx point, heat::Method method) {
    if (!(t1 >= 0.0) || !(t2 >= 0.0)) throw DomainError("flow_semigroup_defect: times must be nonnegative");
    const PolyGauss mid = heat::solution_image(at_time(problem, t1));
    const cplx direct = heat::solution_value(at_time(problem, t1 + t2), point, method);
    const cplx stepped = heat::solution_value({problem.op, t2, mid}, point, method);
    return std::abs(direct - stepped) / std::max(1.0, std::abs(direct));
}

double isometry_defect(const PolyGauss& f, const PolyGauss& g, double a, int order) {
    if (f.is_zero() || g.is_zero()) return 0.0;
    const cplx lhs = numgrid::l2_inner(f, g, order);
    const cplx rhs = numgrid::fock_inner(bargmann_image(f, a), bargmann_image(g, a), a / 2.0, order);
    return std::abs(lhs - rhs);
}

} // namespace bargheat::verify
