#include "bargheat/suites.hpp"

#include "bargheat/errors.hpp"
#include "bargheat/inner.hpp"
#include "bargheat/numgrid.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

namespace bargheat::suites {

namespace {

using bargmann::Method;
using heat::HeatProblem;
using ops::Kind;
using ops::Operator;

constexpr double kPi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};
constexpr double kExact = 1e-12;
// last-term guard for the order-12 truncated exponential
constexpr double kTaylorGuard = 1e-10;

std::vector<double> a_values(const SuiteOptions& o, std::vector<double> fallback = {0.5, 1.0, 2.0}) {
    if (o.a) return {*o.a};
    return fallback;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double rel(cplx v, cplx ref) { return std::abs(v - ref) / std::max(1.0, std::abs(ref)); }

// Times a check and folds exceptions into a failing report.
DefectReport timed(const std::string& check, const std::string& params, double tol,
                   const std::function<double()>& measure) {
    const auto t0 = std::chrono::steady_clock::now();
    double defect;
    std::string name = check;
    try {
        defect = measure();
    } catch (const std::exception& e) {
        defect = std::numeric_limits<double>::infinity();
        name += " [" + std::string(e.what()) + "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return verify::make_report(std::move(name), params, defect, tol, secs);
}

void append(Reports& out, Reports more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

PolyGauss conj_real(const PolyGauss& f) {
    std::vector<cplx> c(f.coeffs().size());
    std::transform(f.coeffs().begin(), f.coeffs().end(), c.begin(), [](cplx v) { return std::conj(v); });
    return PolyGauss(f.side(), std::move(c), std::conj(f.alpha()), std::conj(f.beta()));
}

// Product of two PolyGauss values as a PolyGauss.
PolyGauss product(const PolyGauss& f, const PolyGauss& g) {
    if (f.is_zero() || g.is_zero()) return PolyGauss::zero(f.side());
    std::vector<cplx> c(f.coeffs().size() + g.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) c[i + j] += f.coeffs()[i] * g.coeffs()[j];
    return PolyGauss(f.side(), std::move(c), f.alpha() + g.alpha(), f.beta() + g.beta());
}

PolyGauss unit_norm(const PolyGauss& f) {
    return (1.0 / std::sqrt(std::abs(integral(product(f, conj_real(f)))))) * f;
}

std::vector<cplx> complex_probes() {
    return {0.0, 1.0, -1.5, cplx(0, 2), cplx(1, 1), cplx(-0.7, 1.2), std::polar(2.0, kPi / 5.0),
            cplx(0.4, -1.1)};
}

std::vector<double> real_probes() { return {-2.0, -1.3, -0.6, 0.0, 0.25, 0.9, 1.6, 2.0}; }

std::vector<PolyGauss> real_inits(double a) {
    return {PolyGauss::constant(Side::Real, 1.0), PolyGauss::monomial(Side::Real, 2),
            PolyGauss(Side::Real, {1.0, 1.0}, -a / 2.0),
            PolyGauss(Side::Real, {0.5, -1.0, 0.0, 0.25}, -a / 2.0, 0.3)};
}

std::vector<PolyGauss> complex_inits() {
    return {PolyGauss::constant(Side::Complex, 1.0), PolyGauss::monomial(Side::Complex, 1),
            PolyGauss(Side::Complex, {0.0, I, 1.0}), PolyGauss(Side::Complex, {1.0, -0.5, 0.0, 0.2 * I}),
            PolyGauss::gaussian(Side::Complex, 1.0, 0.0, 0.3)};
}

std::vector<PolyGauss> inits_for(Kind k, double a) {
    return ops::side_of(k) == Side::Real ? real_inits(a) : complex_inits();
}

// The probe used for finite-difference ratios: one init with nontrivial
// third derivatives in t and x.
PolyGauss fd_init(Kind k, double a) {
    if (ops::side_of(k) == Side::Real) return PolyGauss(Side::Real, {1.0, 1.0}, -a / 2.0);
    return PolyGauss(Side::Complex, {0.0, I, 1.0});
}

std::string kind_params(Kind k, double a) { return std::string(ops::kind_name(k)) + " a=" + fmt(a); }

// --- transform checks --------------------------------------------------------

Reports isometry_checks(const SuiteOptions& o) {
    Reports out;
    for (double a : a_values(o)) {
        out.push_back(timed("isometry", "a=" + fmt(a) + " order=" + std::to_string(o.order), o.tolerance, [&] {
            const auto set = isometry_set(a);
            double worst = 0.0;
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i; j < set.size(); ++j)
                    worst = std::max(worst, verify::isometry_defect(set[i], set[j], a, o.order));
            return worst;
        }));
    }
    return out;
}

Reports inversion_checks(const SuiteOptions& o) {
    Reports out;
    for (double a : a_values(o)) {
        for (Method m : {Method::Series, Method::Quadrature}) {
            const std::string params =
                "a=" + fmt(a) + (m == Method::Series ? " series" : " quadrature order=" + std::to_string(o.order));
            out.push_back(timed("round-trip", params, o.tolerance, [&] {
                auto set = isometry_set(a);
                set.push_back(PolyGauss(Side::Real, {1.0, 1.0}, -a / 2.0));
                const bargmann::TransformSpec spec{a, o.order};
                double worst = 0.0;
                for (const auto& f : set) {
                    const PolyGauss F = bargmann::forward_image(f, spec);
                    for (int k = 0; k <= 60; ++k) {
                        const double x = -3.0 + 0.1 * k;
                        worst = std::max(worst, std::abs(bargmann::inverse(F, spec, x, m) - f(x)));
                    }
                }
                return worst;
            }));
        }
    }
    return out;
}

cplx shifted_gaussian_image(double a, double b, double s, cplx z) {
    return std::pow(a / kPi, 0.25) * std::sqrt(kPi / b) * std::exp(a * s * z) *
           std::exp(a / 4.0 * (a / b - 1.0) * z * z);
}

cplx centred_gaussian_image(double a, double c, cplx z) {
    return std::pow(a / kPi, 0.25) * std::sqrt(kPi / (c + a / 2.0)) *
           std::exp(a / 4.0 * z * z * (a - 2.0 * c) / (a + 2.0 * c));
}

Reports gaussian_transform_checks(const SuiteOptions& o) {
    Reports out;
    for (double a : a_values(o)) {
        const bargmann::TransformSpec spec{a / 2.0, o.order};
        out.push_back(timed("gaussian transform (shifted)", "a=" + fmt(a), 1e-10, [&] {
            double worst = 0.0;
            for (double b : {a / 2.0 + 0.1, a, 2.0 * a})
                for (double s : {0.0, 1.0}) {
                    const PolyGauss f(Side::Real, {std::exp(-b * s * s)}, a / 2.0 - b, 2.0 * b * s);
                    for (cplx z : complex_probes()) {
                        const cplx ref = shifted_gaussian_image(a, b, s, z);
                        worst = std::max({worst, rel(bargmann::forward_quadrature(f, spec, z), ref),
                                          rel(bargmann::forward(f, spec, z), ref)});
                    }
                }
            return worst;
        }));
        out.push_back(timed("gaussian transform (centred)", "a=" + fmt(a), 1e-10, [&] {
            double worst = 0.0;
            for (double c : {a / 4.0, a / 2.0, a}) {
                const PolyGauss f = PolyGauss::gaussian(Side::Real, 1.0, -c);
                for (cplx z : complex_probes()) {
                    const cplx ref = centred_gaussian_image(a, c, z);
                    worst = std::max({worst, rel(bargmann::forward_quadrature(f, spec, z), ref),
                                      rel(bargmann::forward(f, spec, z), ref)});
                }
            }
            return worst;
        }));
    }
    return out;
}

Reports quadrature_checks(const SuiteOptions& o) {
    Reports out;
    for (double a : a_values(o, {0.5, 1.0, 2.0, kPi})) {
        out.push_back(timed("planar monomials", "a=" + fmt(a) + " order=32", o.tolerance, [&] {
            const auto rule = numgrid::planar_rule(32, a);
            double worst = 0.0;
            for (int n = 0; n <= 6; ++n)
                for (int m = 0; m <= 6; ++m) {
                    const cplx v = numgrid::integrate(rule, [&](cplx w) { return std::pow(w, n) * std::pow(std::conj(w), m); });
                    const double ref = n == m ? std::tgamma(n + 1.0) / std::pow(a, n) : 0.0;
                    worst = std::max(worst, std::abs(v - ref));
                }
            return worst;
        }));
        out.push_back(timed("planar mass", "a=" + fmt(a) + " order=" + std::to_string(o.order), kExact, [&] {
            const auto rule = numgrid::planar_rule(o.order, a);
            double total = 0.0;
            for (double w : rule.weights) total += w;
            return std::abs(total - 1.0);
        }));
        out.push_back(timed("line moments", "a=" + fmt(a) + " orders 1..64", 1e-10, [&] {
            double worst = 0.0;
            for (int n = 1; n <= 64; ++n) {
                const auto rule = numgrid::gauss_rule(n, a);
                for (int k = 0; k <= 2 * n - 1; k += 2) {
                    // int x^k exp(-a x^2) = Gamma((k+1)/2) / a^((k+1)/2)
                    const double ref = std::exp(std::lgamma((k + 1) / 2.0) - (k + 1) / 2.0 * std::log(a));
                    const double v = numgrid::integrate(rule, std::function<double(double)>([k](double x) { return std::pow(x, k); }));
                    worst = std::max(worst, std::abs(v - ref) / ref);
                }
            }
            return worst;
        }));
    }
    return out;
}

// --- intertwining -------------------------------------------------------------

Reports intertwine_checks(const SuiteOptions& o) {
    Reports out;
    constexpr ops::Identity ids[] = {ops::Identity::LadderPosition, ops::Identity::LadderMomentum,
                                     ops::Identity::LadderLowering, ops::Identity::LadderRaising,
                                     ops::Identity::HarmonicToEuler, ops::Identity::EulerToHarmonic};
    for (double a : a_values(o)) {
        const auto set = intertwine_set(a);
        for (auto id : ids) {
            out.push_back(timed(std::string(ops::identity_name(id)), "a=" + fmt(a), kExact, [&] {
                double worst = 0.0;
                for (const auto& f : set) worst = std::max(worst, ops::intertwine_residual(id, f, a));
                return worst;
            }));
        }
    }
    return out;
}

// --- Fourier-family conjugations ----------------------------------------------

std::vector<PolyGauss> conj_polys() {
    std::vector<PolyGauss> out;
    for (int n = 0; n <= 6; ++n) out.push_back(PolyGauss::monomial(Side::Complex, n));
    out.push_back(PolyGauss(Side::Complex, {1.0, -0.5 * I, 0.25, 0.0, 0.1, -0.05 * I, 0.02}));
    return out;
}

Reports fourier_conj_checks(const SuiteOptions& o) {
    Reports out;
    for (double a : a_values(o)) {
        for (Method m : {Method::Series, Method::Quadrature}) {
            const std::string tag = m == Method::Series ? " series" : " quadrature";
            out.push_back(timed("fourier conjugation r=1", "a=" + fmt(a) + tag, o.tolerance, [&] {
                double worst = 0.0;
                for (const auto& F : conj_polys())
                    for (cplx z : complex_probes()) {
                        worst = std::max(worst, rel(bargmann::fock_fourier_conj(F, a, 1.0, z, m, o.order),
                                                    std::sqrt(2.0) * F(I * z)));
                        worst = std::max(worst, rel(bargmann::fock_fourier_conj_inverse(F, a, 1.0, z, m, o.order),
                                                    F(-I * z) / std::sqrt(2.0)));
                    }
                return worst;
            }));
            out.push_back(timed("fourier conjugation compositions", "a=" + fmt(a) + tag, o.tolerance, [&] {
                double worst = 0.0;
                for (double r : {0.5, 2.0, std::exp(0.1 * a)})
                    for (const auto& F : conj_polys()) {
                        const PolyGauss G = bargmann::conjugated_fourier(F, a, r);
                        const PolyGauss Finv1 = bargmann::conjugated_fourier_inverse(F, a, 1.0);
                        const PolyGauss D = bargmann::conjugated_dilation(F, a, r);
                        for (cplx z : complex_probes()) {
                            const cplx dil = bargmann::fock_dilation(F, a, r, z, m, o.order);
                            worst = std::max({worst,
                                              rel(bargmann::fock_fourier_conj(F, a, r, z, m, o.order), G(z)),
                                              rel(bargmann::fock_fourier_conj_inverse(G, a, r, z, m, o.order), F(z)),
                                              rel(dil, D(z)),
                                              rel(dil, bargmann::fock_fourier_conj(Finv1, a, r, z, m, o.order) /
                                                           std::sqrt(r))});
                        }
                    }
                return worst;
            }));
        }
    }
    return out;
}

// --- heat flows -----------------------------------------------------------------

Reports exact_residual_checks(const SuiteOptions& o, const std::vector<Kind>& kinds) {
    Reports out;
    for (double a : a_values(o))
        for (Kind k : kinds)
            out.push_back(timed("exact residual", kind_params(k, a), kExact, [&] {
                double worst = 0.0;
                std::vector<PolyGauss> inits = inits_for(k, a);
                if (k == Kind::HarmonicReal)
                    for (int n = 0; n <= 2; ++n) inits.push_back(hermite_state(a, n));
                for (const auto& g : inits)
                    for (double t : {0.0, 0.3, 1.1})
                        worst = std::max(worst, heat::exact_residual({Operator(k, a), t, g}));
                return worst;
            }));
    return out;
}

Reports richardson_checks(const SuiteOptions& o, const std::vector<Kind>& kinds) {
    Reports out;
    for (double a : a_values(o))
        for (Kind k : kinds)
            out.push_back(timed("fd richardson |ratio - 4|", kind_params(k, a) + " t=0.5 h=1e-2", 0.5, [&] {
                const HeatProblem p{Operator(k, a), 0.5, fd_init(k, a)};
                const cplx point = ops::side_of(k) == Side::Real ? cplx(0.3) : cplx(0.3, 0.4);
                return std::abs(verify::richardson_ratio(p, 0.5, point, 1e-2) - 4.0);
            }));
    return out;
}

Reports flow_semigroup_checks(const SuiteOptions& o, const std::vector<Kind>& kinds) {
    Reports out;
    for (double a : a_values(o))
        for (Kind k : kinds)
            out.push_back(timed("flow semigroup", kind_params(k, a) + " t1=0.3 t2=0.45", o.tolerance, [&] {
                double worst = 0.0;
                const auto probes = ops::side_of(k) == Side::Real ? verify::default_probes(Side::Real) : complex_probes();
                for (const auto& g : inits_for(k, a))
                    for (cplx p : probes)
                        worst = std::max(worst, verify::flow_semigroup_defect({Operator(k, a), 0.0, g}, 0.3, 0.45, p));
                return worst;
            }));
    return out;
}

Reports taylor_checks(const SuiteOptions& o, const std::vector<Kind>& kinds) {
    Reports out;
    for (double a : a_values(o))
        for (Kind k : kinds)
            out.push_back(timed("taylor agreement", kind_params(k, a) + " at=0.1 order=12", 1e-6, [&] {
                const double t = 0.1 / a;
                const Operator op(k, a);
                const auto probes = verify::default_probes(op.side());
                double worst = 0.0;
                for (const auto& g : inits_for(k, a)) {
                    const PolyGauss s = verify::taylor_evolve(op, g, t, 12, kTaylorGuard).value;
                    for (cplx p : probes) {
                        const cplx ref = heat::solution_value({op, t, g}, p);
                        worst = std::max(worst, rel(s(p), ref));
                    }
                }
                return worst;
            }));
    return out;
}

// --- Mehler kernel ----------------------------------------------------------------

struct KernelPoint {
    double a, t, x, s;
};

std::vector<KernelPoint> random_kernel_points(int n) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> ua(0.3, 3.0), ut(0.05, 2.0), ux(-3.0, 3.0);
    std::vector<KernelPoint> out;
    for (int i = 0; i < n; ++i) {
        const double a = ua(rng), t = ut(rng), x = ux(rng), s = ux(rng);
        out.push_back({a, t, x, s});
    }
    return out;
}

Reports mehler_checks(const SuiteOptions& o) {
    Reports out;
    out.push_back(timed("mehler product vs hyperbolic", "100 random points", kExact, [] {
        double worst = 0.0;
        for (const auto& p : random_kernel_points(100)) {
            const double k = heat::mehler_kernel(p.a, p.t, p.x, p.s);
            const double h = heat::mehler_kernel(p.a, p.t, p.x, p.s, heat::MehlerForm::Hyperbolic);
            worst = std::max(worst, std::abs(k - h) / h);
        }
        return worst;
    }));
    out.push_back(timed("mehler positivity and symmetry", "100 random points", kExact, [] {
        double worst = 0.0;
        for (const auto& p : random_kernel_points(100)) {
            const double k = heat::mehler_kernel(p.a, p.t, p.x, p.s);
            if (!(k > 0.0)) return std::numeric_limits<double>::infinity();
            worst = std::max(worst, std::abs(k - heat::mehler_kernel(p.a, p.t, p.s, p.x)) / k);
        }
        return worst;
    }));
    out.push_back(timed("mehler kernel semigroup", "8 compositions", 1e-10, [] {
        const KernelPoint cases[] = {{1.0, 0.2, 0.0, 0.0}, {2.0, 0.1, 0.5, -0.5}, {0.5, 0.7, 1.2, 0.3},
                                     {1.0, 0.05, -1.0, 2.0}};
        double worst = 0.0;
        for (const auto& c : cases) {
            worst = std::max(worst, verify::semigroup_defect(c.a, c.t, c.t, c.x, c.s));
            worst = std::max(worst, verify::semigroup_defect(c.a, c.t, 3.0 * c.t, c.x, c.s));
        }
        return worst;
    }));
    for (double a : a_values(o))
        for (Method m : {Method::Exact, Method::Quadrature}) {
            const std::string tag = m == Method::Exact ? " exact" : " quadrature";
            out.push_back(timed("mehler eigen decay", "a=" + fmt(a) + " n=0,1,2" + tag, o.tolerance, [&] {
                double worst = 0.0;
                for (int n = 0; n <= 2; ++n) {
                    const PolyGauss y = hermite_state(a, n);
                    for (double t : {0.1, 0.5, 1.0}) {
                        double scale = 0.0, diff = 0.0;
                        for (double x : real_probes()) {
                            const cplx ref = std::exp(-(2.0 * n + 1.0) * a * t) * y(x);
                            scale = std::max(scale, std::abs(ref));
                            diff = std::max(diff, std::abs(heat::solve_harmonic_real(y, a, t, x, m, o.order) - ref));
                        }
                        worst = std::max(worst, diff / scale);
                    }
                }
                return worst;
            }));
        }
    out.push_back(timed("mehler small-t recovery", "a=1 t=1e-3 y0=exp(-x^2)", 0.01, [] {
        const PolyGauss y0 = PolyGauss::gaussian(Side::Real, 1.0, -1.0);
        double worst = 0.0;
        for (int k = 0; k <= 80; ++k) {
            const double x = -2.0 + 0.05 * k;
            worst = std::max(worst, std::abs(heat::solve_harmonic_real(y0, 1.0, 1e-3, x) - y0(x)));
        }
        return worst;
    }));
    for (double a : a_values(o))
        out.push_back(timed("mehler conjugation route", "a=" + fmt(a), o.tolerance, [&] {
            double worst = 0.0;
            for (const auto& y0 : real_inits(a))
                for (double t : {0.2, 0.8}) {
                    const PolyGauss viaB = heat::conjugation_image({Operator(Kind::HarmonicReal, a), t, y0});
                    for (double x : real_probes())
                        worst = std::max(worst, rel(viaB(x), heat::solve_harmonic_real(y0, a, t, x)));
                }
            return worst;
        }));
    return out;
}

DefectReport mehler_prefactor_discrepancy() {
    const double sample = heat::mehler_kernel(1.0, 0.25, 0.0, 0.0, heat::MehlerForm::HyperbolicUnhalved) /
                          heat::mehler_kernel(1.0, 0.25, 0.0, 0.0);
    return timed("|sqrt(a/pi) hyperbolic prefactor ratio - sqrt 2|",
                 "100 random points; ratio " + format_double(sample) + " at a=1 t=0.25 x=s=0", kExact, [] {
        double worst = 0.0;
        for (const auto& p : random_kernel_points(100)) {
            const double unhalved = heat::mehler_kernel(p.a, p.t, p.x, p.s, heat::MehlerForm::HyperbolicUnhalved);
            const double k = heat::mehler_kernel(p.a, p.t, p.x, p.s);
            worst = std::max(worst, std::abs(unhalved / k - std::sqrt(2.0)));
        }
        return worst;
    });
}

// --- complex harmonic flow -----------------------------------------------------

Reports complex_harmonic_checks(const SuiteOptions& o) {
    Reports out;
    for (double a : a_values(o)) {
        for (Method m : {Method::Series, Method::Quadrature}) {
            const std::string tag = m == Method::Series ? " series" : " quadrature";
            out.push_back(timed("complex harmonic vs dilation route", "a=" + fmt(a) + tag, o.tolerance, [&] {
                double worst = 0.0;
                for (const auto& V0 : complex_inits())
                    for (double t : {0.1, 0.5})
                        for (cplx z : complex_probes()) {
                            const cplx route = bargmann::fock_dilation(V0, a, std::exp(a * t), z, Method::Series);
                            worst = std::max(worst,
                                             rel(heat::solve_harmonic_complex(V0, a, t, z, m, o.order), route));
                        }
                return worst;
            }));
            out.push_back(timed("complex harmonic t=0 reproduces", "a=" + fmt(a) + tag, o.tolerance, [&] {
                double worst = 0.0;
                for (const auto& V0 : complex_inits())
                    for (cplx z : complex_probes())
                        worst = std::max(worst, rel(heat::solve_harmonic_complex(V0, a, 0.0, z, m, o.order), V0(z)));
                return worst;
            }));
        }
        out.push_back(timed("complex harmonic constant closed form", "a=" + fmt(a), kExact, [&] {
            double worst = 0.0;
            const PolyGauss one = PolyGauss::constant(Side::Complex, 1.0);
            for (double t : {0.0, 0.3, 1.0})
                for (cplx z : complex_probes()) {
                    const cplx ref = std::exp(-a * t / 2.0) / std::sqrt(std::cosh(a * t)) *
                                     std::exp(-a / 4.0 * z * z * std::tanh(a * t));
                    worst = std::max(worst, rel(heat::solve_harmonic_complex(one, a, t, z), ref));
                }
            return worst;
        }));
    }
    return out;
}

DefectReport complex_prefactor_discrepancy(const SuiteOptions& o) {
    const PolyGauss one = PolyGauss::constant(Side::Complex, 1.0);
    const cplx sample = heat::solve_harmonic_complex(one, 1.0, 0.0, 0.0, Method::Series, o.order, heat::Prefactor::TwoI);
    return timed("|2i prefactor reproducing ratio - 2|",
                 "t=0; V(0)/V0(0) = " + format_double(sample.real()) + (sample.imag() < 0 ? "" : "+") +
                     format_double(sample.imag()) + "i for V0=1",
                 1e-10, [&] {
        double worst = 0.0;
        for (double a : a_values(o))
            for (const auto& V0 : complex_inits())
                for (cplx z : complex_probes()) {
                    const cplx ref = V0(z);
                    if (std::abs(ref) < 1e-8) continue;
                    const cplx v = heat::solve_harmonic_complex(V0, a, 0.0, z, Method::Series, o.order,
                                                                heat::Prefactor::TwoI);
                    worst = std::max(worst, std::abs(std::abs(v / ref) - 2.0));
                }
        return worst;
    });
}

DefectReport real_factorization_discrepancy(const SuiteOptions& o) {
    return timed("bare real factorization defect minus a g", "intertwine set", kExact, [&] {
        double worst = 0.0;
        for (double a : a_values(o))
            for (const auto& g : intertwine_set(a)) {
                const PolyGauss h = ops::apply(Operator(Kind::HarmonicReal, a), g);
                const PolyGauss inner = derivative(g) + a * times_var(g);
                const PolyGauss bare = derivative(inner) - a * times_var(inner);
                worst = std::max(worst, distance(bare - h, a * g));
            }
        return worst;
    });
}

DefectReport complex_factorization_discrepancy(const SuiteOptions& o) {
    return timed("full-coefficient complex factorization defect minus prediction", "intertwine set", kExact, [&] {
        double worst = 0.0;
        for (double a : a_values(o))
            for (const auto& f : intertwine_set(a)) {
                const PolyGauss g = bargmann_image(f, a);
                const PolyGauss H = ops::apply(Operator(Kind::HarmonicComplex, a), g);
                const PolyGauss inner = derivative(g) - a * times_var(g);
                const PolyGauss full = derivative(inner) + a * times_var(inner);
                const PolyGauss predicted = (-0.75 * a * a) * times_var(times_var(g)) - (a / 2.0) * g;
                worst = std::max(worst, distance(full - H, predicted));
            }
        return worst;
    });
}

const std::vector<Kind> kFirstFour = {Kind::DiracComplex, Kind::DiracReal, Kind::EulerReal, Kind::EulerComplex};
const std::vector<Kind> kAllSix = {Kind::DiracReal,    Kind::DiracComplex, Kind::EulerReal,
                                   Kind::EulerComplex, Kind::HarmonicReal, Kind::HarmonicComplex};

} // namespace

std::vector<PolyGauss> isometry_set(double a) {
    std::vector<PolyGauss> out;
    for (int d = 0; d <= 4; ++d)
        for (double alpha : {-a, -a / 2.0}) {
            std::vector<cplx> c(d + 1);
            for (int k = 0; k <= d; ++k) c[k] = cplx(1.0 / (k + 1), 0.3 * (k % 2 == 0 ? 1.0 : -1.0) * k);
            out.push_back(unit_norm(PolyGauss(Side::Real, std::move(c), alpha, d % 2 == 0 ? 0.0 : 0.4)));
        }
    return out;
}

std::vector<PolyGauss> intertwine_set(double a) {
    std::vector<PolyGauss> out;
    for (double alpha : {-a, -a / 2.0, -0.75 * a})
        for (cplx beta : {cplx(0.0), cplx(1.0), I})
            for (int d : {0, 3, 8}) {
                std::vector<cplx> c(d + 1);
                for (int k = 0; k <= d; ++k) c[k] = cplx(std::cos(k + 1.0), std::sin(0.5 * k));
                out.push_back(PolyGauss(Side::Real, std::move(c), alpha, beta));
            }
    for (int n = 0; n <= 2; ++n) out.push_back(hermite_state(a, n));
    return out;
}

PolyGauss hermite_state(double a, int n) {
    PolyGauss g = PolyGauss::gaussian(Side::Real, 1.0, -a / 2.0);
    for (int k = 0; k < n; ++k) g = derivative(g) - a * times_var(g);
    return g;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"isometry", "intertwine", "residual",
                                                   "semigroup", "lemma23",    "errata"};
    return names;
}

Reports run_suite(std::string_view name, const SuiteOptions& o) {
    Reports out;
    if (name == "isometry") {
        append(out, isometry_checks(o));
        append(out, inversion_checks(o));
        append(out, gaussian_transform_checks(o));
        append(out, quadrature_checks(o));
    } else if (name == "intertwine") {
        append(out, intertwine_checks(o));
    } else if (name == "residual") {
        append(out, exact_residual_checks(o, kAllSix));
        append(out, richardson_checks(o, kAllSix));
        append(out, taylor_checks(o, kFirstFour));
        append(out, taylor_checks(o, {Kind::HarmonicComplex}));
    } else if (name == "semigroup") {
        append(out, flow_semigroup_checks(o, kAllSix));
        Reports m = mehler_checks(o);
        for (auto& r : m)
            if (r.check.rfind("mehler kernel semigroup", 0) == 0) out.push_back(r);
        out.push_back(timed("mismatched-a control 1e-3 / defect", "a=1,2 t1=t2=0.2 x=y=0", 1.0,
                            [] { return 1e-3 / verify::semigroup_defect(1.0, 0.2, 0.2, 0.0, 0.0, 2.0); }));
    } else if (name == "lemma23") {
        append(out, fourier_conj_checks(o));
    } else if (name == "errata") {
        out.push_back(mehler_prefactor_discrepancy());
        out.push_back(complex_prefactor_discrepancy(o));
        out.push_back(real_factorization_discrepancy(o));
        out.push_back(complex_factorization_discrepancy(o));
    } else {
        throw UsageError("unknown suite '" + std::string(name) + "'");
    }
    return out;
}

std::string_view criterion_title(int n) {
    switch (n) {
    case 1: return "isometry";
    case 2: return "inversion round trip";
    case 3: return "ladder and intertwining identities";
    case 4: return "gaussian transforms";
    case 5: return "fourier-family conjugations";
    case 6: return "dirac and euler flows";
    case 7: return "mehler flow and kernel";
    case 8: return "complex harmonic flow";
    case 9: return "quadrature self-test";
    }
    throw UsageError("criterion number out of range");
}

Reports criterion(int n, const SuiteOptions& o) {
    Reports out;
    switch (n) {
    case 1: return isometry_checks(o);
    case 2: return inversion_checks(o);
    case 3: return intertwine_checks(o);
    case 4: return gaussian_transform_checks(o);
    case 5: return fourier_conj_checks(o);
    case 6:
        append(out, exact_residual_checks(o, kFirstFour));
        append(out, richardson_checks(o, kFirstFour));
        append(out, flow_semigroup_checks(o, kFirstFour));
        append(out, taylor_checks(o, kFirstFour));
        return out;
    case 7:
        append(out, mehler_checks(o));
        append(out, exact_residual_checks(o, {Kind::HarmonicReal}));
        out.push_back(mehler_prefactor_discrepancy());
        return out;
    case 8:
        append(out, complex_harmonic_checks(o));
        append(out, taylor_checks(o, {Kind::HarmonicComplex}));
        append(out, exact_residual_checks(o, {Kind::HarmonicComplex}));
        out.push_back(complex_prefactor_discrepancy(o));
        return out;
    case 9: return quadrature_checks(o);
    }
    throw UsageError("criterion number out of range");
}

DefectReport summarize(int n, const Reports& parts) {
    DefectReport line;
    line.check = std::to_string(n) + " " + std::string(criterion_title(n));
    line.pass = !parts.empty();
    double worst_ratio = -1.0;
    for (const auto& r : parts) {
        line.seconds += r.seconds;
        line.pass = line.pass && r.pass;
        const double ratio = r.tolerance > 0.0 ? r.defect / r.tolerance : r.defect;
        if (!(ratio <= worst_ratio) || worst_ratio < 0.0) {
            worst_ratio = std::isnan(ratio) ? std::numeric_limits<double>::infinity() : ratio;
            line.defect = r.defect;
            line.tolerance = r.tolerance;
            line.params = r.check + " " + r.params;
        }
    }
    line.params = std::to_string(parts.size()) + " checks, worst: " + line.params;
    return line;
}

Reports table(const SuiteOptions& o) {
    Reports out;
    for (int n = 1; n <= kCriteria; ++n) out.push_back(summarize(n, criterion(n, o)));
    return out;
}

} // namespace bargheat::suites
