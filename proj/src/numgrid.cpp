#include "bargheat/numgrid.hpp"

#include "bargheat/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace bargheat::numgrid {

namespace {

// Orthonormal Hermite polynomials for weight exp(-x^2):
//   p_0 = pi^{-1/4},  b_{k+1} p_{k+1} = x p_k - b_k p_{k-1},  b_k = sqrt(k/2).
// Returns p_n(x) and p_{n-1}(x); also accumulates sum_{k<n} p_k^2.
struct HermiteEval {
    double pn;
    double pn1;
    double sumsq;
};

HermiteEval hermite_orthonormal(int n, double x) {
    double prev = 0.0;
    double cur = std::pow(std::numbers::pi, -0.25);
    double sumsq = 0.0;
    for (int k = 0; k < n; ++k) {
        sumsq += cur * cur;
        const double bk1 = std::sqrt(0.5 * (k + 1));
        const double bk = std::sqrt(0.5 * k);
        const double next = (x * cur - bk * prev) / bk1;
        prev = cur;
        cur = next;
    }
    return {cur, prev, sumsq};
}

// Unit-weight (a = 1) nodes and weights.
void unit_rule(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    if (n == 1) {
        w[0] = std::sqrt(std::numbers::pi);
        return;
    }
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd off(n - 1);
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) x[i] = es.eigenvalues()[i];

    const double dscale = std::sqrt(2.0 * n);
    for (int i = 0; i < n; ++i) {
        for (int it = 0; it < 4; ++it) {
            const auto h = hermite_orthonormal(n, x[i]);
            const double step = h.pn / (dscale * h.pn1);
            x[i] -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x[i]))) break;
        }
    }
    std::sort(x.begin(), x.end());
    for (int i = 0; i < n; ++i) w[i] = 1.0 / hermite_orthonormal(n, x[i]).sumsq;

    // exact mirror symmetry
    for (int i = 0; i < n / 2; ++i) {
        const int j = n - 1 - i;
        const double xs = 0.5 * (x[j] - x[i]);
        const double ws = 0.5 * (w[i] + w[j]);
        x[i] = -xs;
        x[j] = xs;
        w[i] = w[j] = ws;
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
}

} // namespace

QuadratureRule gauss_rule(int order, double a) {
    if (order < 1 || order > 300)
        throw DomainError("gauss_rule: order must lie in [1, 300], got " + std::to_string(order));
    if (!(a > 0.0) || !std::isfinite(a))
        throw DomainError("gauss_rule: weight parameter a must be positive");
    QuadratureRule rule;
    rule.order = order;
    rule.a = a;
    unit_rule(order, rule.nodes, rule.weights);
    const double s = 1.0 / std::sqrt(a);
    for (auto& x : rule.nodes) x *= s;
    for (auto& w : rule.weights) w *= s;
    return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

cplx integrate(const QuadratureRule& rule, const std::function<cplx(double)>& f) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

cplx integrate_line(const QuadratureRule& rule, const std::function<cplx(double)>& f,
                    double center) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = rule.nodes[i];
        const double w = std::exp(std::log(rule.weights[i]) + rule.a * y * y);
        acc += w * f(center + y);
    }
    return acc;
}

PlanarRule planar_rule(int order, double a) {
    PlanarRule pr;
    pr.a = a;
    pr.base_u = gauss_rule(order, a);
    pr.base_v = pr.base_u;
    const auto& r = pr.base_u;
    const double norm = a / std::numbers::pi;
    pr.nodes.reserve(r.nodes.size() * r.nodes.size());
    pr.weights.reserve(pr.nodes.capacity());
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            pr.nodes.emplace_back(r.nodes[i], r.nodes[j]);
            pr.weights.push_back(norm * r.weights[i] * r.weights[j]);
        }
    return pr;
}

PlanarRule adapted_planar_rule(int order, double a, cplx sigma, cplx lambda) {
    if (!(a > 0.0)) throw DomainError("adapted_planar_rule: a must be positive");
    const double s = std::abs(sigma);
    if (!(s < a))
        throw DivergenceError("planar integrand does not decay: |sigma| = " + std::to_string(s) +
                              " >= a = " + std::to_string(a));
    // w = rot * omega turns Re(sigma w^2) into |sigma| (u^2 - v^2)
    const double phi = s > 0.0 ? -0.5 * std::arg(sigma) : 0.0;
    const cplx rot = std::polar(1.0, phi);
    const double su = a - s;
    const double sv = a + s;
    const cplx lam = lambda * rot;
    const double uc = lam.real() / (2.0 * su);
    const double vc = -lam.imag() / (2.0 * sv);

    PlanarRule pr;
    pr.a = a;
    pr.base_u = gauss_rule(order, su);
    pr.base_v = gauss_rule(order, sv);
    const double lognorm = std::log(a / std::numbers::pi);
    for (std::size_t i = 0; i < pr.base_u.nodes.size(); ++i) {
        const double yu = pr.base_u.nodes[i];
        for (std::size_t j = 0; j < pr.base_v.nodes.size(); ++j) {
            const double yv = pr.base_v.nodes[j];
            const cplx omega(uc + yu, vc + yv);
            const double logw = lognorm + std::log(pr.base_u.weights[i]) +
                                std::log(pr.base_v.weights[j]) + su * yu * yu + sv * yv * yv -
                                a * std::norm(omega);
            pr.nodes.push_back(rot * omega);
            pr.weights.push_back(std::exp(logw));
        }
    }
    return pr;
}

cplx integrate(const PlanarRule& rule, const std::function<cplx(cplx)>& f) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * f(rule.nodes[k]);
    return acc;
}

} // namespace bargheat::numgrid
