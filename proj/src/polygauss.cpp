#include "bargheat/polygauss.hpp"

#include "bargheat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

namespace bargheat {

namespace {

using Poly = std::vector<cplx>;

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0.0) p.pop_back();
}

Poly poly_add(const Poly& p, const Poly& q) {
    Poly r(std::max(p.size(), q.size()), 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) r[k] += p[k];
    for (std::size_t k = 0; k < q.size(); ++k) r[k] += q[k];
    return r;
}

Poly poly_scale(const Poly& p, cplx s) {
    Poly r(p);
    for (auto& c : r) c *= s;
    return r;
}

// p * (c0 + c1 v)
Poly poly_mul_linear(const Poly& p, cplx c0, cplx c1) {
    if (p.empty()) return {};
    Poly r(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        r[k] += c0 * p[k];
        r[k + 1] += c1 * p[k];
    }
    return r;
}

bool exponents_match(const PolyGauss& f, const PolyGauss& g) {
    const double scale =
        std::max({1.0, std::abs(f.alpha()), std::abs(f.beta()), std::abs(g.alpha()), std::abs(g.beta())});
    return std::abs(f.alpha() - g.alpha()) <= 1e-12 * scale &&
           std::abs(f.beta() - g.beta()) <= 1e-12 * scale;
}

// Apply a first-order ladder c_mul * v + c_diff * d/dv.
PolyGauss ladder(const PolyGauss& g, cplx c_mul, cplx c_diff) {
    return c_mul * times_var(g) + c_diff * derivative(g);
}

// Horner over a ladder: sum_k c_k L^k base.
template <class Ladder>
PolyGauss ladder_horner(const std::vector<cplx>& c, const PolyGauss& base, Ladder&& step) {
    PolyGauss acc = c.back() * base;
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) acc = step(acc) + c[k] * base;
    return acc;
}

} // namespace

std::string_view side_name(Side side) { return side == Side::Real ? "real" : "complex"; }

PolyGauss::PolyGauss(Side side, std::vector<cplx> coeffs, cplx alpha, cplx beta)
    : side_(side), coeffs_(std::move(coeffs)), alpha_(alpha), beta_(beta) {
    strip(coeffs_);
    if (coeffs_.empty()) alpha_ = beta_ = 0.0;
}

PolyGauss PolyGauss::monomial(Side side, int n, cplx c) {
    if (n < 0) throw DomainError("monomial: negative power");
    std::vector<cplx> p(n + 1, 0.0);
    p[n] = c;
    return PolyGauss(side, std::move(p));
}

cplx PolyGauss::operator()(cplx v) const {
    if (coeffs_.empty()) return 0.0;
    cplx acc = coeffs_.back();
    for (int k = static_cast<int>(coeffs_.size()) - 2; k >= 0; --k) acc = acc * v + coeffs_[k];
    return acc * std::exp(alpha_ * v * v + beta_ * v);
}

PolyGauss operator*(cplx s, const PolyGauss& g) {
    if (s == 0.0) return PolyGauss::zero(g.side());
    return PolyGauss(g.side(), poly_scale(g.coeffs(), s), g.alpha(), g.beta());
}

PolyGauss operator+(const PolyGauss& f, const PolyGauss& g) {
    if (f.side() != g.side()) throw UsageError("PolyGauss sum across real and complex sides");
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (!exponents_match(f, g))
        throw UsageError("PolyGauss sum with different Gaussian exponents is not in the class");
    return PolyGauss(f.side(), poly_add(f.coeffs(), g.coeffs()), f.alpha(), f.beta());
}

PolyGauss operator-(const PolyGauss& f, const PolyGauss& g) { return f + cplx(-1.0) * g; }

PolyGauss derivative(const PolyGauss& g) {
    const auto& c = g.coeffs();
    if (c.empty()) return g;
    // (p' + p (2 alpha v + beta)) exp(...)
    const std::size_t n = c.size();
    Poly r(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (k >= 1) r[k - 1] += static_cast<double>(k) * c[k];
        r[k] += g.beta() * c[k];
        r[k + 1] += 2.0 * g.alpha() * c[k];
    }
    return PolyGauss(g.side(), std::move(r), g.alpha(), g.beta());
}

PolyGauss times_var(const PolyGauss& g) {
    if (g.is_zero()) return g;
    Poly r(g.coeffs().size() + 1, 0.0);
    std::copy(g.coeffs().begin(), g.coeffs().end(), r.begin() + 1);
    return PolyGauss(g.side(), std::move(r), g.alpha(), g.beta());
}

PolyGauss times_exp(const PolyGauss& g, cplx dalpha, cplx dbeta, cplx c) {
    if (g.is_zero() || c == 0.0) return PolyGauss::zero(g.side());
    return PolyGauss(g.side(), poly_scale(g.coeffs(), c), g.alpha() + dalpha, g.beta() + dbeta);
}

PolyGauss compose_affine(const PolyGauss& g, cplx scale, cplx shift) {
    const auto& c = g.coeffs();
    if (c.empty()) return g;
    Poly q{c.back()};
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        q = poly_mul_linear(q, shift, scale);
        q[0] += c[k];
    }
    const cplx a = g.alpha(), b = g.beta();
    const cplx factor = std::exp(a * shift * shift + b * shift);
    return PolyGauss(g.side(), poly_scale(q, factor), a * scale * scale,
                     2.0 * a * scale * shift + b * scale);
}

std::vector<cplx> taylor_coefficients(const PolyGauss& g, int n) {
    std::vector<cplx> out(std::max(n, 0), 0.0);
    if (n <= 0 || g.is_zero()) return out;
    std::vector<cplx> e(n, 0.0);
    e[0] = 1.0;
    if (n > 1) e[1] = g.beta();
    for (int k = 1; k + 1 < n; ++k) e[k + 1] = (g.beta() * e[k] + 2.0 * g.alpha() * e[k - 1]) / double(k + 1);
    const auto& c = g.coeffs();
    for (int m = 0; m < n; ++m)
        for (int j = 0; j <= std::min<int>(m, static_cast<int>(c.size()) - 1); ++j) out[m] += c[j] * e[m - j];
    return out;
}

std::vector<cplx> fock_coordinates(const PolyGauss& g, double a, int n) {
    std::vector<cplx> out(std::max(n, 0), 0.0);
    if (n <= 0 || g.is_zero()) return out;
    std::vector<cplx> e(n, 0.0);
    e[0] = 1.0;
    if (n > 1) e[1] = g.beta() / std::sqrt(a);
    for (int k = 1; k + 1 < n; ++k)
        e[k + 1] = g.beta() * e[k] / std::sqrt(a * (k + 1)) +
                   2.0 * g.alpha() * e[k - 1] * std::sqrt(double(k) / double(k + 1)) / a;
    const auto& c = g.coeffs();
    for (int m = 0; m < n; ++m) {
        double ratio = 1.0; // sqrt(m!/(m-j)!) / a^{j/2}
        for (int j = 0; j <= std::min<int>(m, static_cast<int>(c.size()) - 1); ++j) {
            out[m] += c[j] * e[m - j] * ratio;
            ratio *= std::sqrt(double(m - j) / a);
        }
    }
    return out;
}

double distance(const PolyGauss& f, const PolyGauss& g) {
    const auto& p = f.coeffs();
    const auto& q = g.coeffs();
    double cmax = 1.0;
    for (auto c : p) cmax = std::max(cmax, std::abs(c));
    for (auto c : q) cmax = std::max(cmax, std::abs(c));
    double dc = 0.0;
    for (std::size_t k = 0; k < std::max(p.size(), q.size()); ++k) {
        const cplx a = k < p.size() ? p[k] : 0.0;
        const cplx b = k < q.size() ? q[k] : 0.0;
        dc = std::max(dc, std::abs(a - b));
    }
    double de = 0.0;
    if (!f.is_zero() && !g.is_zero()) {
        const double escale =
            std::max({1.0, std::abs(f.alpha()), std::abs(f.beta()), std::abs(g.alpha()), std::abs(g.beta())});
        de = std::max(std::abs(f.alpha() - g.alpha()), std::abs(f.beta() - g.beta())) / escale;
    }
    return std::max(dc / cmax, de);
}

cplx integral(const PolyGauss& g) {
    if (g.is_zero()) return 0.0;
    const cplx a = g.alpha(), b = g.beta();
    if (!(a.real() < 0.0))
        throw DivergenceError("integral: Re(alpha) must be negative, got alpha = " + format_double(a.real()) +
                              (a.imag() < 0 ? "" : "+") + format_double(a.imag()) + "i");
    // 2 alpha M_{k+1} = -beta M_k - k M_{k-1}
    cplx m_prev = 0.0;
    cplx m = std::sqrt(std::numbers::pi) / std::sqrt(-a) * std::exp(-b * b / (4.0 * a));
    cplx acc = 0.0;
    const auto& c = g.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        acc += c[k] * m;
        const cplx next = -(b * m + double(k) * m_prev) / (2.0 * a);
        m_prev = m;
        m = next;
    }
    return acc;
}

PolyGauss integrate_with_source(const PolyGauss& g, cplx kappa, Side out) {
    if (g.is_zero()) return PolyGauss::zero(out);
    const cplx a = g.alpha(), b = g.beta();
    if (!(a.real() < 0.0)) throw DivergenceError("integrate_with_source: Re(alpha) must be negative");
    // moments as polynomials Q_k(x) of the source term b + kappa x
    Poly q_prev;
    Poly q{1.0};
    Poly acc;
    const auto& c = g.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        acc = poly_add(acc, poly_scale(q, c[k]));
        Poly next = poly_add(poly_mul_linear(q, b, kappa), poly_scale(q_prev, double(k)));
        next = poly_scale(next, -1.0 / (2.0 * a));
        q_prev = std::move(q);
        q = std::move(next);
    }
    const cplx c0 = std::sqrt(std::numbers::pi) / std::sqrt(-a) * std::exp(-b * b / (4.0 * a));
    return PolyGauss(out, poly_scale(acc, c0), -kappa * kappa / (4.0 * a), -b * kappa / (2.0 * a));
}

PolyGauss heat_flow(const PolyGauss& g, cplx tau) {
    if (g.is_zero() || tau == 0.0) return g;
    const cplx d = 1.0 - 4.0 * g.alpha() * tau;
    if (!(d.real() > 0.0)) throw DivergenceError("heat_flow: Re(1 - 4 alpha tau) must be positive");
    const cplx b = g.beta();
    const PolyGauss base =
        PolyGauss::gaussian(g.side(), std::exp(tau * b * b / d) / std::sqrt(d), g.alpha() / d, b / d);
    return ladder_horner(g.coeffs(), base, [tau](const PolyGauss& f) { return ladder(f, 1.0, 2.0 * tau); });
}

PolyGauss bargmann_image(const PolyGauss& f, double a) {
    if (!(a > 0.0)) throw DomainError("bargmann_image: a must be positive");
    if (f.side() != Side::Real) throw UsageError("bargmann_image expects a real-side function");
    if (f.is_zero()) return PolyGauss::zero(Side::Complex);
    if (!(f.alpha().real() < a / 4.0))
        throw DivergenceError("bargmann_image: requires Re(alpha) < a/4");
    const double A = a / 2.0;
    const cplx d = A - f.alpha();
    const cplx b = f.beta();
    const cplx c0 = std::pow(2.0 * A / std::numbers::pi, 0.25) * std::sqrt(std::numbers::pi / d) *
                    std::exp(b * b / (4.0 * d));
    const PolyGauss base = PolyGauss::gaussian(Side::Complex, c0, A * A / d - A / 2.0, A * b / d);
    return ladder_horner(f.coeffs(), base, [a](const PolyGauss& g) { return ladder(g, 0.5, 1.0 / a); });
}

PolyGauss bargmann_preimage(const PolyGauss& F, double a) {
    if (!(a > 0.0)) throw DomainError("bargmann_preimage: a must be positive");
    if (F.side() != Side::Complex) throw UsageError("bargmann_preimage expects a complex-side function");
    if (F.is_zero()) return PolyGauss::zero(Side::Real);
    const double A = a / 2.0;
    const cplx shifted = F.alpha() + A / 2.0;
    if (!(shifted.real() > 0.0)) throw DivergenceError("bargmann_preimage: requires Re(alpha) > -a/4");
    const cplx d = A * A / shifted; // A - alpha of the preimage
    const cplx alpha = A - d;
    const cplx beta = F.beta() * d / A;
    const cplx norm = std::pow(2.0 * A / std::numbers::pi, 0.25) * std::sqrt(std::numbers::pi / d) *
                      std::exp(beta * beta / (4.0 * d));
    const PolyGauss base = PolyGauss::gaussian(Side::Real, 1.0 / norm, alpha, beta);
    return ladder_horner(F.coeffs(), base, [a](const PolyGauss& g) { return ladder(g, 1.0, -1.0 / a); });
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_record(const PolyGauss& g) {
    std::string s(side_name(g.side()));
    auto put = [&s](cplx c) {
        s += ',';
        s += format_double(c.real());
        s += ',';
        s += format_double(c.imag());
    };
    put(g.alpha());
    put(g.beta());
    for (auto c : g.coeffs()) put(c);
    return s;
}

PolyGauss from_record(std::string_view record) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : record) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != ' ' && ch != '\t') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    if (fields.size() < 5 || fields.size() % 2 == 0)
        throw ParseError("PolyGauss record needs side, alpha, beta and (re, im) coefficient pairs");
    Side side;
    if (fields[0] == "real")
        side = Side::Real;
    else if (fields[0] == "complex")
        side = Side::Complex;
    else
        throw ParseError("PolyGauss record: unknown side '" + fields[0] + "'");
    auto num = [](const std::string& f) {
        char* end = nullptr;
        const double v = std::strtod(f.c_str(), &end);
        if (f.empty() || end != f.c_str() + f.size()) throw ParseError("PolyGauss record: bad number '" + f + "'");
        return v;
    };
    std::vector<double> vals;
    for (std::size_t i = 1; i < fields.size(); ++i) vals.push_back(num(fields[i]));
    std::vector<cplx> coeffs;
    for (std::size_t i = 4; i + 1 < vals.size(); i += 2) coeffs.emplace_back(vals[i], vals[i + 1]);
    return PolyGauss(side, std::move(coeffs), {vals[0], vals[1]}, {vals[2], vals[3]});
}

} // namespace bargheat
