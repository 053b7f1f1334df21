#include "bargheat/operators.hpp"

#include "bargheat/errors.hpp"

#include <array>

namespace bargheat::ops {

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 6> kNames{{
    {Kind::DiracReal, "dirac-real"},
    {Kind::DiracComplex, "dirac-complex"},
    {Kind::EulerReal, "euler-real"},
    {Kind::EulerComplex, "euler-complex"},
    {Kind::HarmonicReal, "harmonic-real"},
    {Kind::HarmonicComplex, "harmonic-complex"},
}};

// c_mul * v g + c_diff * g'
PolyGauss first_order(const PolyGauss& g, cplx c_mul, cplx c_diff) {
    return c_mul * times_var(g) + c_diff * derivative(g);
}

} // namespace

Operator::Operator(Kind kind, double a) : kind_(kind), a_(a) {
    if (!(a > 0.0)) throw DomainError("operator parameter a must be positive");
}

Side Operator::side() const noexcept { return side_of(kind_); }

Side side_of(Kind kind) {
    switch (kind) {
    case Kind::DiracReal:
    case Kind::EulerReal:
    case Kind::HarmonicReal:
        return Side::Real;
    default:
        return Side::Complex;
    }
}

std::string_view kind_name(Kind kind) {
    for (const auto& [k, n] : kNames)
        if (k == kind) return n;
    return "?";
}

std::optional<Kind> parse_kind(std::string_view name) {
    for (const auto& [k, n] : kNames)
        if (n == name) return k;
    return std::nullopt;
}

PolyGauss apply(const Operator& op, const PolyGauss& g) {
    if (!g.is_zero() && g.side() != op.side())
        throw UsageError(std::string(kind_name(op.kind())) + " applied to a " + std::string(side_name(g.side())) +
                         "-side function");
    const double a = op.a();
    const PolyGauss f = g.with_side(op.side());
    switch (op.kind()) {
    case Kind::DiracReal:
        return derivative(f) - a * times_var(f);
    case Kind::DiracComplex:
        return (1.0 / a) * derivative(f) + 0.5 * times_var(f);
    case Kind::EulerReal:
        return a * times_var(derivative(f));
    case Kind::EulerComplex:
        return (-2.0 * a) * times_var(derivative(f)) - a * f;
    case Kind::HarmonicReal:
        return derivative(derivative(f)) - (a * a) * times_var(times_var(f));
    case Kind::HarmonicComplex:
        return derivative(derivative(f)) - (a * a / 4.0) * times_var(times_var(f)) - (a / 2.0) * f;
    }
    throw UsageError("apply: unknown operator kind");
}

double factor_check(const Operator& op, const PolyGauss& g) {
    const double a = op.a();
    const PolyGauss lhs = apply(op, g);
    const PolyGauss f = g.with_side(op.side());
    switch (op.kind()) {
    case Kind::HarmonicReal: {
        const PolyGauss rhs = first_order(first_order(f, a, 1.0), -a, 1.0) - a * f;
        return distance(lhs, rhs);
    }
    case Kind::HarmonicComplex: {
        const PolyGauss rhs = first_order(first_order(f, -a / 2.0, 1.0), a / 2.0, 1.0);
        return distance(lhs, rhs);
    }
    default:
        throw UsageError("factor_check applies to the harmonic operators only");
    }
}

double unshifted_factorization_defect(double a, const PolyGauss& g) {
    const Operator h(Kind::HarmonicReal, a);
    const PolyGauss f = g.with_side(Side::Real);
    return distance(apply(h, f), first_order(first_order(f, a, 1.0), -a, 1.0));
}

std::string_view identity_name(Identity id) {
    switch (id) {
    case Identity::LadderPosition: return "ladder-position";
    case Identity::LadderMomentum: return "ladder-momentum";
    case Identity::LadderLowering: return "ladder-lowering";
    case Identity::LadderRaising: return "ladder-raising";
    case Identity::HarmonicToEuler: return "harmonic-euler";
    case Identity::EulerToHarmonic: return "euler-harmonic";
    }
    return "?";
}

double intertwine_residual(Identity id, const PolyGauss& f, double a) {
    const PolyGauss g = f.with_side(Side::Real);
    const PolyGauss Bf = bargmann_image(g, a);
    PolyGauss lhs, rhs;
    switch (id) {
    case Identity::LadderPosition:
        lhs = bargmann_image(times_var(g), a);
        rhs = first_order(Bf, 0.5, 1.0 / a);
        break;
    case Identity::LadderMomentum:
        lhs = bargmann_image(derivative(g), a);
        rhs = first_order(Bf, -a / 2.0, 1.0);
        break;
    case Identity::LadderLowering:
        lhs = bargmann_image(apply(Operator(Kind::DiracReal, a), g), a);
        rhs = (-a) * times_var(Bf);
        break;
    case Identity::LadderRaising:
        lhs = bargmann_image(first_order(g, a, 1.0), a);
        rhs = 2.0 * derivative(Bf);
        break;
    case Identity::HarmonicToEuler:
        lhs = bargmann_image(apply(Operator(Kind::HarmonicReal, a), g), a);
        rhs = apply(Operator(Kind::EulerComplex, a), Bf);
        break;
    case Identity::EulerToHarmonic:
        lhs = bargmann_image(apply(Operator(Kind::EulerReal, a), g), a);
        rhs = apply(Operator(Kind::HarmonicComplex, a), Bf);
        break;
    }
    return distance(lhs, rhs);
}

} // namespace bargheat::ops
