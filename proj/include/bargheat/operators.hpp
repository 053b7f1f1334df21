#pragma once

#include "bargheat/polygauss.hpp"

#include <optional>
#include <string_view>

namespace bargheat::ops {

enum class Kind {
    DiracReal,      // d/dx - a x
    DiracComplex,   // (1/a) d/dz + z/2
    EulerReal,      // a x d/dx
    EulerComplex,   // -2 a z d/dz - a
    HarmonicReal,   // d^2/dx^2 - a^2 x^2
    HarmonicComplex // d^2/dz^2 - a^2 z^2 / 4 - a/2
};

/// One of the six operators at a fixed parameter a > 0.
class Operator {
  public:
    Operator(Kind kind, double a);

    Kind kind() const noexcept { return kind_; }
    double a() const noexcept { return a_; }
    Side side() const noexcept;

  private:
    Kind kind_;
    double a_;
};

Side side_of(Kind kind);

/// CLI vocabulary: dirac-real, dirac-complex, euler-real, euler-complex,
/// harmonic-real, harmonic-complex.
std::string_view kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

/// Exact image of g. UsageError on a side mismatch.
PolyGauss apply(const Operator& op, const PolyGauss& g);

/// Distance between apply(op, g) and the product of first-order factors:
///   harmonic-complex: (d/dz + a z/2)(d/dz - a z/2)
///   harmonic-real:    (d/dx - a x)(d/dx + a x) - a
/// Both vanish identically.
double factor_check(const Operator& op, const PolyGauss& g);

/// Distance between h_x^a g and the bare product (d/dx - a x)(d/dx + a x) g,
/// i.e. the real factorization without the constant shift; the two differ
/// by exactly a g.
double unshifted_factorization_defect(double a, const PolyGauss& g);

enum class Identity {
    LadderPosition,   // B(x f) = ((1/a) d/dz + z/2) B f
    LadderMomentum,   // B(f') = (d/dz - (a/2) z) B f
    LadderLowering,   // B((d/dx - a x) f) = -a z B f
    LadderRaising,    // B((d/dx + a x) f) = 2 d/dz B f
    HarmonicToEuler,  // B(h f) = E B f
    EulerToHarmonic   // B(e f) = H B f
};

std::string_view identity_name(Identity id);

/// Coefficientwise distance between both sides of an intertwining identity
/// for B_{a/2}, evaluated on the exact symbolic path.
double intertwine_residual(Identity id, const PolyGauss& f, double a);

} // namespace bargheat::ops
