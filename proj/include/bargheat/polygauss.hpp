#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace bargheat {

using cplx = std::complex<double>;

/// Which variable a function lives on: the real line (x) or the complex
/// plane (z).
enum class Side { Real, Complex };

std::string_view side_name(Side side);

/// p(v) * exp(alpha v^2 + beta v) with complex polynomial p.
///
/// Canonical form: trailing zero coefficients are stripped, and the zero
/// function is stored as an empty coefficient list with alpha = beta = 0.
/// Two values are equal iff their canonical data agree exactly.
class PolyGauss {
  public:
    PolyGauss() = default;
    PolyGauss(Side side, std::vector<cplx> coeffs, cplx alpha = 0.0, cplx beta = 0.0);

    static PolyGauss zero(Side side) { return PolyGauss(side, {}); }
    static PolyGauss constant(Side side, cplx c) { return PolyGauss(side, {c}); }
    static PolyGauss gaussian(Side side, cplx c, cplx alpha, cplx beta = 0.0) {
        return PolyGauss(side, {c}, alpha, beta);
    }
    static PolyGauss monomial(Side side, int n, cplx c = 1.0);

    Side side() const noexcept { return side_; }
    const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
    cplx alpha() const noexcept { return alpha_; }
    cplx beta() const noexcept { return beta_; }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_polynomial() const noexcept { return alpha_ == 0.0 && beta_ == 0.0; }
    /// Square integrability on the real line.
    bool in_l2() const noexcept { return is_zero() || alpha_.real() < 0.0; }

    cplx coeff(int k) const noexcept {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : cplx(0.0);
    }

    /// Horner evaluation of p, then the exponential.
    cplx operator()(cplx v) const;

    PolyGauss with_side(Side side) const { return PolyGauss(side, coeffs_, alpha_, beta_); }

    bool operator==(const PolyGauss&) const = default;

  private:
    Side side_ = Side::Real;
    std::vector<cplx> coeffs_;
    cplx alpha_ = 0.0;
    cplx beta_ = 0.0;
};

// --- algebra -------------------------------------------------------------

PolyGauss operator*(cplx s, const PolyGauss& g);
inline PolyGauss operator*(const PolyGauss& g, cplx s) { return s * g; }
inline PolyGauss operator-(const PolyGauss& g) { return cplx(-1.0) * g; }

/// Sum of two values sharing one exponent (or where either side is zero).
/// Exponents may differ by rounding (1e-12 relative); anything more is a
/// UsageError since the sum leaves the class.
PolyGauss operator+(const PolyGauss& f, const PolyGauss& g);
PolyGauss operator-(const PolyGauss& f, const PolyGauss& g);

/// d/dv.
PolyGauss derivative(const PolyGauss& g);
/// v * g.
PolyGauss times_var(const PolyGauss& g);
/// g * c * exp(dalpha v^2 + dbeta v).
PolyGauss times_exp(const PolyGauss& g, cplx dalpha, cplx dbeta, cplx c = 1.0);
/// v -> g(scale * v + shift).
PolyGauss compose_affine(const PolyGauss& g, cplx scale, cplx shift);

/// Taylor coefficients t_0..t_{n-1} of g around 0.
std::vector<cplx> taylor_coefficients(const PolyGauss& g, int n);

/// Normalised Taylor coefficients t_k sqrt(k!/a^k): the coordinates of g in
/// the orthonormal monomial basis of the Fock space with weight parameter a.
std::vector<cplx> fock_coordinates(const PolyGauss& g, double a, int n);

/// Relative coefficientwise distance between canonical forms:
/// max(|d alpha|, |d beta|) / max(1, |alpha|, |beta|) versus
/// max_k |d c_k| / max(1, max_k |c_k|); the larger of the two.
double distance(const PolyGauss& f, const PolyGauss& g);

// --- exact integrals and transforms -------------------------------------

/// Integral over the real line.  DivergenceError unless Re(alpha) < 0.
cplx integral(const PolyGauss& g);

/// x -> integral of g(s) exp(kappa x s) ds, as a PolyGauss in x on `out`.
/// DivergenceError unless Re(alpha) < 0.
PolyGauss integrate_with_source(const PolyGauss& g, cplx kappa, Side out);

/// exp(tau d^2/dv^2) g, the heat flow continued to complex tau.
/// Requires Re(1 - 4 alpha tau) > 0 so the principal square root is the
/// branch continuous from tau = 0.
PolyGauss heat_flow(const PolyGauss& g, cplx tau);

/// The transform B_{a/2}: real side -> complex side, in the convention where
/// `a` is the operator parameter. Degree-0 part by the closed Gaussian form,
/// each power of x by one application of the ladder (1/a) d/dz + z/2.
/// DivergenceError unless Re(alpha) < a/4.
PolyGauss bargmann_image(const PolyGauss& f, double a);

/// Inverse of bargmann_image, via the inverted ladder z B f = B(x f - f'/a).
/// DivergenceError unless Re(alpha) > -a/4.
PolyGauss bargmann_preimage(const PolyGauss& F, double a);

// --- text records ---------------------------------------------------------

/// "side,alpha_re,alpha_im,beta_re,beta_im,c0_re,c0_im,..." at 17 significant
/// digits, side being "real" or "complex".
std::string to_record(const PolyGauss& g);
PolyGauss from_record(std::string_view record);

std::string format_double(double v);

} // namespace bargheat
