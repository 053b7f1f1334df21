#pragma once

#include "bargheat/bargmann.hpp"
#include "bargheat/operators.hpp"
#include "bargheat/polygauss.hpp"

namespace bargheat::heat {

using bargmann::Method;

/// d/dt u = L u with u(0) = init, L one of the six operators.
struct HeatProblem {
    ops::Operator op;
    double t = 0.0;
    PolyGauss init;
};

/// Constant in front of the complex-harmonic kernel.
///   Reproducing  exp(-at/2) / sqrt(cosh at)
///   TwoI         2i / sqrt(cosh at)
enum class Prefactor { Reproducing, TwoI };

/// Closed forms of the real harmonic (Mehler) kernel; the first two agree.
///   Product     sqrt(a/pi) (e^{2at} - e^{-2at})^{-1/2}
///               exp(-a (e^{at} x - e^{-at} s)^2 / (e^{2at} - e^{-2at}) + (a/2)(x^2 - s^2))
///   Hyperbolic  sqrt(a / (2 pi sinh 2at)) exp(-(a/2)(x^2 + s^2) coth 2at + a x s / sinh 2at)
///   HyperbolicUnhalved  the hyperbolic form with sqrt(a/pi) in front, sqrt 2 too large
enum class MehlerForm { Product, Hyperbolic, HyperbolicUnhalved };

// --- closed-form flows ----------------------------------------------------

/// exp(zt/2) exp(t^2/(4a)) U0(z + t/a).
cplx solve_dirac_complex(const PolyGauss& U0, double a, double t, cplx z);
/// exp(-a x t) exp(-a t^2/2) u0(x + t).
cplx solve_dirac_real(const PolyGauss& u0, double a, double t, double x);
/// v0(e^{at} x).
cplx solve_euler_real(const PolyGauss& v0, double a, double t, double x);
/// e^{-at} Y0(e^{-2at} z).
cplx solve_euler_complex(const PolyGauss& Y0, double a, double t, cplx z);

PolyGauss dirac_complex_image(const PolyGauss& U0, double a, double t);
PolyGauss dirac_real_image(const PolyGauss& u0, double a, double t);
PolyGauss euler_real_image(const PolyGauss& v0, double a, double t);
PolyGauss euler_complex_image(const PolyGauss& Y0, double a, double t);

// --- kernels ----------------------------------------------------------------

/// DomainError for t <= 0.
double mehler_kernel(double a, double t, double x, double s, MehlerForm form = MehlerForm::Product);

/// int K_a(x, s, t) y0(s) ds. At t = 0 returns y0(x).
/// Exact: pg_integral of the PolyGauss integrand in s. DivergenceError
/// unless Re(alpha) < (a/2) coth(2at).
cplx solve_harmonic_real(const PolyGauss& y0, double a, double t, double x, Method method = Method::Exact,
                         int order = 64);
/// Kernel route as a PolyGauss in x (t > 0).
PolyGauss harmonic_real_image(const PolyGauss& y0, double a, double t);

/// prefactor * exp((a/4)(conj(w)^2 - z^2) tanh(at) + a z conj(w) / (2 cosh at)).
cplx harmonic_kernel_complex(double a, double t, cplx z, cplx w, Prefactor prefactor = Prefactor::Reproducing);
cplx complex_kernel_prefactor(double a, double t, Prefactor prefactor);

/// int J_a(z, w, t) V0(w) d lambda_{a/2}(w). Series is the anti-holomorphic
/// moment sum, Quadrature an adapted planar rule, Exact the closed heat-flow
/// form of the same integral.
cplx solve_harmonic_complex(const PolyGauss& V0, double a, double t, cplx z, Method method = Method::Series,
                            int order = 64, Prefactor prefactor = Prefactor::Reproducing);
PolyGauss harmonic_complex_image(const PolyGauss& V0, double a, double t,
                                 Prefactor prefactor = Prefactor::Reproducing);

enum class KernelFamily { Mehler, ComplexHarmonic };

/// Which kernel at which (a, t). The Mehler kernel needs t > 0; the
/// complex-harmonic one is the reproducing kernel of F_{a/2} at t = 0.
struct KernelSpec {
    KernelFamily family = KernelFamily::Mehler;
    double a = 1.0;
    double t = 1.0;
    Prefactor prefactor = Prefactor::Reproducing;
};

/// K(p, q) with p, q real for Mehler (imaginary parts ignored).
cplx kernel_value(const KernelSpec& spec, cplx p, cplx q);

// --- generic dispatch -------------------------------------------------------

/// Closed-form solution at problem.t as a PolyGauss (kernel route for the
/// harmonic operators).
PolyGauss solution_image(const HeatProblem& problem);

/// Solution at problem.t through the transform: the proofs' route
///   dirac-real        B^{-1}(exp(-a z t) B u0)
///   dirac-complex     B(exp(t x) B^{-1} U0)
///   euler-real        B^{-1} (complex-harmonic flow) B
///   euler-complex     B (Mehler flow) B^{-1}
///   harmonic-real     B^{-1} (complex-Euler flow) B
///   harmonic-complex  B (real-Euler flow) B^{-1}
/// with B = B_{a/2}.
PolyGauss conjugation_image(const HeatProblem& problem);

/// d/dt of the solution at problem.t, differentiated by hand from the closed
/// forms (through the transform for the harmonic operators).
PolyGauss time_derivative_image(const HeatProblem& problem);

/// Pointwise value through the per-operator solver.
cplx solution_value(const HeatProblem& problem, cplx point, Method method = Method::Exact, int order = 64);

/// Distance between time_derivative_image and L applied to solution_image.
double exact_residual(const HeatProblem& problem);

} // namespace bargheat::heat
