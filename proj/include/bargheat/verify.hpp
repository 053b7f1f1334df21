#pragma once

#include "bargheat/heatsolve.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bargheat::verify {

/// One measured defect against a tolerance. pass is defect <= tolerance
/// (NaN never passes).
struct DefectReport {
    std::string check;
    std::string params;
    double defect = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
};

DefectReport make_report(std::string check, std::string params, double defect, double tolerance,
                         double seconds = 0.0);

// --- finite differences ----------------------------------------------------

/// |du/dt - L u| at (t, point): centred 3-point difference in t; spatial
/// derivatives by centred differences on the real side and exactly on the
/// complex side. DomainError unless 0 < h_t < t and h_x > 0.
double fd_residual(const heat::HeatProblem& problem, double t, cplx point, double h_t, double h_x);

/// Same stencils applied to an arbitrary real-side candidate u(t, x).
double fd_residual_real(const ops::Operator& op, const std::function<cplx(double, double)>& u, double t,
                        double x, double h_t, double h_x);

/// residual(h) / residual(h/2) with h_t = h_x = h.
double richardson_ratio(const heat::HeatProblem& problem, double t, cplx point, double h);

// --- truncated exponential -------------------------------------------------

struct TaylorResult {
    PolyGauss value;
    double estimate = 0.0; // max |last term| / max |sum| over the probes
};

/// sum_{k <= order} t^k L^k f0 / k!. AccuracyError when the estimate exceeds
/// `threshold`. Probes default to a few points in [-2, 2] (real side) or the
/// disk |z| <= 2 (complex side).
TaylorResult taylor_evolve(const ops::Operator& op, const PolyGauss& f0, double t, int order,
                           double threshold = 1e-14);
TaylorResult taylor_evolve(const ops::Operator& op, const PolyGauss& f0, double t, int order, double threshold,
                           const std::vector<cplx>& probes);

std::vector<cplx> default_probes(Side side);

// --- semigroup and isometry ------------------------------------------------

/// |int K_a(x,s,t1) K_b(s,y,t2) ds - K_a(x,y,t1+t2)| by the exact Gaussian
/// integral. b defaults to a; a different b is the mismatched control.
double semigroup_defect(double a, double t1, double t2, double x, double y, double b = 0.0);
double semigroup_defect(const heat::KernelSpec& spec, double t1, double t2, double x, double y);

/// |flow(t1 + t2) - flow(t2) o flow(t1)| / max(1, |flow(t1 + t2)|) at the
/// probe, the second flow started from the symbolic image at t1.
double flow_semigroup_defect(const heat::HeatProblem& problem, double t1, double t2, cplx point,
                             heat::Method method = heat::Method::Exact);

/// |<f, g>_{L^2} - <B f, B g>_{F_{a/2}}| with B = B_{a/2}; both sides by
/// quadrature of the given order.
double isometry_defect(const PolyGauss& f, const PolyGauss& g, double a, int order = 64);

} // namespace bargheat::verify
