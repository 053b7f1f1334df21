#pragma once

#include "bargheat/polygauss.hpp"

namespace bargheat::series {

/// sum_n F^_n H^_n (or F^_n conj(H^_n)) over orthonormal Fock coordinates
/// with weight parameter a, truncated once the tail bound falls below
/// 1e-14 of the accumulated absolute mass.
///
/// With conjugate_second the result is <F, H> in F_a^2. Without it, the
/// result is the integral of F(w) conj(H~(w)) d lambda_a where H~ has the
/// conjugated Taylor coefficients of H: the anti-holomorphic moment
/// identity for kernels exp(gamma conj(w)^2 + mu conj(w)) pairs F with
/// H = exp(gamma u^2 + mu u) in this mode.
///
/// DivergenceError when 2 sqrt(|alpha_F| |alpha_H|) >= a (the coordinates
/// do not decay), AccuracyError if 8192 terms are not enough.
cplx coordinate_pairing(const PolyGauss& F, const PolyGauss& H, double a, bool conjugate_second);

} // namespace bargheat::series
