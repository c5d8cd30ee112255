#pragma once

#include "catsim/code.hpp"

namespace catsim {

/// Spin-flipped ("time-reversed") density: (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
/// In the {uu, uv, vu, vv} basis sigma_y x sigma_y is the anti-diagonal
/// (-1, 1, 1, -1). Trace-preserving involution.
cmat4 spin_flip(const cmat4& rho);

/// Wootters concurrence C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)},
/// l_i the decreasing eigenvalues of rho rho~. Computed through the Hermitian
/// equivalent sqrt(rho) rho~ sqrt(rho): its spectrum is real and PSD, and the
/// sqrt(l_i) are obtained directly as the singular values of
/// M = sqrt(rho) (sigma_y x sigma_y) sqrt(rho)^*, which keeps structural zeros
/// of rank-deficient states at solver accuracy instead of sqrt-amplifying
/// eigenvalue noise.
double concurrence(const cmat4& rho);

/// Closed form for X-shaped states: C = 2 max[0, |z| - sqrt(a d), |f| - sqrt(b c)].
double concurrence_x(const x_matrix& x);

/// Concurrence of the pure two-mode cat state (alpha1 == alpha2 = alpha):
///   C = 2 (1 - e^{-4 a^2}) sqrt(w(1-w)) / (1 + 2 sqrt(w(1-w)) e^{-4 a^2} cos theta).
/// Radicand is w(1-w). Returns 0 at alpha = 0 (separable limit).
double initial_concurrence(const two_mode_cat_state& s);

/// Evolution-equation route: concurrence of the encoded-channel output as the
/// product of the channel factor (concurrence of the Bell-state output, the
/// code-adjusted X matrix) and the initial-state concurrence. The code map is
/// trace preserving only at n = 1, so the two unnormalized-output traces
///   t_phi = (1 - Lambda G)/(1 - K),   t_chi = [(1+Lambda)/2 Nu + (1-Lambda)/2 Nf] / N0
/// (G = e^{-2(1+eta) a^2}, K = e^{-4 a^2}) carry the component-normalization
/// bookkeeping:  C = C_X(X_n) * t_phi / t_chi * C[chi].
/// Requires s.alpha1 == s.alpha2 == alpha > 0.
double evolved_concurrence(double alpha, channel_params ch, code_spec code,
                           const two_mode_cat_state& s);

} // namespace catsim
