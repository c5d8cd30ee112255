#pragma once

#include "catsim/kernel.hpp"

#include <array>

namespace catsim {

// Basis order used by every 4x4 density matrix in this library:
//   {|u u>, |u v>, |v u>, |v v>}
// with the mode-1 pair {u, v} at the mode-1 amplitude and the mode-2 pair at
// the mode-2 amplitude.

/// Overlap <beta|alpha> = exp(-(alpha-beta)^2/2) of two real-amplitude
/// coherent states. Signed arguments allowed, so overlap(a, -a) = exp(-2 a^2).
double overlap(double alpha, double beta);

/// Coefficients of the orthogonal cat basis:
///   |alpha>  = mu |u> + nu |v>
///   |-alpha> = mu |u> - nu |v>
struct ortho_coeffs {
    double mu; // sqrt((1 + e^{-2 a^2}) / 2)
    double nu; // sqrt((1 - e^{-2 a^2}) / 2)
};

/// Requires alpha >= 0 and finite.
ortho_coeffs orthogonal_coeffs(double alpha);

/// Logical qubit a|-alpha> + b|alpha> in the (-,+) coherent encoding,
/// normalized by sqrt(qubit_norm).
struct cat_qubit {
    cat_qubit(cplx a, cplx b, double alpha);
    cplx a, b;
    double alpha;
};

/// N(alpha) = 1 + e^{-2 alpha^2} (a b* + a* b). Throws degenerate_state_error
/// if N <= 1e-14 (possible only at alpha = 0 with b = -a).
double qubit_norm(const cat_qubit& q);

/// Two-mode cat state
///   (sqrt(w)|a1, a2> + e^{i theta} sqrt(1-w)|-a1, -a2>) / sqrt(cat_norm).
struct two_mode_cat_state {
    two_mode_cat_state(double alpha1, double alpha2, double w, double theta);
    double alpha1, alpha2, w, theta;
};

/// Ntilde = 1 + 2 cos(theta) sqrt(w(1-w)) exp(-2 a1^2 - 2 a2^2).
/// Throws degenerate_state_error if <= 1e-14.
double cat_norm(const two_mode_cat_state& s);

/// Normalization of the phase-flipped state (relative sign inverted):
/// 1 - 2 cos(theta) sqrt(w(1-w)) exp(-2 a1^2 - 2 a2^2).
double cat_norm_flipped(const two_mode_cat_state& s);

/// Unnormalized coefficient vector of the state (or, with flipped = true, of
/// the state with the relative sign of the second branch inverted) in the
/// basis {uu, uv, vu, vv}. With g+- = sqrt(w) +- e^{i theta} sqrt(1-w):
///   ( g+ mu1 mu2,  g- mu1 nu2,  g- nu1 mu2,  g+ nu1 nu2 )
/// and g+ <-> g- when flipped.
std::array<cplx, 4> chi_coefficients(const two_mode_cat_state& s, bool flipped);

/// Rank-1 density of the state in the orthogonal product basis.
cmat4 chi_density(const two_mode_cat_state& s);

/// Rank-1 density of the phase-flipped state (Z on mode 2, which up to a
/// global phase swaps g+ and g-); normalized by cat_norm_flipped.
cmat4 chi_flipped_density(const two_mode_cat_state& s);

} // namespace catsim
