#pragma once

#include "catsim/channel.hpp"
#include "catsim/code.hpp"

#include <array>

namespace catsim {

/// State over the non-orthogonal coherent product span
///   { |s1 alpha> x |s2 alpha> : s1, s2 in {+, -} },
/// component order (+,+), (+,-), (-,+), (-,-). Unnormalized coefficients;
/// at least one must be nonzero.
struct coherent_span_state {
    coherent_span_state(std::array<cplx, 4> coefficients, double alpha);
    std::array<cplx, 4> coefficients;
    double alpha;
};

/// Coefficients of (|uu> + |vv>)/sqrt(2) over the coherent product span at
/// amplitude alpha (the maximally entangled input of the X-matrix check).
coherent_span_state bell_span_state(double alpha);

/// Coefficients of the two-mode cat state over the span.
coherent_span_state chi_span_state(const two_mode_cat_state& s);

/// Exact channel application on the coherent span. Damping maps
/// |s2 a> -> |s2 a sqrt(eta)>_sys |s2 a sqrt(1-eta)>_loss; the loss-mode trace
/// multiplies each matrix element by 1 (equal mode-2 signs) or e^{-2(1-eta)a^2}
/// (opposite signs). The result is expressed in the orthonormal
/// {u,v} x {u,v} basis obtained by Loewdin (G^{-1/2}) orthonormalization of
/// the output span, with the per-mode 45-degree rotation identifying {u, v}.
/// Throws degenerate_basis_error when the Gram matrix is numerically singular.
cmat4 gram_channel_density(const coherent_span_state& state, channel_params ch);

/// Same machinery for the n-repetition encoded transmission: the cross factor
/// becomes Lambda = 2 * majority_vote_success(n, (1 - L)/2) - 1, i.e. the
/// exhaustive majority-vote enumeration supplies the weights up to n = 15;
/// larger codes use the closed-form polynomial (enumeration-verified on the
/// feasible range) while the basis machinery stays fully independent.
cmat4 gram_encoded_density(const coherent_span_state& state, channel_params ch, code_spec code);

struct fock_result {
    cmat4 density;
    double truncation_deficit; // 1 - sum |c_n|^2 of the worst constituent
    double projection_leak;    // output weight outside the {u,v} span
};

/// Truncated-Fock-space cross-check: both modes expanded in number states
/// (standard normalization e^{-a^2/2} a^n / sqrt(n!)); mode 2 mixed with a
/// vacuum mode on a beam splitter of transmissivity eta; loss mode traced
/// out photon-count by photon-count; result projected onto numerically
/// orthonormalized even/odd cat vectors. Requires cutoff >= 10 and a
/// truncation norm deficit below 1e-10, else throws truncation_error.
fock_result fock_channel_density(const coherent_span_state& state, channel_params ch,
                                 int cutoff);

/// Exact majority-vote success probability by enumeration of all 2^n
/// independent flip patterns (success iff at most (n-1)/2 flips).
/// Refuses n > 15 (use the closed form instead).
double majority_vote_success(code_spec code, double p);

/// Operator-level oracle entry: applies the loss-trace factors to an operator
/// given in the coherent product representation (rho = sum R_jk |e_j><e_k| at
/// input amplitudes (alpha, alpha)) and re-expresses it in the orthonormal
/// output basis. Linear in R; no input normalization is applied.
cmat4 gram_apply_channel(const cmat4& coherent_rep, double alpha, channel_params ch);

/// Loewdin transform G^{-1/2} of the 4x4 output-span Gram matrix (exposed for
/// the T^dagger G T = I verification).
cmat4 lowdin_transform(const cmat4& gram);

/// Gram matrix of the coherent product span at amplitudes (a1, a2).
cmat4 span_gram(double a1, double a2);

} // namespace catsim
