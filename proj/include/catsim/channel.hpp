#pragma once

#include "catsim/coherent.hpp"
#include "catsim/xmatrix.hpp"

namespace catsim {

/// Beam-splitter loss channel of transmissivity eta in [0, 1].
struct channel_params {
    explicit channel_params(double eta);
    double eta;
};

/// Single-qubit phase-flip probability p_e = (1 - e^{-2 (1-eta) alpha^2}) / 2.
/// Exactly 0 at eta = 1; tends to 1/2 as alpha grows for eta < 1.
double flip_prob_single(double alpha, channel_params ch);

/// Two-mode phase-flip probability
///   P_e = (1 - e^{4 a^2} - e^{2 a^2 (1-eta)} + e^{2 a^2 (1+eta)})
///         / (2 (1 - e^{4 a^2}))
/// evaluated in the overflow-free form obtained by multiplying numerator and
/// denominator by e^{-4 a^2} (expm1-based, stable for all alpha).
/// Defined as 0 at alpha = 0 (the 0/0 point); equals the flipped-population
/// of the Bell-state channel output and the flipped-projector weight of the
/// odd (w = 1/2, theta = pi) pair after direct transmission.
double flip_prob_pair(double alpha, channel_params ch);

/// Damped single qubit: amplitude contracted to alpha sqrt(eta), phase
/// flipped with probability p_flip.
struct single_qubit_mixture {
    double p_flip;        // in [0, 1/2]
    cat_qubit unflipped;  // (a, b) at alpha sqrt(eta)
    cat_qubit flipped;    // (a, -b) at alpha sqrt(eta)
};

single_qubit_mixture damp_single_qubit(const cat_qubit& q, channel_params ch);

/// Exact 2x2 density of the damped qubit in the {u, v} basis at
/// alpha sqrt(eta), row-major. The two components enter with the raw beam-
/// splitter weights (1 +- L)/2 on their unnormalized projectors, divided by
/// the input normalization N(alpha); this is the exact loss-mode trace.
std::array<cplx, 4> damped_qubit_density(const cat_qubit& q, channel_params ch);

/// Direct transmission of a two-mode pair (alpha1 == alpha2 required):
/// mode 1 kept, mode 2 damped to alpha sqrt(eta). Exact channel output
///   [ (1+L)/2 Cu Cu^+  +  (1-L)/2 Cf Cf^+ ] / Ntilde(alpha, alpha),
/// L = e^{-2 (1-eta) alpha^2}, in the basis {u,v}_alpha x {u,v}_{alpha sqrt(eta)}.
cmat4 transmit_direct(const two_mode_cat_state& s, channel_params ch);

/// Channel output of the maximally entangled state (|uu> + |vv>)/sqrt(2).
/// Exactly X-sparse, trace 1. With mu', nu' at alpha sqrt(eta) and
/// L = e^{-2 (1-eta) alpha^2}:
///   a = (1+L) mu'^2 / (4 mu^2)    b = (1-L) nu'^2 / (4 mu^2)
///   c = (1-L) mu'^2 / (4 nu^2)    d = (1+L) nu'^2 / (4 nu^2)
///   f = (1+L) mu'nu' / (4 mu nu)  z = (1-L) mu'nu' / (4 mu nu)
/// Requires alpha > 0.
x_matrix bell_xmatrix(double alpha, channel_params ch);

namespace detail {

/// Unnormalized Bell-output entries of the dephasing family member with
/// cross factor lambda in [0, 1] (lambda = L reproduces the physical
/// channel; the repetition code yields lambda = 2 p_success - 1).
struct bell_entries {
    double a, b, c, d, f, z;
    double trace() const { return a + b + c + d; }
};

bell_entries bell_x_entries(double alpha, double eta, double lambda);

/// Shared pair-transmission builder over the dephasing family: the two
/// unnormalized components weighted (1 +- lambda)/2, then trace-normalized.
cmat4 transmit_with_dephasing(const two_mode_cat_state& s, channel_params ch, double lambda);

} // namespace detail

} // namespace catsim
