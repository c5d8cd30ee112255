#pragma once

#include "catsim/channel.hpp"

namespace catsim {

/// n-repetition phase-flip code; n odd, 1 <= n <= 101. n = 1 is direct
/// transmission (no code).
struct code_spec {
    explicit code_spec(int n);
    int n;
};

/// p_success,n = sum_{k=0}^{(n-1)/2} C(n, n-k) (1-p)^{n-k} p^k.
/// Binomial coefficients by multiplicative recurrence (finite up to n = 101).
double success_prob(code_spec code, double p);

/// Effective dephasing factor of the encoded logical channel,
///   Lambda_n = 2 p_success,n(p_e) - 1,
/// where p_e is the per-rail flip probability. Each of the n rails suffers an
/// independent phase flip with raw beam-splitter weight p_e = (1 - L)/2;
/// majority vote keeps the logical qubit unflipped whenever at most (n-1)/2
/// rails flipped. Lambda_1 = L reproduces the bare channel.
double code_dephasing(double alpha, channel_params ch, code_spec code);

/// Transmission of the pair through the n-repetition code (alpha1 == alpha2
/// required): mode 2 encoded, sent through the loss channel rail-by-rail,
/// decoded by majority vote. Logical output
///   [ (1+Lambda_n)/2 Cu Cu^+  +  (1-Lambda_n)/2 Cf Cf^+ ] / trace,
/// in the basis {u,v}_alpha x {u,v}_{alpha sqrt(eta)}. For n = 1 this is
/// exactly transmit_direct.
cmat4 transmit_encoded(const two_mode_cat_state& s, channel_params ch, code_spec code);

/// Bell-state output of the encoded logical channel: the Bell X matrix with
/// cross factor Lambda_n, trace-normalized. code_spec(1) gives bell_xmatrix.
x_matrix code_bell_xmatrix(double alpha, channel_params ch, code_spec code);

} // namespace catsim
