#include "catsim/code.hpp"

#include "catsim/errors.hpp"

#include <cmath>

namespace catsim {

code_spec::code_spec(int n_) : n(n_) {
    if (n < 1 || n > 101 || n % 2 == 0)
        throw invalid_code_error("code_spec: n must be odd and in [1, 101]");
}

double success_prob(code_spec code, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw domain_error("success_prob: p must be in [0, 1]");
    const int n = code.n;
    const int t = (n - 1) / 2;
    // term_k = C(n, k) p^k (1-p)^{n-k}, k = number of flipped rails
    double binom = 1.0;
    double pk = 1.0;
    double sum = 0.0;
    for (int k = 0; k <= t; ++k) {
        sum += binom * pk * std::pow(1.0 - p, n - k);
        binom *= static_cast<double>(n - k) / static_cast<double>(k + 1);
        pk *= p;
    }
    return sum;
}

double code_dephasing(double alpha, channel_params ch, code_spec code) {
    if (code.n == 1) // Lambda_1 = L exactly; keeps n = 1 bit-identical to transmit_direct
        return std::exp(-2.0 * (1.0 - ch.eta) * alpha * alpha);
    return 2.0 * success_prob(code, flip_prob_single(alpha, ch)) - 1.0;
}

cmat4 transmit_encoded(const two_mode_cat_state& s, channel_params ch, code_spec code) {
    return detail::transmit_with_dephasing(s, ch, code_dephasing(s.alpha1, ch, code));
}

x_matrix code_bell_xmatrix(double alpha, channel_params ch, code_spec code) {
    const double lam = code_dephasing(alpha, ch, code);
    const auto e = detail::bell_x_entries(alpha, ch.eta, lam);
    const double t = e.trace();
    return x_matrix(e.a / t, e.b / t, e.c / t, e.d / t, e.f / t, e.z / t);
}

} // namespace catsim
