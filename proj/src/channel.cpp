#include "catsim/channel.hpp"

#include "catsim/errors.hpp"

#include <cmath>

namespace catsim {

channel_params::channel_params(double eta_) : eta(eta_) {
    if (!(eta >= 0.0 && eta <= 1.0) || !std::isfinite(eta))
        throw domain_error("channel_params: eta must be in [0, 1]");
}

double flip_prob_single(double alpha, channel_params ch) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw domain_error("flip_prob_single: amplitude must be finite and >= 0");
    return -0.5 * std::expm1(-2.0 * (1.0 - ch.eta) * alpha * alpha);
}

double flip_prob_pair(double alpha, channel_params ch) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw domain_error("flip_prob_pair: amplitude must be finite and >= 0");
    if (alpha == 0.0) return 0.0; // 0/0 in the printed form; continues the exact weight
    const double x = alpha * alpha;
    // numerator and denominator of the printed form, both scaled by e^{-4 a^2}
    const double num = std::expm1(-4.0 * x) - std::expm1(-2.0 * (1.0 + ch.eta) * x) +
                       std::expm1(-2.0 * (1.0 - ch.eta) * x);
    const double den = 2.0 * std::expm1(-4.0 * x);
    return num / den + 0.0; // normalizes -0 at eta = 1
}

single_qubit_mixture damp_single_qubit(const cat_qubit& q, channel_params ch) {
    const double ad = q.alpha * std::sqrt(ch.eta);
    return {flip_prob_single(q.alpha, ch), cat_qubit(q.a, q.b, ad), cat_qubit(q.a, -q.b, ad)};
}

std::array<cplx, 4> damped_qubit_density(const cat_qubit& q, channel_params ch) {
    const double L = std::exp(-2.0 * (1.0 - ch.eta) * q.alpha * q.alpha);
    const auto [mu, nu] = orthogonal_coeffs(q.alpha * std::sqrt(ch.eta));
    // a|-a'> + b|a'> = (a+b) mu |u> + (b-a) nu |v>; flipped has b -> -b
    const cplx cu0 = (q.a + q.b) * mu, cu1 = (q.b - q.a) * nu;
    const cplx cf0 = (q.a - q.b) * mu, cf1 = -(q.a + q.b) * nu;
    const double n = qubit_norm(q);
    const double wu = 0.5 * (1.0 + L) / n, wf = 0.5 * (1.0 - L) / n;
    return {wu * cu0 * std::conj(cu0) + wf * cf0 * std::conj(cf0),
            wu * cu0 * std::conj(cu1) + wf * cf0 * std::conj(cf1),
            wu * cu1 * std::conj(cu0) + wf * cf1 * std::conj(cf0),
            wu * cu1 * std::conj(cu1) + wf * cf1 * std::conj(cf1)};
}

namespace detail {

cmat4 transmit_with_dephasing(const two_mode_cat_state& s, channel_params ch, double lambda) {
    if (std::abs(s.alpha1 - s.alpha2) > 1e-12)
        throw domain_error("transmit: requires alpha1 == alpha2");
    cat_norm(s); // rejects unnormalizable input
    const double alpha = s.alpha1;
    const two_mode_cat_state damped(alpha, alpha * std::sqrt(ch.eta), s.w, s.theta);
    cmat4 rho = 0.5 * (1.0 + lambda) * outer(chi_coefficients(damped, false)) +
                0.5 * (1.0 - lambda) * outer(chi_coefficients(damped, true));
    const double t = rho.trace().real();
    if (t <= 1e-14)
        throw degenerate_state_error("transmit: vanishing output trace");
    rho *= 1.0 / t;
    return rho;
}

} // namespace detail

cmat4 transmit_direct(const two_mode_cat_state& s, channel_params ch) {
    const double L = std::exp(-2.0 * (1.0 - ch.eta) * s.alpha1 * s.alpha1);
    return detail::transmit_with_dephasing(s, ch, L);
}

namespace detail {

bell_entries bell_x_entries(double alpha, double eta, double lambda) {
    const auto [mu, nu] = orthogonal_coeffs(alpha);
    const auto [mup, nup] = orthogonal_coeffs(alpha * std::sqrt(eta));
    if (nu == 0.0)
        throw domain_error("bell_x_entries: requires alpha > 0");
    const double wp = 0.25 * (1.0 + lambda), wm = 0.25 * (1.0 - lambda);
    return {wp * mup * mup / (mu * mu), wm * nup * nup / (mu * mu),
            wm * mup * mup / (nu * nu), wp * nup * nup / (nu * nu),
            wp * mup * nup / (mu * nu), wm * mup * nup / (mu * nu)};
}

} // namespace detail

x_matrix bell_xmatrix(double alpha, channel_params ch) {
    const double L = std::exp(-2.0 * (1.0 - ch.eta) * alpha * alpha);
    const auto e = detail::bell_x_entries(alpha, ch.eta, L);
    const double t = e.trace(); // 1 up to rounding; the physical member is trace preserving
    return x_matrix(e.a / t, e.b / t, e.c / t, e.d / t, e.f / t, e.z / t);
}

} // namespace catsim
