#include "catsim/coherent.hpp"

#include "catsim/errors.hpp"

#include <cmath>

namespace catsim {

namespace {

void require_amplitude(double alpha, const char* who) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw domain_error(std::string(who) + ": amplitude must be finite and >= 0");
}

constexpr double norm_floor = 1e-14;

} // namespace

double overlap(double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta))
        throw domain_error("overlap: arguments must be finite");
    const double d = alpha - beta;
    return std::exp(-0.5 * d * d);
}

ortho_coeffs orthogonal_coeffs(double alpha) {
    require_amplitude(alpha, "orthogonal_coeffs");
    const double k = std::exp(-2.0 * alpha * alpha);
    return {std::sqrt(0.5 * (1.0 + k)), std::sqrt(0.5 * (1.0 - k))};
}

cat_qubit::cat_qubit(cplx a_, cplx b_, double alpha_) : a(a_), b(b_), alpha(alpha_) {
    require_amplitude(alpha, "cat_qubit");
    const double nrm = std::norm(a) + std::norm(b);
    if (std::abs(nrm - 1.0) > 1e-12)
        throw domain_error("cat_qubit: |a|^2 + |b|^2 must be 1");
}

double qubit_norm(const cat_qubit& q) {
    const double n =
        1.0 + std::exp(-2.0 * q.alpha * q.alpha) * 2.0 * std::real(q.a * std::conj(q.b));
    if (n <= norm_floor)
        throw degenerate_state_error("qubit_norm: unnormalizable state (N ~ 0)");
    return n;
}

two_mode_cat_state::two_mode_cat_state(double a1, double a2, double w_, double theta_)
    : alpha1(a1), alpha2(a2), w(w_), theta(theta_) {
    require_amplitude(alpha1, "two_mode_cat_state");
    require_amplitude(alpha2, "two_mode_cat_state");
    if (!(w >= 0.0 && w <= 1.0))
        throw domain_error("two_mode_cat_state: w must be in [0, 1]");
    if (!std::isfinite(theta))
        throw domain_error("two_mode_cat_state: theta must be finite");
    // fold into [0, 2pi)
    const double two_pi = 8.0 * std::atan(1.0);
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
}

namespace {

double cat_norm_signed(const two_mode_cat_state& s, double sign) {
    return 1.0 + sign * 2.0 * std::cos(s.theta) * std::sqrt(s.w * (1.0 - s.w)) *
                     std::exp(-2.0 * s.alpha1 * s.alpha1 - 2.0 * s.alpha2 * s.alpha2);
}

} // namespace

double cat_norm(const two_mode_cat_state& s) {
    const double n = cat_norm_signed(s, +1.0);
    if (n <= norm_floor)
        throw degenerate_state_error("cat_norm: degenerate state (Ntilde ~ 0)");
    return n;
}

double cat_norm_flipped(const two_mode_cat_state& s) {
    const double n = cat_norm_signed(s, -1.0);
    if (n <= norm_floor)
        throw degenerate_state_error("cat_norm_flipped: degenerate state (Ntilde' ~ 0)");
    return n;
}

std::array<cplx, 4> chi_coefficients(const two_mode_cat_state& s, bool flipped) {
    const auto [mu1, nu1] = orthogonal_coeffs(s.alpha1);
    const auto [mu2, nu2] = orthogonal_coeffs(s.alpha2);
    const cplx phase = std::polar(1.0, s.theta);
    cplx gp = std::sqrt(s.w) + phase * std::sqrt(1.0 - s.w);
    cplx gm = std::sqrt(s.w) - phase * std::sqrt(1.0 - s.w);
    if (flipped) std::swap(gp, gm);
    return {gp * mu1 * mu2, gm * mu1 * nu2, gm * nu1 * mu2, gp * nu1 * nu2};
}

cmat4 chi_density(const two_mode_cat_state& s) {
    const double n = cat_norm(s);
    cmat4 rho = outer(chi_coefficients(s, false));
    rho *= 1.0 / n;
    return rho;
}

cmat4 chi_flipped_density(const two_mode_cat_state& s) {
    const double n = cat_norm_flipped(s);
    cmat4 rho = outer(chi_coefficients(s, true));
    rho *= 1.0 / n;
    return rho;
}

} // namespace catsim
