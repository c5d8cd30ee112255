#include "catsim/concurrence.hpp"

#include "catsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace catsim {

cmat4 spin_flip(const cmat4& rho) {
    // (sigma_y x sigma_y) rho* (sigma_y x sigma_y) with the anti-diagonal
    // signs s = (-1, 1, 1, -1):  out(i, j) = s_i s_j conj(rho(3-i, 3-j))
    static constexpr double sgn[4] = {-1.0, 1.0, 1.0, -1.0};
    cmat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r(i, j) = sgn[i] * sgn[j] * std::conj(rho(3 - i, 3 - j));
    return r;
}

double concurrence(const cmat4& rho) {
    if (rho.hermiticity_defect() > 1e-10)
        throw domain_error("concurrence: density matrix is not Hermitian");
    // With R = sqrt(rho) and S = sigma_y x sigma_y, the matrix M = R S R^*
    // satisfies M M^+ = R (S rho^* S) R = sqrt(rho) rho~ sqrt(rho), so the
    // sqrt(l_i) of the Wootters spectrum are exactly the singular values of M.
    // Computing them as singular values keeps full absolute accuracy for the
    // structural zeros of rank-deficient states, where an eigenvalue route
    // would amplify solver noise through the square root.
    static constexpr double sgn[4] = {-1.0, 1.0, 1.0, -1.0};
    const cmat4 root = sqrt_psd(rho);
    cmat4 m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 4; ++k)
                s += root(i, k) * sgn[k] * std::conj(root(3 - k, j));
            m(i, j) = s;
        }
    const auto sv = singular_values(m);
    return std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
}

double concurrence_x(const x_matrix& x) {
    const double ad = std::sqrt(std::max(x.a * x.d, 0.0));
    const double bc = std::sqrt(std::max(x.b * x.c, 0.0));
    return 2.0 * std::max({0.0, std::abs(x.z) - ad, std::abs(x.f) - bc});
}

double initial_concurrence(const two_mode_cat_state& s) {
    if (std::abs(s.alpha1 - s.alpha2) > 1e-12)
        throw domain_error("initial_concurrence: requires alpha1 == alpha2");
    const double alpha = s.alpha1;
    if (alpha == 0.0) return 0.0;
    const double k4 = std::exp(-4.0 * alpha * alpha);
    const double r = std::sqrt(s.w * (1.0 - s.w));
    return 2.0 * (-std::expm1(-4.0 * alpha * alpha)) * r /
           (1.0 + 2.0 * r * k4 * std::cos(s.theta));
}

double evolved_concurrence(double alpha, channel_params ch, code_spec code,
                           const two_mode_cat_state& s) {
    if (std::abs(s.alpha1 - alpha) > 1e-12 || std::abs(s.alpha2 - alpha) > 1e-12)
        throw domain_error("evolved_concurrence: state amplitudes must equal alpha");
    if (!(alpha > 0.0))
        throw domain_error("evolved_concurrence: requires alpha > 0");

    const double c0 = initial_concurrence(s);
    if (c0 == 0.0) return 0.0;

    const double lam = code_dephasing(alpha, ch, code);
    const x_matrix xn = code_bell_xmatrix(alpha, ch, code);
    const double channel_factor = concurrence_x(xn);

    const double x = alpha * alpha;
    const double big_g = std::exp(-2.0 * (1.0 + ch.eta) * x);
    const double one_minus_k = -std::expm1(-4.0 * x);
    const double t_phi = (1.0 - lam * big_g) / one_minus_k;

    const two_mode_cat_state damped(alpha, alpha * std::sqrt(ch.eta), s.w, s.theta);
    const double t_chi =
        (0.5 * (1.0 + lam) * cat_norm(damped) + 0.5 * (1.0 - lam) * cat_norm_flipped(damped)) /
        cat_norm(s);

    return channel_factor * t_phi / t_chi * c0;
}

} // namespace catsim
