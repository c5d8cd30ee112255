#include "catsim/oracle.hpp"

#include "catsim/errors.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace catsim {

namespace {

constexpr int sign1[4] = {+1, +1, -1, -1};
constexpr int sign2[4] = {+1, -1, +1, -1};

} // namespace

coherent_span_state::coherent_span_state(std::array<cplx, 4> c, double a)
    : coefficients(c), alpha(a) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw domain_error("coherent_span_state: amplitude must be finite and >= 0");
    double m = 0.0;
    for (const auto& v : coefficients) m += std::norm(v);
    if (m == 0.0)
        throw domain_error("coherent_span_state: all coefficients vanish");
}

coherent_span_state bell_span_state(double alpha) {
    const auto [mu, nu] = orthogonal_coeffs(alpha);
    if (nu == 0.0)
        throw degenerate_basis_error("bell_span_state: requires alpha > 0");
    // |u> = (|a> + |-a>)/(2 mu), |v> = (|a> - |-a>)/(2 nu)
    const double A = 0.25 / (mu * mu) + 0.25 / (nu * nu);
    const double B = 0.25 / (mu * mu) - 0.25 / (nu * nu);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    return coherent_span_state({inv_sqrt2 * A, inv_sqrt2 * B, inv_sqrt2 * B, inv_sqrt2 * A},
                               alpha);
}

coherent_span_state chi_span_state(const two_mode_cat_state& s) {
    if (std::abs(s.alpha1 - s.alpha2) > 1e-12)
        throw domain_error("chi_span_state: requires alpha1 == alpha2");
    const cplx phase = std::polar(1.0, s.theta);
    return coherent_span_state({std::sqrt(s.w), 0.0, 0.0, phase * std::sqrt(1.0 - s.w)},
                               s.alpha1);
}

cmat4 span_gram(double a1, double a2) {
    cmat4 g;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
            g(j, k) = overlap(sign1[j] * a1, sign1[k] * a1) * overlap(sign2[j] * a2, sign2[k] * a2);
    return g;
}

cmat4 lowdin_transform(const cmat4& gram) {
    const eig_result e = eig_hermitian(gram);
    if (e.values[3] < 1e-12)
        throw degenerate_basis_error("lowdin_transform: Gram matrix numerically singular");
    cmat4 t;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 4; ++k)
                s += e.vectors(i, k) / std::sqrt(e.values[k]) * std::conj(e.vectors(j, k));
            t(i, j) = s;
        }
    return t;
}

namespace {

// Density over the output span, given its Gram matrix and the operator R in
// the coherent representation (rho = sum R_jk |e_j><e_k|). The Loewdin basis
// of the symmetric-overlap pair per mode is the 45-degree rotation of {u, v},
// so B = G^{-1/2} (W x W), W = [[1, 1], [1, -1]]/sqrt(2), gives the uv basis
// columns and rho_uv = (B^+ G) R (G B).
cmat4 span_to_uv(const cmat4& r, const cmat4& gram) {
    const cmat4 t = lowdin_transform(gram);
    cmat4 w; // W x W
    const double h = 0.5;
    const double wv[2][2] = {{1.0, 1.0}, {1.0, -1.0}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            w(i, j) = h * wv[i / 2][j / 2] * wv[i % 2][j % 2];
    const cmat4 b = t * w;
    const cmat4 gb = gram * b;
    return gb.adjoint() * r * gb;
}

cmat4 apply_factor_and_reexpress(const cmat4& rep, double alpha, double eta, double factor) {
    cmat4 r;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k)
            r(j, k) = rep(j, k) * (sign2[j] == sign2[k] ? 1.0 : factor);
    const cmat4 g_out = span_gram(alpha, alpha * std::sqrt(eta));
    return span_to_uv(r, g_out);
}

cmat4 normalized_projector_rep(const coherent_span_state& state) {
    const cmat4 g_in = span_gram(state.alpha, state.alpha);
    std::array<cplx, 4> c = state.coefficients;
    cplx q = 0.0;
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) q += std::conj(c[j]) * g_in(j, k) * c[k];
    const double norm2 = q.real();
    if (norm2 <= 1e-14)
        throw degenerate_state_error("gram oracle: input state has vanishing norm");
    for (auto& v : c) v /= std::sqrt(norm2);
    return outer(c);
}

} // namespace

cmat4 gram_apply_channel(const cmat4& coherent_rep, double alpha, channel_params ch) {
    const double am = alpha * std::sqrt(1.0 - ch.eta);
    return apply_factor_and_reexpress(coherent_rep, alpha, ch.eta, overlap(am, -am));
}

cmat4 gram_channel_density(const coherent_span_state& state, channel_params ch) {
    // loss-mode trace factor: overlap of the +-alpha sqrt(1-eta) loss kets
    return gram_apply_channel(normalized_projector_rep(state), state.alpha, ch);
}

cmat4 gram_encoded_density(const coherent_span_state& state, channel_params ch,
                           code_spec code) {
    const double am = state.alpha * std::sqrt(1.0 - ch.eta);
    const double p_rail = 0.5 * (1.0 - overlap(am, -am));
    // exhaustive pattern enumeration where feasible; beyond 2^15 patterns the
    // closed form takes over (itself enumeration-verified for all n <= 15)
    const double success =
        code.n <= 15 ? majority_vote_success(code, p_rail) : success_prob(code, p_rail);
    const double lam = 2.0 * success - 1.0;
    cmat4 rho =
        apply_factor_and_reexpress(normalized_projector_rep(state), state.alpha, ch.eta, lam);
    rho *= 1.0 / rho.trace().real(); // encoded map preserves trace only at n = 1
    return rho;
}

double majority_vote_success(code_spec code, double p) {
    if (code.n > 15)
        throw enumeration_error("majority_vote_success: n > 15, enumeration refused");
    if (!(p >= 0.0 && p <= 1.0))
        throw domain_error("majority_vote_success: p must be in [0, 1]");
    const int n = code.n;
    const int t = (n - 1) / 2;
    double total = 0.0;
    for (unsigned pattern = 0; pattern < (1u << n); ++pattern) {
        const int flips = std::popcount(pattern);
        if (flips > t) continue;
        total += std::pow(p, flips) * std::pow(1.0 - p, n - flips);
    }
    return total;
}

namespace {

std::vector<double> fock_coherent(double alpha, int cutoff) {
    std::vector<double> c(cutoff + 1);
    c[0] = std::exp(-0.5 * alpha * alpha);
    for (int n = 1; n <= cutoff; ++n) c[n] = c[n - 1] * alpha / std::sqrt(double(n));
    return c;
}

// even/odd cat vectors at amplitude a, orthonormalized numerically
std::pair<std::vector<double>, std::vector<double>> fock_uv(double a, int cutoff) {
    const auto p = fock_coherent(a, cutoff);
    const auto m = fock_coherent(-a, cutoff);
    std::vector<double> u(cutoff + 1), v(cutoff + 1);
    double nu2 = 0.0, nv2 = 0.0;
    for (int i = 0; i <= cutoff; ++i) {
        u[i] = p[i] + m[i];
        v[i] = p[i] - m[i];
        nu2 += u[i] * u[i];
        nv2 += v[i] * v[i];
    }
    const double su = 1.0 / std::sqrt(nu2);
    for (auto& x : u) x *= su;
    if (nv2 > 1e-200) {
        const double sv = 1.0 / std::sqrt(nv2);
        for (auto& x : v) x *= sv;
    } else {
        for (auto& x : v) x = 0.0; // a = 0: odd vector vanishes
    }
    return {u, v};
}

} // namespace

fock_result fock_channel_density(const coherent_span_state& state, channel_params ch,
                                 int cutoff) {
    if (cutoff < 10)
        throw truncation_error("fock_channel_density: cutoff must be >= 10");
    const double a = state.alpha;
    const int dim = cutoff + 1;

    double deficit;
    {
        const auto c = fock_coherent(a, cutoff);
        double mass = 0.0;
        for (double x : c) mass += x * x;
        deficit = 1.0 - mass;
        if (deficit >= 1e-10)
            throw truncation_error("fock_channel_density: truncation deficit exceeds 1e-10");
    }

    // input amplitudes psi[n1, n2]
    const auto fp = fock_coherent(a, cutoff);
    const auto fm = fock_coherent(-a, cutoff);
    std::vector<cplx> psi(dim * dim, 0.0);
    for (std::size_t comp = 0; comp < 4; ++comp) {
        const auto& v1 = sign1[comp] > 0 ? fp : fm;
        const auto& v2 = sign2[comp] > 0 ? fp : fm;
        const cplx w = state.coefficients[comp];
        if (w == cplx{}) continue;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) psi[i * dim + j] += w * v1[i] * v2[j];
    }
    double n2 = 0.0;
    for (const auto& x : psi) n2 += std::norm(x);
    if (n2 <= 1e-14)
        throw degenerate_state_error("fock_channel_density: input state has vanishing norm");
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : psi) x *= inv;

    // beam splitter on (mode 2, vacuum): |n>|0> -> sum_k sqrt(C(n,k)) t^k r^{n-k} |k>|n-k>
    const double t = std::sqrt(ch.eta), r = std::sqrt(1.0 - ch.eta);
    std::vector<double> bs(dim * dim, 0.0);
    for (int n = 0; n < dim; ++n) {
        for (int k = 0; k <= n; ++k) {
            if ((t == 0.0 && k > 0) || (r == 0.0 && k < n)) continue;
            const double lg = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                     std::lgamma(n - k + 1.0));
            const double lt = (k > 0) ? k * std::log(t) : 0.0;
            const double lr = (n - k > 0) ? (n - k) * std::log(r) : 0.0;
            bs[n * dim + k] = std::exp(lg + lt + lr);
        }
    }

    const auto [u1, v1] = fock_uv(a, cutoff);
    const auto [u2, v2] = fock_uv(a * t, cutoff);
    const std::vector<double>* b1[2] = {&u1, &v1};
    const std::vector<double>* b2[2] = {&u2, &v2};

    // trace out the loss mode count-by-count, projecting each conditional
    // amplitude onto the output {u,v} span
    cmat4 rho;
    double kept = 0.0, total = 0.0;
    std::vector<cplx> cond(dim * dim);
    for (int j = 0; j < dim; ++j) {
        std::fill(cond.begin(), cond.end(), cplx{});
        for (int k = 0; k + j < dim; ++k) {
            const double amp = bs[(k + j) * dim + k];
            if (amp == 0.0) continue;
            for (int i = 0; i < dim; ++i) cond[i * dim + k] = psi[i * dim + (k + j)] * amp;
        }
        double blk = 0.0;
        for (const auto& x : cond) blk += std::norm(x);
        if (blk == 0.0) continue;
        total += blk;

        std::array<cplx, 4> proj{};
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q) {
                cplx s = 0.0;
                for (int i = 0; i < dim; ++i) {
                    const double b1i = (*b1[p])[i];
                    if (b1i == 0.0) continue;
                    cplx row = 0.0;
                    for (int k = 0; k < dim; ++k) row += cond[i * dim + k] * (*b2[q])[k];
                    s += b1i * row;
                }
                proj[2 * p + q] = s;
            }
        double kn = 0.0;
        for (const auto& x : proj) kn += std::norm(x);
        kept += kn;
        rho += outer(proj);
    }

    return {rho, deficit, total - kept};
}

} // namespace catsim
