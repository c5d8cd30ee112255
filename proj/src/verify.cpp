#include "catsim/verify.hpp"

#include "catsim/concurrence.hpp"
#include "catsim/errors.hpp"
#include "catsim/oracle.hpp"
#include "catsim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <random>
#include <sstream>

namespace catsim {

namespace {

const double pi = 4.0 * std::atan(1.0);

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> g(steps);
    for (int i = 0; i < steps; ++i)
        g[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    return g;
}

// verification grid shared by the oracle- and route-equivalence checks
const std::vector<double> grid_alpha = linspace(0.2, 3.0, 15);
const std::vector<double> grid_eta = linspace(0.1, 1.0, 10);
const std::vector<double> grid_theta = {0.0, pi / 2.0, pi};
const std::vector<double> grid_w = {0.1, 0.3, 0.5};
const std::vector<int> grid_n = {1, 3, 5};

struct residual_tracker {
    double max = 0.0;
    void feed(double r) {
        if (r > max) max = r;
    }
};

cmat4 random_hermitian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    cmat4 h;
    for (std::size_t i = 0; i < 4; ++i) {
        h(i, i) = dist(rng);
        for (std::size_t j = i + 1; j < 4; ++j) {
            const cplx v(dist(rng), dist(rng));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

cplx det4(const cmat4& m) {
    // cofactor expansion over the first row
    auto det3 = [&](std::size_t r0, std::size_t r1, std::size_t r2, std::size_t c0,
                    std::size_t c1, std::size_t c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
               m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
               m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * det3(1, 2, 3, 1, 2, 3) - m(0, 1) * det3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * det3(1, 2, 3, 0, 1, 3) - m(0, 3) * det3(1, 2, 3, 0, 1, 2);
}

double min_eigenvalue(const cmat4& h) { return eig_hermitian(h).values[3]; }

double density_structure_residual(const cmat4& rho, int max_rank) {
    double r = rho.hermiticity_defect();
    r = std::max(r, std::abs(rho.trace().real() - 1.0));
    r = std::max(r, std::abs(rho.trace().imag()));
    const auto e = eig_hermitian(rho);
    r = std::max(r, std::max(0.0, -e.values[3]));        // PSD
    r = std::max(r, std::abs(e.values[max_rank]));       // rank bound
    return r;
}

check_result make(const std::string& name, double residual, double tol, double scale,
                  std::string note = {}, bool errata = false) {
    const double t = tol * scale;
    return {name, residual, t, residual < t, errata, std::move(note)};
}

// evolution-equation value with an injectable perturbation of the per-rail
// flip probability (delta = 0 reproduces evolved_concurrence)
double evolution_route(double alpha, channel_params ch, code_spec code,
                       const two_mode_cat_state& s, double delta) {
    const double c0 = initial_concurrence(s);
    if (c0 == 0.0) return 0.0;
    const double p = std::min(1.0, std::max(0.0, flip_prob_single(alpha, ch) + delta));
    const double lam = 2.0 * success_prob(code, p) - 1.0;
    const auto e = detail::bell_x_entries(alpha, ch.eta, lam);
    const double t_phi = e.trace();
    const x_matrix xn(e.a / t_phi, e.b / t_phi, e.c / t_phi, e.d / t_phi, e.f / t_phi,
                      e.z / t_phi);
    const two_mode_cat_state damped(alpha, alpha * std::sqrt(ch.eta), s.w, s.theta);
    const double t_chi = (0.5 * (1.0 + lam) * cat_norm(damped) +
                          0.5 * (1.0 - lam) * cat_norm_flipped(damped)) /
                         cat_norm(s);
    return concurrence_x(xn) * t_phi / t_chi * c0;
}

} // namespace

std::vector<check_result> run_all_checks(const verify_options& opt) {
    std::vector<check_result> out;
    const double sc = opt.tol_scale;

    { // orthogonal-basis identities
        residual_tracker t;
        for (double a : linspace(0.0, 6.0, 121)) {
            const auto [mu, nu] = orthogonal_coeffs(a);
            t.feed(std::abs(mu * mu + nu * nu - 1.0));
            t.feed(std::abs(mu * mu - nu * nu - overlap(a, -a)));
        }
        out.push_back(make("ortho-coeff-identities", t.max, 1e-12, sc));
    }

    { // overlap symmetry and unity
        residual_tracker t;
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> d(-4.0, 4.0);
        for (int i = 0; i < 200; ++i) {
            const double x = d(rng), y = d(rng);
            t.feed(std::abs(overlap(x, y) - overlap(y, x)));
            t.feed(std::abs(overlap(x, x) - 1.0));
        }
        out.push_back(make("overlap-symmetry", t.max, 1e-15, sc));
    }

    { // chi_density structure: Hermitian, trace 1, PSD, rank 1
        residual_tracker t;
        for (double a : linspace(0.1, 3.0, 8))
            for (double w : {0.0, 0.25, 0.5, 0.75, 1.0})
                for (double th : grid_theta)
                    t.feed(density_structure_residual(
                        chi_density(two_mode_cat_state(a, a, w, th)), 1));
        out.push_back(make("chi-density-structure", t.max, 1e-10, sc));
    }

    { // reconstruction of the coherent-representation matrix elements
        residual_tracker t;
        for (double a1 : {0.4, 1.0, 2.0})
            for (double a2 : {0.3, 1.0, 1.7})
                for (double th : grid_theta)
                    for (double w : grid_w) {
                        const two_mode_cat_state s(a1, a2, w, th);
                        const cmat4 rho = chi_density(s);
                        // uv components of the coherent product kets
                        const auto [m1, n1] = orthogonal_coeffs(a1);
                        const auto [m2, n2] = orthogonal_coeffs(a2);
                        const int s1[4] = {1, 1, -1, -1}, s2[4] = {1, -1, 1, -1};
                        cmat4 mm;
                        for (int j = 0; j < 4; ++j) {
                            mm(0, j) = m1 * m2;
                            mm(1, j) = m1 * n2 * double(s2[j]);
                            mm(2, j) = n1 * m2 * double(s1[j]);
                            mm(3, j) = n1 * n2 * double(s1[j] * s2[j]);
                        }
                        const cmat4 lhs = mm.adjoint() * rho * mm;
                        // Gram side: <e_j|chi><chi|e_k> = (G c)_j (G c)_k^* / Ntilde
                        const cmat4 g = span_gram(a1, a2);
                        const cplx ph = std::polar(1.0, th);
                        std::array<cplx, 4> c{std::sqrt(w), 0.0, 0.0, ph * std::sqrt(1.0 - w)};
                        std::array<cplx, 4> gc{};
                        for (int j = 0; j < 4; ++j)
                            for (int k = 0; k < 4; ++k) gc[j] += g(j, k) * c[k];
                        cmat4 rhs = outer(gc);
                        rhs *= 1.0 / cat_norm(s);
                        t.feed(lhs.max_abs_diff(rhs));
                    }
        out.push_back(make("chi-gram-reconstruction", t.max, 1e-12, sc));
    }

    { // flip probabilities: monotone in eta, limits
        residual_tracker t;
        for (double a : {0.3, 1.0, 2.5}) {
            double prev_s = 1.0, prev_p = 1.0;
            for (double e : linspace(0.0, 1.0, 50)) {
                const channel_params ch(e);
                const double ps = flip_prob_single(a, ch);
                const double pp = flip_prob_pair(a, ch);
                t.feed(std::max(0.0, ps - prev_s));
                t.feed(std::max(0.0, pp - prev_p));
                prev_s = ps;
                prev_p = pp;
            }
        }
        t.feed(std::abs(flip_prob_single(1.0, channel_params(1.0))));
        t.feed(std::abs(flip_prob_pair(1.0, channel_params(1.0))));
        out.push_back(make("flip-prob-monotone-eta", t.max, 1e-15, sc));

        residual_tracker lim;
        lim.feed(std::abs(flip_prob_single(10.0, channel_params(0.9)) - 0.5));
        lim.feed(std::abs(flip_prob_pair(10.0, channel_params(0.9)) - 0.5));
        out.push_back(make("flip-prob-asymptotes", lim.max, 1e-8, sc));
    }

    { // printed pair formula anchors: Bell X population and odd-pair weight
        residual_tracker t;
        for (double a : {0.3, 0.7, 1.0, 1.8, 2.6})
            for (double e : {0.1, 0.4, 2.0 / 3.0, 0.9}) {
                const channel_params ch(e);
                const double pe = flip_prob_pair(a, ch);
                const x_matrix x = bell_xmatrix(a, ch);
                t.feed(std::abs(x.b + x.c - pe));
                // decompose the oracle output of the odd pair over the two projectors
                const two_mode_cat_state s(a, a, 0.5, pi);
                const cmat4 rho = gram_channel_density(chi_span_state(s), ch);
                const two_mode_cat_state damped(a, a * std::sqrt(e), 0.5, pi);
                const cmat4 pu = chi_density(damped);
                const cmat4 pf = chi_flipped_density(damped);
                // solve [tr(pu pu) tr(pu pf); tr(pf pu) tr(pf pf)] (x y)^T = (tr(rho pu), tr(rho pf))
                const double auu = (pu * pu).trace().real(), auf = (pu * pf).trace().real();
                const double aff = (pf * pf).trace().real();
                const double bu = (rho * pu).trace().real(), bf = (rho * pf).trace().real();
                const double det = auu * aff - auf * auf;
                const double y = (auu * bf - auf * bu) / det;
                t.feed(std::abs(y - pe));
            }
        out.push_back(make("pair-flip-prob-anchors", t.max, 1e-10, sc));
    }

    { // transmit_direct against the exact Gram trace-out, plus structure
        residual_tracker t, st;
        for (double a : grid_alpha)
            for (double e : grid_eta)
                for (double th : grid_theta)
                    for (double w : grid_w) {
                        const two_mode_cat_state s(a, a, w, th);
                        const channel_params ch(e);
                        const cmat4 rho = transmit_direct(s, ch);
                        t.feed(rho.max_abs_diff(gram_channel_density(chi_span_state(s), ch)));
                        st.feed(density_structure_residual(rho, 2));
                    }
        out.push_back(make("transmit-direct-vs-gram-oracle", t.max, 1e-10, sc));
        out.push_back(make("transmit-direct-structure", st.max, 1e-10, sc));
    }

    { // transmit_encoded against the enumeration-weighted Gram oracle
        residual_tracker t, st;
        for (double a : grid_alpha)
            for (double e : grid_eta)
                for (double th : grid_theta)
                    for (double w : grid_w)
                        for (int n : grid_n) {
                            const two_mode_cat_state s(a, a, w, th);
                            const channel_params ch(e);
                            const cmat4 rho = transmit_encoded(s, ch, code_spec(n));
                            t.feed(rho.max_abs_diff(
                                gram_encoded_density(chi_span_state(s), ch, code_spec(n))));
                            st.feed(density_structure_residual(rho, 2));
                        }
        out.push_back(make("transmit-encoded-vs-gram-oracle", t.max, 1e-10, sc));
        out.push_back(make("transmit-encoded-structure", st.max, 1e-10, sc));
    }

    { // bell_xmatrix: oracle agreement and exact X sparsity
        residual_tracker t, sp;
        for (double a : {0.3, 0.7, 1.0, 1.6, 2.4})
            for (double e : grid_eta) {
                const channel_params ch(e);
                const cmat4 x = bell_xmatrix(a, ch).dense();
                const cmat4 ref = gram_channel_density(bell_span_state(a), ch);
                t.feed(x.max_abs_diff(ref));
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        if (i != j && i + j != 3) {
                            sp.feed(std::abs(x(i, j)));          // exact zeros by construction
                            sp.feed(std::abs(ref(i, j)) / 1e2);  // oracle off-X mass, scaled tol
                        }
            }
        out.push_back(make("bell-x-vs-gram-oracle", t.max, 1e-10, sc));
        out.push_back(make("bell-x-sparsity", sp.max, 1e-14, sc));
    }

    { // success polynomials, symmetry, monotonicity, enumeration
        residual_tracker t;
        for (int i = 0; i <= 100; ++i) {
            const double p = i / 100.0;
            t.feed(std::abs(success_prob(code_spec(3), p) - (1 - 3 * p * p + 2 * p * p * p)));
            t.feed(std::abs(success_prob(code_spec(5), p) -
                            (1 - 10 * std::pow(p, 3) + 15 * std::pow(p, 4) - 6 * std::pow(p, 5))));
            for (int n = 1; n <= 51; n += 2)
                t.feed(std::abs(success_prob(code_spec(n), p) +
                                success_prob(code_spec(n), 1 - p) - 1.0));
            for (int n = 1; n <= 49; n += 2) {
                const double d =
                    success_prob(code_spec(n + 2), p) - success_prob(code_spec(n), p);
                t.feed(p < 0.5 ? std::max(0.0, -d) : std::max(0.0, d));
            }
            for (int n = 1; n <= 15; n += 2)
                t.feed(std::abs(success_prob(code_spec(n), p) -
                                majority_vote_success(code_spec(n), p)));
        }
        out.push_back(make("success-prob-identities", t.max, 1e-12, sc));
    }

    { // triple-route equivalence over the verification grid
        residual_tracker tx, tev;
        double worst_evo = 0.0;
        for (double a : grid_alpha)
            for (double e : grid_eta)
                for (double th : grid_theta)
                    for (double w : grid_w)
                        for (int n : grid_n) {
                            const two_mode_cat_state s(a, a, w, th);
                            const channel_params ch(e);
                            const code_spec code(n);
                            const cmat4 rho = transmit_encoded(s, ch, code);
                            const double cg = concurrence(rho);
                            if (is_x_shaped(rho))
                                tx.feed(std::abs(cg - concurrence_x(x_matrix::from_dense(rho))));
                            const double ce =
                                evolution_route(a, ch, code, s, opt.inject_pe_error);
                            tev.feed(std::abs(cg - ce));
                            worst_evo = std::max(worst_evo, std::abs(cg - ce));
                        }
        out.push_back(make("route-general-vs-xmatrix", tx.max, 1e-9, sc));
        std::ostringstream note;
        note << "factorization-route max residual " << format_double(worst_evo);
        out.push_back(make("route-general-vs-evolution", tev.max, 1e-6, sc, note.str()));
    }

    { // Fig.-4 ordering: concurrence nondecreasing in n whenever P_e < 1/2
        residual_tracker t;
        for (const auto& [eta, theta] : figure4_panels()) {
            const channel_params ch(eta);
            for (double a : linspace(0.05, 3.0, 60)) {
                if (flip_prob_pair(a, ch) >= 0.5) continue;
                double prev = -1.0;
                for (int n : figure_code_set()) {
                    const two_mode_cat_state s(a, a, 0.5, theta);
                    const double c = concurrence(transmit_encoded(s, ch, code_spec(n)));
                    if (prev >= 0.0) t.feed(std::max(0.0, prev - c));
                    prev = c;
                }
            }
        }
        out.push_back(make("code-ordering-in-n", t.max, 1e-10, sc));
    }

    { // no entanglement sudden death at alpha = 1.3, theta = 0
        double min_c = 1.0;
        for (double e : linspace(0.02, 1.0, 50))
            for (int n : figure_code_set()) {
                const two_mode_cat_state s(1.3, 1.3, 0.5, 0.0);
                min_c = std::min(
                    min_c, concurrence(transmit_encoded(s, channel_params(e), code_spec(n))));
            }
        check_result r{"no-entanglement-sudden-death", min_c, 0.0, min_c > 0.0, false,
                       "minimum concurrence over the eta grid"};
        out.push_back(r);
    }

    { // local diagonal-phase invariance of the concurrence
        residual_tracker t;
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> ph(0.0, 2.0 * pi);
        for (int trial = 0; trial < 40; ++trial) {
            const double a = 0.3 + 0.1 * (trial % 20);
            const two_mode_cat_state s(a, a, 0.1 + 0.04 * (trial % 10), ph(rng));
            const cmat4 rho = transmit_direct(s, channel_params(0.5 + 0.01 * (trial % 40)));
            const double c0 = concurrence(rho);
            const cplx u1 = std::polar(1.0, ph(rng)), u2 = std::polar(1.0, ph(rng));
            const cplx d1 = std::polar(1.0, ph(rng)), d2 = std::polar(1.0, ph(rng));
            const cplx up[4] = {u1 * u2, u1 * d2, d1 * u2, d1 * d2};
            cmat4 rot;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) rot(i, j) = up[i] * rho(i, j) * std::conj(up[j]);
            t.feed(std::abs(concurrence(rot) - c0));
        }
        out.push_back(make("concurrence-phase-invariance", t.max, 1e-12, sc));
    }

    { // Wootters spectrum stays above -1e-10 before clamping
        double min_lam = 0.0;
        for (double a : grid_alpha)
            for (double e : grid_eta)
                for (double th : grid_theta) {
                    const two_mode_cat_state s(a, a, 0.5, th);
                    const cmat4 rho = transmit_direct(s, channel_params(e));
                    const cmat4 root = sqrt_psd(rho);
                    min_lam = std::min(min_lam, min_eigenvalue(root * spin_flip(rho) * root));
                }
        check_result r{"wootters-spectrum-floor", -min_lam, 1e-10 * sc, -min_lam < 1e-10 * sc,
                       false, "most negative pre-clamp eigenvalue"};
        out.push_back(r);
    }

    { // theta shape at w = 1/2, alpha = 1: maximum at theta = pi, monotone in cos(theta).
      // (The closed form is (1-K)/(1+K cos t); its minimum over the grid sits at
      // theta = 0, not pi/2 -- see the errata note emitted below.)
        residual_tracker t;
        double cmax = -1.0, argmax = -1.0, cmin = 2.0, argmin = -1.0;
        double prev = -1.0;
        for (double th : linspace(0.0, pi, 50)) {
            const double c = initial_concurrence(two_mode_cat_state(1.0, 1.0, 0.5, th));
            if (c > cmax) {
                cmax = c;
                argmax = th;
            }
            if (c < cmin) {
                cmin = c;
                argmin = th;
            }
            if (prev >= 0.0) t.feed(std::max(0.0, prev - c)); // nondecreasing on [0, pi]
            prev = c;
        }
        t.feed(std::abs(argmax - pi));
        std::ostringstream note;
        note << "argmin theta = " << format_double(argmin) << " (theta = 0, not pi/2)";
        out.push_back(make("initial-concurrence-theta-shape", t.max, 1e-12, sc, note.str()));
    }

    { // kernel: eigensolver contracts on 1000 seeded random Hermitian inputs
        residual_tracker res, uni, tr, det;
        std::mt19937_64 rng(7);
        for (int i = 0; i < 1000; ++i) {
            const cmat4 h = random_hermitian(rng);
            const auto e = eig_hermitian(h);
            cmat4 lam;
            for (int k = 0; k < 4; ++k) lam(k, k) = e.values[k];
            res.feed((h * e.vectors - e.vectors * lam).max_abs() /
                     std::max(1.0, h.max_abs()));
            uni.feed((e.vectors.adjoint() * e.vectors - cmat4::identity()).max_abs());
            tr.feed(std::abs(e.values[0] + e.values[1] + e.values[2] + e.values[3] -
                             h.trace().real()));
            const double prod = e.values[0] * e.values[1] * e.values[2] * e.values[3];
            const double scale = std::pow(std::max(1.0, h.frobenius_norm()), 4);
            det.feed(std::abs(prod - det4(h).real()) / scale);
        }
        out.push_back(make("kernel-eigen-residual", res.max, 1e-11, sc));
        out.push_back(make("kernel-eigen-unitarity", uni.max, 1e-11, sc));
        out.push_back(make("kernel-eigen-trace-identity", tr.max, 1e-12, sc));
        out.push_back(make("kernel-eigen-det-identity", det.max, 1e-10, sc));
    }

    { // kernel: off-diagonal norm decreases monotonically across sweeps
        residual_tracker t;
        std::mt19937_64 rng(99);
        for (int i = 0; i < 50; ++i) {
            std::vector<double> off;
            eig_hermitian_traced(random_hermitian(rng), off);
            for (std::size_t k = 1; k < off.size(); ++k)
                t.feed(std::max(0.0, off[k] - off[k - 1]));
        }
        out.push_back(make("kernel-jacobi-monotone", t.max, 1e-15, sc));
    }

    { // kernel: sqrt_psd self-consistency
        residual_tracker t;
        t.feed((sqrt_psd(cmat4::identity()) - cmat4::identity()).max_abs());
        const two_mode_cat_state s(1.0, 1.0, 0.5, 0.0);
        const cmat4 p = chi_density(s);
        t.feed((sqrt_psd(p) - p).max_abs()); // rank-1 projector is its own root
        const cmat4 rho = transmit_direct(s, channel_params(2.0 / 3.0));
        const cmat4 r = sqrt_psd(rho);
        t.feed((r * r).max_abs_diff(rho));
        out.push_back(make("kernel-sqrt-psd", t.max, 1e-10, sc));
    }

    { // Loewdin transform: T^dagger G T = I
        residual_tracker t;
        for (double a : {0.2, 0.6, 1.0, 2.0, 3.0})
            for (double e : grid_eta) {
                const cmat4 g = span_gram(a, a * std::sqrt(e));
                const cmat4 tr = lowdin_transform(g);
                t.feed((tr.adjoint() * g * tr - cmat4::identity()).max_abs());
            }
        out.push_back(make("lowdin-orthonormality", t.max, 1e-12, sc));
    }

    { // Gram vs Fock oracle at cutoff 40
        residual_tracker t, leak;
        for (double a : {0.5, 1.0, 2.0, 3.0})
            for (double e : {0.1, 0.5, 2.0 / 3.0, 0.9, 1.0})
                for (double th : {0.0, pi / 2.0, pi}) {
                    const two_mode_cat_state s(a, a, th == pi / 2.0 ? 0.3 : 0.5, th);
                    const auto st = chi_span_state(s);
                    const channel_params ch(e);
                    const auto fr = fock_channel_density(st, ch, 40);
                    t.feed(fr.density.max_abs_diff(gram_channel_density(st, ch)));
                    leak.feed(fr.projection_leak);
                }
        out.push_back(make("gram-vs-fock-oracle", t.max, 1e-8, sc));
        out.push_back(make("fock-projection-leak", leak.max, 1e-10, sc));
    }

    { // oracle linearity in the input operator
        residual_tracker t;
        const double a = 1.1;
        const channel_params ch(0.55);
        const auto s1 = chi_span_state(two_mode_cat_state(a, a, 0.5, 0.3));
        const auto s2 = chi_span_state(two_mode_cat_state(a, a, 0.2, 2.1));
        auto rep = [&](const coherent_span_state& st) {
            const cmat4 g = span_gram(a, a);
            std::array<cplx, 4> c = st.coefficients;
            cplx q = 0.0;
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) q += std::conj(c[j]) * g(j, k) * c[k];
            for (auto& v : c) v /= std::sqrt(q.real());
            return outer(c);
        };
        const cmat4 mix = 0.3 * rep(s1) + 0.7 * rep(s2);
        const cmat4 lhs = gram_apply_channel(mix, a, ch);
        const cmat4 rhs = 0.3 * gram_apply_channel(rep(s1), a, ch) +
                          0.7 * gram_apply_channel(rep(s2), a, ch);
        t.feed(lhs.max_abs_diff(rhs));
        out.push_back(make("gram-oracle-linearity", t.max, 1e-12, sc));
    }

    { // sweep determinism: identical bytes for 1 thread and 8 threads
        sweep_config cfg;
        cfg.alpha_min = cfg.alpha_max = 1.3;
        cfg.alpha_steps = 1;
        cfg.etas = linspace(0.02, 1.0, 25);
        cfg.thetas = {0.0};
        cfg.ws = {0.5};
        cfg.codes = figure_code_set();
        cfg.routes = {route::general, route::xmatrix, route::evolution};
        cfg.threads = 1;
        std::ostringstream a1, a8;
        write_sweep_csv(a1, run_sweep(cfg));
        cfg.threads = 8;
        write_sweep_csv(a8, run_sweep(cfg));
        const bool same = a1.str() == a8.str();
        check_result r{"sweep-determinism", same ? 0.0 : 1.0, 0.5, same, false,
                       "byte equality across thread counts"};
        out.push_back(r);
    }

    // ---- expected discrepancies with the printed formulas (errata) ----

    { // printed radicand w(w-1) is negative; corrected w(1-w) matches Wootters
        residual_tracker corrected;
        double printed_defect = 0.0;
        for (double a : {0.3, 0.8, 1.5})
            for (double w : grid_w)
                for (double th : grid_theta) {
                    const two_mode_cat_state s(a, a, w, th);
                    corrected.feed(std::abs(initial_concurrence(s) - concurrence(chi_density(s))));
                    printed_defect = std::max(printed_defect, -(w * (w - 1.0)));
                }
        const bool ok = corrected.max < 1e-10 * sc && printed_defect > 0.0;
        std::ostringstream note;
        note << "printed radicand w(w-1) < 0 on (0,1); corrected-form residual "
             << format_double(corrected.max);
        out.push_back({"errata-initial-concurrence-radicand", corrected.max, 1e-10 * sc, ok,
                       true, note.str()});
    }

    { // printed Bell-X coefficient table fails the trace-1 sanity check
        double printed_trace_defect = 0.0, printed_dev = 0.0;
        residual_tracker exact_ok;
        for (double a : {0.7, 1.0, 1.5})
            for (double e : {2.0 / 3.0, 0.9}) {
                const auto [mu, nu] = orthogonal_coeffs(a);
                const auto [mup, nup] = orthogonal_coeffs(a * std::sqrt(e));
                const double L = std::exp(-2.0 * (1.0 - e) * a * a);
                // coefficients as printed: b, c share the 4 mu^2 denominator and
                // d carries a mu'nu'/(mu nu) term
                const double pa = (1 + L) * mup * mup / (4 * mu * mu);
                const double pb = -(-1 + L) * nup * nup / (4 * mu * mu);
                const double pc = -(-1 + L) * mup * mup / (4 * mu * mu);
                const double pd = (-1 + L) * mup * nup / (4 * mu * nu);
                printed_trace_defect =
                    std::max(printed_trace_defect, std::abs(pa + pb + pc + pd - 1.0));
                const x_matrix x = bell_xmatrix(a, channel_params(e));
                printed_dev = std::max({printed_dev, std::abs(pc - x.c), std::abs(pd - x.d)});
                exact_ok.feed(
                    x.dense().max_abs_diff(gram_channel_density(bell_span_state(a),
                                                                channel_params(e))));
            }
        const bool ok = exact_ok.max < 1e-10 * sc && printed_trace_defect > 1e-3;
        std::ostringstream note;
        note << "printed coefficients trace defect up to " << format_double(printed_trace_defect)
             << ", entry deviation up to " << format_double(printed_dev)
             << "; derived entries match the oracle to " << format_double(exact_ok.max);
        out.push_back({"errata-printed-bell-x-coefficients", exact_ok.max, 1e-10 * sc, ok, true,
                       note.str()});
    }

    { // printed Fock normalization e^{-|a|^2} breaks <a|a> = 1
        double printed_defect = 0.0, standard_defect = 0.0;
        for (double a : {0.5, 1.0, 2.0}) {
            double mass = 0.0, term = 1.0; // sum a^{2n}/n! up to convergence
            for (int n = 0; n < 200; ++n) {
                mass += term;
                term *= a * a / (n + 1);
            }
            const double printed_norm = std::exp(-2.0 * a * a) * mass;
            const double standard_norm = std::exp(-a * a) * mass;
            printed_defect = std::max(printed_defect,
                                      std::abs(printed_norm - std::exp(-a * a)));
            standard_defect = std::max(standard_defect, std::abs(standard_norm - 1.0));
        }
        const bool ok = standard_defect < 1e-12 * sc && printed_defect < 1e-12;
        std::ostringstream note;
        note << "printed prefactor gives <a|a> = e^{-a^2}; standard prefactor residual "
             << format_double(standard_defect);
        out.push_back({"errata-fock-normalization", standard_defect, 1e-12 * sc, ok, true,
                       note.str()});
    }

    { // Eq-level encoded weights vs the operational channel model
        const double a = 1.0, e = 2.0 / 3.0;
        const channel_params ch(e);
        const code_spec code(3);
        const two_mode_cat_state even(a, a, 0.5, 0.0);
        const cmat4 rho = transmit_encoded(even, ch, code);
        const two_mode_cat_state damped(a, a * std::sqrt(e), 0.5, 0.0);
        const cmat4 pu = chi_density(damped), pf = chi_flipped_density(damped);
        const double auu = (pu * pu).trace().real(), auf = (pu * pf).trace().real();
        const double aff = (pf * pf).trace().real();
        const double bu = (rho * pu).trace().real(), bf = (rho * pf).trace().real();
        const double det = auu * aff - auf * auf;
        const double wf = (auu * bf - auf * bu) / det;
        const double eq_level = 1.0 - success_prob(code, flip_prob_pair(a, ch));
        const double dev = std::abs(wf - eq_level);
        std::ostringstream note;
        note << "flipped-component weight " << format_double(wf)
             << " vs success-polynomial(P_e) value " << format_double(eq_level)
             << " at alpha=1, eta=2/3, theta=0, n=3";
        out.push_back({"errata-eq-level-encoded-weights", dev, 1e-3 * sc, dev > 1e-3 * sc, true,
                       note.str()});
    }

    { // printed pair formula near alpha = 0: limit (1-eta)/2 vs defined value 0
        const channel_params ch(0.5);
        const double near = flip_prob_pair(1e-7, ch);
        const double at_zero = flip_prob_pair(0.0, ch);
        std::ostringstream note;
        note << "P_e(1e-7) = " << format_double(near) << " (formula limit (1-eta)/2), P_e(0) = "
             << format_double(at_zero) << " by convention";
        const bool ok = std::abs(near - 0.25) < 1e-6 && at_zero == 0.0;
        out.push_back({"errata-pair-flip-alpha-zero", std::abs(near - 0.25), 1e-6 * sc, ok, true,
                       note.str()});
    }

    return out;
}

bool print_report(std::ostream& os, const std::vector<check_result>& results) {
    bool all_pass = true;
    for (const auto& r : results) {
        const char* tag = r.errata ? (r.pass ? "EXPECTED-DISCREPANCY" : "ERRATA-CHECK-FAILED")
                                   : (r.pass ? "PASS" : "FAIL");
        os << '[' << tag << "] " << r.name << "  max residual " << format_double(r.max_residual)
           << "  tol " << format_double(r.tolerance);
        if (!r.note.empty()) os << "  (" << r.note << ')';
        os << '\n';
        if (!r.pass) all_pass = false;
    }
    os << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
    return all_pass;
}

} // namespace catsim
