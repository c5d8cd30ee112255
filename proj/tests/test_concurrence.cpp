#include "catsim/concurrence.hpp"
#include "catsim/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace catsim;

namespace {

const double pi = 4.0 * std::atan(1.0);

cmat4 bell_projector() {
    std::array<cplx, 4> v{1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    return outer(v);
}

cmat4 random_density(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    cmat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = cplx(d(rng), d(rng));
    cmat4 rho = m * m.adjoint();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

} // namespace

TEST_CASE("spin flip basics") {
    SUBCASE("Bell projector is invariant") {
        const cmat4 rho = bell_projector();
        CHECK(spin_flip(rho).max_abs_diff(rho) < 1e-15);
    }
    SUBCASE("corner basis states swap") {
        std::array<cplx, 4> uu{1.0, 0.0, 0.0, 0.0};
        std::array<cplx, 4> vv{0.0, 0.0, 0.0, 1.0};
        CHECK(spin_flip(outer(uu)).max_abs_diff(outer(vv)) == 0.0);
    }
    SUBCASE("trace-preserving involution on random Hermitian input") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 50; ++trial) {
            const cmat4 rho = random_density(rng);
            const cmat4 flipped = spin_flip(rho);
            CHECK(std::abs(flipped.trace().real() - rho.trace().real()) < 1e-13);
            CHECK(flipped.hermiticity_defect() < 1e-13);
            CHECK(spin_flip(flipped).max_abs_diff(rho) == 0.0);
        }
    }
}

TEST_CASE("concurrence reference points") {
    CHECK(concurrence(bell_projector()) == doctest::Approx(1.0).epsilon(1e-12));
    SUBCASE("product states carry no entanglement") {
        std::array<cplx, 4> prod{0.36, 0.48, 0.48, 0.64}; // (0.6,0.8) x (0.6,0.8)
        CHECK(concurrence(outer(prod)) < 1e-12);
        const two_mode_cat_state w1(1.0, 1.0, 1.0, 0.0);
        CHECK(concurrence(chi_density(w1)) < 1e-10);
        CHECK(concurrence(transmit_direct(w1, channel_params(0.5))) < 1e-10);
    }
    SUBCASE("classically correlated diagonal state") {
        cmat4 diag;
        diag(0, 0) = 0.5;
        diag(3, 3) = 0.5;
        CHECK(concurrence(diag) == 0.0);
    }
}

TEST_CASE("closed-form X concurrence") {
    CHECK(concurrence_x(x_matrix(0.5, 0.0, 0.0, 0.5, 0.5, 0.0)) == doctest::Approx(1.0));
    CHECK(concurrence_x(x_matrix(0.3, 0.2, 0.2, 0.3, 0.0, 0.0)) == 0.0);
    SUBCASE("agrees with the general route on the dense embedding") {
        std::mt19937_64 rng(13);
        std::uniform_real_distribution<double> d(0.0, 1.0);
        for (int trial = 0; trial < 40; ++trial) {
            double a = d(rng) + 0.05, b = d(rng) + 0.05, c = d(rng) + 0.05, e = d(rng) + 0.05;
            const double t = a + b + c + e;
            a /= t, b /= t, c /= t, e /= t;
            const cplx f = std::polar(0.95 * std::sqrt(a * e), 2 * pi * d(rng));
            const cplx z = std::polar(0.95 * std::sqrt(b * c), 2 * pi * d(rng));
            const x_matrix x(a, b, c, e, f, z);
            CHECK(std::abs(concurrence_x(x) - concurrence(x.dense())) < 1e-9);
        }
    }
    SUBCASE("Bell channel output: both routes and the frozen value") {
        const x_matrix x = bell_xmatrix(1.0, channel_params(0.9));
        CHECK(concurrence_x(x) == doctest::Approx(0.8149656976399767).epsilon(1e-12));
        CHECK(std::abs(concurrence_x(x) - concurrence(x.dense())) < 1e-9);
    }
    SUBCASE("validation") {
        CHECK_THROWS_AS(x_matrix(0.5, 0.0, 0.0, 0.5, 0.9, 0.0), domain_error); // |f|^2 > ad
        CHECK_THROWS_AS(x_matrix(0.4, 0.0, 0.0, 0.4, 0.0, 0.0), domain_error); // trace
    }
}

TEST_CASE("initial-state concurrence") {
    SUBCASE("product limits") {
        CHECK(initial_concurrence(two_mode_cat_state(1.0, 1.0, 0.0, 0.7)) == 0.0);
        CHECK(initial_concurrence(two_mode_cat_state(1.0, 1.0, 1.0, 0.7)) == 0.0);
    }
    SUBCASE("odd pair is maximally entangled at every amplitude") {
        for (double a = 0.05; a <= 5.0; a += 0.07) {
            const two_mode_cat_state s(a, a, 0.5, pi);
            CHECK(initial_concurrence(s) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(concurrence(chi_density(s)) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    SUBCASE("even pair at alpha = 1 is tanh(2)") {
        const two_mode_cat_state s(1.0, 1.0, 0.5, 0.0);
        CHECK(initial_concurrence(s) == doctest::Approx(0.9640275800758169).epsilon(1e-13));
        CHECK(concurrence(chi_density(s)) ==
              doctest::Approx(0.9640275800758169).epsilon(1e-10));
    }
    SUBCASE("closed form tracks the general Wootters route") {
        for (double a : {0.2, 0.6, 1.3, 2.8})
            for (double w : {0.1, 0.3, 0.5, 0.8})
                for (double th : {0.0, 0.9, pi / 2.0, pi}) {
                    const two_mode_cat_state s(a, a, w, th);
                    CHECK(std::abs(initial_concurrence(s) - concurrence(chi_density(s))) <
                          1e-10);
                }
    }
}

TEST_CASE("flipping the even pair gives the maximally entangled odd pair") {
    const two_mode_cat_state even(1.0, 1.0, 0.5, 0.0);
    CHECK(concurrence(chi_flipped_density(even)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fully opaque channel leaves no Bell entanglement") {
    CHECK(concurrence_x(bell_xmatrix(1.0, channel_params(0.0))) == 0.0);
}

TEST_CASE("Wootters Hermitian equivalent keeps the trace identity") {
    const two_mode_cat_state s(1.0, 1.0, 0.5, 0.0);
    const cmat4 rho = transmit_direct(s, channel_params(2.0 / 3.0));
    const cmat4 root = sqrt_psd(rho);
    const cmat4 h = root * spin_flip(rho) * root;
    const auto e = eig_hermitian(h);
    CHECK(e.values[0] + e.values[1] + e.values[2] + e.values[3] ==
          doctest::Approx(h.trace().real()).epsilon(1e-12));
}

TEST_CASE("direct-transmission concurrence, three routes") {
    SUBCASE("odd pair, frozen closed form") {
        const two_mode_cat_state s(1.0, 1.0, 0.5, pi);
        const channel_params ch(2.0 / 3.0);
        const double cg = concurrence(transmit_direct(s, ch));
        CHECK(cg == doctest::Approx(0.49985778432333866).epsilon(1e-9));
        const double ce = evolved_concurrence(1.0, ch, code_spec(1), s);
        CHECK(std::abs(cg - ce) < 1e-9);
    }
    SUBCASE("even pair") {
        const two_mode_cat_state s(1.0, 1.0, 0.5, 0.0);
        const channel_params ch(2.0 / 3.0);
        const double cg = concurrence(transmit_direct(s, ch));
        CHECK(cg == doctest::Approx(0.48187669020328777).epsilon(1e-9));
        // the even output is X-shaped at w = 1/2: closed form applies
        const cmat4 rho = transmit_direct(s, ch);
        REQUIRE(is_x_shaped(rho));
        CHECK(std::abs(concurrence_x(x_matrix::from_dense(rho)) - cg) < 1e-10);
    }
}

TEST_CASE("evolution-equation route") {
    SUBCASE("lossless channel returns the initial concurrence") {
        for (double th : {0.0, 1.1, pi}) {
            const two_mode_cat_state s(0.9, 0.9, 0.4, th);
            CHECK(evolved_concurrence(0.9, channel_params(1.0), code_spec(5), s) ==
                  doctest::Approx(initial_concurrence(s)).epsilon(1e-12));
        }
    }
    SUBCASE("product input gives zero through any channel") {
        const two_mode_cat_state s(1.0, 1.0, 1.0, 0.0);
        CHECK(evolved_concurrence(1.0, channel_params(0.3), code_spec(3), s) == 0.0);
    }
    SUBCASE("matches the general route including encoded transmission") {
        const two_mode_cat_state s(1.0, 1.0, 0.5, 0.0);
        const channel_params ch(2.0 / 3.0);
        const double ce = evolved_concurrence(1.0, ch, code_spec(3), s);
        CHECK(ce == doctest::Approx(0.6549668276585799).epsilon(1e-12));
        CHECK(std::abs(concurrence(transmit_encoded(s, ch, code_spec(3))) - ce) < 1e-9);
    }
    SUBCASE("no entanglement sudden death on the fixed-amplitude grid") {
        const two_mode_cat_state s(1.3, 1.3, 0.5, 0.0);
        for (double eta = 0.02; eta <= 1.0; eta += 0.02)
            for (int n : {1, 3, 5, 11, 51})
                CHECK(evolved_concurrence(1.3, channel_params(eta), code_spec(n), s) > 0.0);
    }
}

TEST_CASE("concurrence is invariant under local diagonal phases") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ph(0.0, 2 * pi);
    const two_mode_cat_state s(1.2, 1.2, 0.3, 0.7);
    const cmat4 rho = transmit_direct(s, channel_params(0.6));
    const double c0 = concurrence(rho);
    for (int trial = 0; trial < 20; ++trial) {
        const cplx u[2] = {std::polar(1.0, ph(rng)), std::polar(1.0, ph(rng))};
        const cplx v[2] = {std::polar(1.0, ph(rng)), std::polar(1.0, ph(rng))};
        cmat4 rot;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                rot(i, j) = u[i / 2] * v[i % 2] * rho(i, j) * std::conj(u[j / 2] * v[j % 2]);
        CHECK(std::abs(concurrence(rot) - c0) < 1e-12);
    }
}

TEST_CASE("random densities stay within bounds") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 50; ++trial) {
        const double c = concurrence(random_density(rng));
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-12);
    }
}
