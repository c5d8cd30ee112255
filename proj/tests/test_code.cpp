#include "catsim/code.hpp"
#include "catsim/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace catsim;

TEST_CASE("code_spec validation") {
    CHECK_NOTHROW(code_spec(1));
    CHECK_NOTHROW(code_spec(101));
    CHECK_THROWS_AS(code_spec(2), invalid_code_error);
    CHECK_THROWS_AS(code_spec(0), invalid_code_error);
    CHECK_THROWS_AS(code_spec(-3), invalid_code_error);
    CHECK_THROWS_AS(code_spec(103), invalid_code_error);
}

TEST_CASE("success probability polynomials") {
    for (int i = 0; i <= 100; ++i) {
        const double p = i / 100.0;
        CHECK(std::abs(success_prob(code_spec(1), p) - (1.0 - p)) < 1e-15);
        CHECK(std::abs(success_prob(code_spec(3), p) - (1 - 3 * p * p + 2 * p * p * p)) < 1e-12);
        CHECK(std::abs(success_prob(code_spec(5), p) -
                       (1 - 10 * std::pow(p, 3) + 15 * std::pow(p, 4) - 6 * std::pow(p, 5))) <
              1e-12);
    }
}

TEST_CASE("success probability symmetry and edge values") {
    for (int n = 1; n <= 51; n += 2) {
        CHECK(success_prob(code_spec(n), 0.5) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(success_prob(code_spec(n), 0.0) == 1.0);
        CHECK(success_prob(code_spec(n), 1.0) == 0.0);
        for (double p : {0.05, 0.2, 0.35, 0.7})
            CHECK(success_prob(code_spec(n), p) + success_prob(code_spec(n), 1.0 - p) ==
                  doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("more repetitions help below p = 1/2 and hurt above") {
    for (double p : {0.02, 0.1, 0.3, 0.45})
        for (int n = 1; n <= 99; n += 2)
            CHECK(success_prob(code_spec(n + 2), p) >= success_prob(code_spec(n), p) - 1e-12);
    for (double p : {0.55, 0.8})
        for (int n = 1; n <= 99; n += 2)
            CHECK(success_prob(code_spec(n + 2), p) <= success_prob(code_spec(n), p) + 1e-12);
}

TEST_CASE("largest supported code stays finite and sane") {
    const double s = success_prob(code_spec(101), 0.3);
    CHECK(std::isfinite(s));
    CHECK(s > success_prob(code_spec(51), 0.3) - 1e-12);
    CHECK(s <= 1.0);
    CHECK_THROWS_AS(success_prob(code_spec(3), 1.5), domain_error);
}

TEST_CASE("encoded transmission") {
    const double pi = 4.0 * std::atan(1.0);
    SUBCASE("n = 1 is direct transmission, elementwise") {
        for (double th : {0.0, pi / 2.0, pi}) {
            const two_mode_cat_state s(0.9, 0.9, 0.35, th);
            const channel_params ch(0.6);
            CHECK(transmit_encoded(s, ch, code_spec(1)).max_abs_diff(transmit_direct(s, ch)) ==
                  0.0);
        }
    }
    SUBCASE("lossless channel gives the pure state for every n") {
        const two_mode_cat_state s(1.2, 1.2, 0.5, 0.4);
        for (int n : {1, 3, 11})
            CHECK(transmit_encoded(s, channel_params(1.0), code_spec(n))
                      .max_abs_diff(chi_density(s)) < 1e-13);
    }
    SUBCASE("density structure over a small grid") {
        for (double a : {0.3, 1.0, 2.4})
            for (double eta : {0.2, 0.7})
                for (int n : {3, 5}) {
                    const two_mode_cat_state s(a, a, 0.3, pi / 2.0);
                    const cmat4 rho = transmit_encoded(s, channel_params(eta), code_spec(n));
                    CHECK(rho.hermiticity_defect() < 1e-13);
                    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
                    const auto e = eig_hermitian(rho);
                    CHECK(e.values[3] > -1e-12);
                    CHECK(std::abs(e.values[2]) < 1e-12); // rank <= 2
                }
    }
    SUBCASE("higher n approaches the undamaged-phase state") {
        // dephasing factor rises toward 1 with n at fixed eta
        const channel_params ch(0.8);
        double prev = 0.0;
        for (int n : {1, 3, 5, 11, 51}) {
            const double lam = code_dephasing(1.0, ch, code_spec(n));
            CHECK(lam >= prev);
            prev = lam;
        }
        CHECK(prev <= 1.0);
    }
}

TEST_CASE("code-adjusted Bell X matrix") {
    const channel_params ch(0.7);
    SUBCASE("n = 1 reproduces the channel X matrix") {
        const x_matrix a = code_bell_xmatrix(1.1, ch, code_spec(1));
        const x_matrix b = bell_xmatrix(1.1, ch);
        CHECK(a.dense().max_abs_diff(b.dense()) < 1e-15);
    }
    SUBCASE("flipped population shrinks with n") {
        double prev = 1.0;
        for (int n : {1, 3, 5, 11}) {
            const x_matrix x = code_bell_xmatrix(1.1, ch, code_spec(n));
            CHECK(x.b + x.c <= prev + 1e-15);
            prev = x.b + x.c;
        }
    }
}
