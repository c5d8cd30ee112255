#include "catsim/coherent.hpp"
#include "catsim/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace catsim;

namespace {
const double pi = 4.0 * std::atan(1.0);
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
} // namespace

TEST_CASE("overlap closed forms") {
    CHECK(overlap(1.0, -1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(overlap(0.5, -0.5) == doctest::Approx(0.6065306597126334).epsilon(1e-14));
    CHECK(overlap(1.7, 1.7) == 1.0);
    CHECK(overlap(0.3, 2.1) == overlap(2.1, 0.3));
}

TEST_CASE("orthogonal basis coefficients") {
    SUBCASE("vacuum limit") {
        const auto c = orthogonal_coeffs(0.0);
        CHECK(c.mu == 1.0);
        CHECK(c.nu == 0.0);
    }
    SUBCASE("alpha = 1, frozen values") {
        const auto c = orthogonal_coeffs(1.0);
        CHECK(c.mu == doctest::Approx(0.7534372181000261).epsilon(1e-14));
        CHECK(c.nu == doctest::Approx(0.6575198539828996).epsilon(1e-14));
        CHECK(c.mu * c.mu - c.nu * c.nu == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    }
    SUBCASE("large-amplitude limit is the balanced basis") {
        const auto c = orthogonal_coeffs(5.0);
        CHECK(std::abs(c.mu - inv_sqrt2) < 1e-10);
        CHECK(std::abs(c.nu - inv_sqrt2) < 1e-10);
    }
    SUBCASE("identities across a grid") {
        for (double a = 0.0; a <= 4.0; a += 0.09) {
            const auto c = orthogonal_coeffs(a);
            CHECK(std::abs(c.mu * c.mu + c.nu * c.nu - 1.0) < 1e-12);
            CHECK(std::abs(c.mu * c.mu - c.nu * c.nu - overlap(a, -a)) < 1e-12);
            CHECK(c.mu >= c.nu);
        }
    }
    SUBCASE("negative amplitude rejected") {
        CHECK_THROWS_AS(orthogonal_coeffs(-0.1), domain_error);
    }
}

TEST_CASE("qubit normalization constant") {
    CHECK(qubit_norm(cat_qubit(1.0, 0.0, 0.7)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(qubit_norm(cat_qubit(inv_sqrt2, inv_sqrt2, 1.0)) ==
          doctest::Approx(1.1353352832366127).epsilon(1e-14));
    CHECK(qubit_norm(cat_qubit(inv_sqrt2, -inv_sqrt2, 1.0)) ==
          doctest::Approx(0.8646647167633873).epsilon(1e-14));
    CHECK_THROWS_AS(qubit_norm(cat_qubit(inv_sqrt2, -inv_sqrt2, 0.0)),
                    degenerate_state_error);
    CHECK_THROWS_AS(cat_qubit(1.0, 1.0, 1.0), domain_error); // not normalized
}

TEST_CASE("two-mode cat normalization") {
    CHECK(cat_norm(two_mode_cat_state(0.8, 0.8, 1.0, 1.3)) == 1.0); // single branch
    CHECK(cat_norm(two_mode_cat_state(1.0, 1.0, 0.5, 0.0)) ==
          doctest::Approx(1.0183156388887342).epsilon(1e-14));
    CHECK(cat_norm(two_mode_cat_state(1.0, 1.0, 0.5, pi)) ==
          doctest::Approx(0.9816843611112658).epsilon(1e-14));
    CHECK_THROWS_AS(cat_norm(two_mode_cat_state(0.0, 0.0, 0.5, pi)),
                    degenerate_state_error);
    CHECK_THROWS_AS(two_mode_cat_state(1.0, 1.0, 1.5, 0.0), domain_error);
}

TEST_CASE("chi density is a rank-1 unit-trace projector") {
    for (double a : {0.1, 0.7, 1.5, 3.0})
        for (double w : {0.0, 0.25, 0.5, 0.75, 1.0})
            for (double th : {0.0, pi / 2.0, pi}) {
                const two_mode_cat_state s(a, a, w, th);
                const cmat4 rho = chi_density(s);
                CHECK(rho.hermiticity_defect() < 1e-12);
                CHECK(std::abs(rho.trace().real() - 1.0) < 1e-10);
                const auto e = eig_hermitian(rho);
                CHECK(e.values[3] > -1e-10);
                CHECK(std::abs(e.values[1]) < 1e-10); // rank 1
            }
}

TEST_CASE("chi density at alpha = 0 is the vacuum projector") {
    const cmat4 rho = chi_density(two_mode_cat_state(0.0, 0.0, 0.3, 0.0));
    CHECK(rho(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i || j) CHECK(std::abs(rho(i, j)) < 1e-14);
}

TEST_CASE("flip construction is an involution") {
    const two_mode_cat_state s(1.1, 0.8, 0.37, 2.2);
    // flipping theta by pi swaps the branch sign, so flipping the flipped
    // state recovers the original entries
    const two_mode_cat_state flipped_state(1.1, 0.8, 0.37, 2.2 + pi);
    CHECK(chi_flipped_density(flipped_state).max_abs_diff(chi_density(s)) < 1e-12);
    CHECK(chi_flipped_density(s).max_abs_diff(chi_density(flipped_state)) < 1e-12);
}

TEST_CASE("flipped state at w = 1 is the same product state") {
    const two_mode_cat_state s(0.9, 0.9, 1.0, 1.4);
    CHECK(chi_flipped_density(s).max_abs_diff(chi_density(s)) < 1e-13);
}

TEST_CASE("product state at w = 1 has no coherence between branches") {
    const cmat4 rho = chi_density(two_mode_cat_state(1.0, 1.0, 1.0, 0.0));
    // |alpha,alpha> = (mu u + nu v) x (mu u + nu v): rank-1 product state
    const auto c = orthogonal_coeffs(1.0);
    CHECK(rho(0, 0).real() == doctest::Approx(std::pow(c.mu, 4)).epsilon(1e-13));
    CHECK(rho(3, 3).real() == doctest::Approx(std::pow(c.nu, 4)).epsilon(1e-13));
}
