#include "catsim/errors.hpp"
#include "catsim/kernel.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace catsim;

namespace {

cmat4 random_hermitian(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    cmat4 h;
    for (std::size_t i = 0; i < 4; ++i) {
        h(i, i) = d(rng);
        for (std::size_t j = i + 1; j < 4; ++j) {
            const cplx v(d(rng), d(rng));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

cmat4 random_matrix(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    cmat4 m;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = cplx(d(rng), d(rng));
    return m;
}

} // namespace

TEST_CASE("eigendecomposition of the identity") {
    const auto e = eig_hermitian(cmat4::identity());
    for (int k = 0; k < 4; ++k) CHECK(e.values[k] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("diagonal matrix keeps its entries, descending") {
    cmat4 d;
    d(0, 0) = 2.0;
    d(1, 1) = 4.0;
    d(2, 2) = 1.0;
    d(3, 3) = 3.0;
    const auto e = eig_hermitian(d);
    CHECK(e.values[0] == doctest::Approx(4.0));
    CHECK(e.values[1] == doctest::Approx(3.0));
    CHECK(e.values[2] == doctest::Approx(2.0));
    CHECK(e.values[3] == doctest::Approx(1.0));
    // eigenvectors form a permutation of the identity
    for (int k = 0; k < 4; ++k) {
        double colmax = 0.0;
        for (int i = 0; i < 4; ++i) colmax = std::max(colmax, std::abs(e.vectors(i, k)));
        CHECK(colmax == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("residual, unitarity and trace identity on random Hermitian input") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const cmat4 h = random_hermitian(rng);
        const auto e = eig_hermitian(h);
        cmat4 lam;
        for (int k = 0; k < 4; ++k) lam(k, k) = e.values[k];
        CHECK((h * e.vectors - e.vectors * lam).max_abs() < 1e-11 * std::max(1.0, h.max_abs()));
        CHECK((e.vectors.adjoint() * e.vectors - cmat4::identity()).max_abs() < 1e-11);
        CHECK(e.values[0] + e.values[1] + e.values[2] + e.values[3] ==
              doctest::Approx(h.trace().real()).epsilon(1e-12));
        CHECK(e.values[0] >= e.values[1]);
        CHECK(e.values[1] >= e.values[2]);
        CHECK(e.values[2] >= e.values[3]);
    }
}

TEST_CASE("deterministic for identical input") {
    std::mt19937_64 rng(1);
    const cmat4 h = random_hermitian(rng);
    const auto e1 = eig_hermitian(h);
    const auto e2 = eig_hermitian(h);
    for (int k = 0; k < 4; ++k) CHECK(e1.values[k] == e2.values[k]);
    CHECK(e1.vectors.max_abs_diff(e2.vectors) == 0.0);
}

TEST_CASE("non-Hermitian input is rejected") {
    cmat4 m;
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eig_hermitian(m), numeric_error);
}

TEST_CASE("sqrt_psd: identity and projector are fixed points") {
    CHECK((sqrt_psd(cmat4::identity()) - cmat4::identity()).max_abs() < 1e-14);
    std::array<cplx, 4> v{0.5, 0.5, 0.5, 0.5};
    const cmat4 p = outer(v);
    CHECK((sqrt_psd(p) - p).max_abs() < 1e-13); // idempotent rank-1 projector
}

TEST_CASE("sqrt_psd squares back to the input") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const cmat4 m = random_hermitian(rng);
        const cmat4 psd = m * m; // PSD by construction
        const cmat4 r = sqrt_psd(psd);
        CHECK((r * r).max_abs_diff(psd) < 1e-10 * std::max(1.0, psd.max_abs()));
    }
}

TEST_CASE("sqrt_psd rejects clearly negative spectra") {
    cmat4 d;
    d(0, 0) = 1.0;
    d(1, 1) = -0.5;
    d(2, 2) = 0.2;
    d(3, 3) = 0.1;
    CHECK_THROWS_AS(sqrt_psd(d), numeric_error);
}

TEST_CASE("adjoint is an involution and reverses products") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const cmat4 a = random_matrix(rng);
        const cmat4 b = random_matrix(rng);
        CHECK(a.adjoint().adjoint().max_abs_diff(a) == 0.0);
        CHECK(((a * b).adjoint()).max_abs_diff(b.adjoint() * a.adjoint()) < 1e-13);
    }
}

TEST_CASE("A times identity is A") {
    std::mt19937_64 rng(3);
    const cmat4 a = random_matrix(rng);
    CHECK((a * cmat4::identity()).max_abs_diff(a) == 0.0);
}

TEST_CASE("off-diagonal norm decreases monotonically per sweep") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> off;
        eig_hermitian_traced(random_hermitian(rng), off);
        REQUIRE(off.size() >= 2);
        for (std::size_t k = 1; k < off.size(); ++k) CHECK(off[k] <= off[k - 1] + 1e-15);
        CHECK(off.back() < 1e-13);
    }
}
