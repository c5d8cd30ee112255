#include "catsim/xmatrix.hpp"

#include "catsim/errors.hpp"

#include <cmath>

namespace catsim {

x_matrix::x_matrix(double a_, double b_, double c_, double d_, cplx f_, cplx z_)
    : a(a_), b(b_), c(c_), d(d_), f(f_), z(z_) {
    if (a < -1e-12 || b < -1e-12 || c < -1e-12 || d < -1e-12)
        throw domain_error("x_matrix: negative diagonal entry");
    if (std::abs(a + b + c + d - 1.0) > 1e-10)
        throw domain_error("x_matrix: trace must be 1");
    if (std::norm(f) > a * d + 1e-12)
        throw domain_error("x_matrix: |f|^2 > a d, not positive semidefinite");
    if (std::norm(z) > b * c + 1e-12)
        throw domain_error("x_matrix: |z|^2 > b c, not positive semidefinite");
}

cmat4 x_matrix::dense() const {
    cmat4 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    r(3, 3) = d;
    r(0, 3) = f;
    r(3, 0) = std::conj(f);
    r(1, 2) = z;
    r(2, 1) = std::conj(z);
    return r;
}

bool is_x_shaped(const cmat4& rho, double tol) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool on_x = (i == j) || (i + j == 3);
            if (!on_x && std::abs(rho(i, j)) > tol) return false;
        }
    return true;
}

x_matrix x_matrix::from_dense(const cmat4& rho, double tol) {
    if (!is_x_shaped(rho, tol))
        throw domain_error("x_matrix::from_dense: matrix is not X-shaped");
    return x_matrix(rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(), rho(3, 3).real(),
                    rho(0, 3), rho(1, 2));
}

} // namespace catsim
