#pragma once

#include "catsim/kernel.hpp"

namespace catsim {

/// Two-qubit density with X sparsity in the {uu, uv, vu, vv} basis:
///   diagonal (a, b, c, d), corners (1,4)/(4,1) = f/f*, inner (2,3)/(3,2) = z/z*.
struct x_matrix {
    /// Validates a..d >= 0, a+b+c+d = 1 (tol 1e-10), |f|^2 <= a d + 1e-12,
    /// |z|^2 <= b c + 1e-12; throws domain_error otherwise.
    x_matrix(double a, double b, double c, double d, cplx f, cplx z);

    double a, b, c, d;
    cplx f, z;

    /// Dense embedding; all eight non-X entries are identically zero.
    cmat4 dense() const;

    /// Extract from a dense matrix; requires X sparsity (off-X entries below
    /// tol in absolute value), throws domain_error otherwise.
    static x_matrix from_dense(const cmat4& rho, double tol = 1e-12);
};

/// True when every non-X entry of rho is below tol in absolute value.
bool is_x_shaped(const cmat4& rho, double tol = 1e-12);

} // namespace catsim
