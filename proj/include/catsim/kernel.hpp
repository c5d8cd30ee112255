#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace catsim {

using cplx = std::complex<double>;

/// Dense 4x4 complex matrix, row-major storage.
class cmat4 {
  public:
    cmat4() : m_{} {}

    static cmat4 identity() {
        cmat4 a;
        for (std::size_t i = 0; i < 4; ++i) a(i, i) = 1.0;
        return a;
    }

    cplx& operator()(std::size_t i, std::size_t j) { return m_[4 * i + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_[4 * i + j]; }

    cmat4 operator+(const cmat4& o) const;
    cmat4 operator-(const cmat4& o) const;
    cmat4 operator*(const cmat4& o) const;
    cmat4& operator+=(const cmat4& o);
    cmat4& operator*=(double s);
    friend cmat4 operator*(double s, const cmat4& a);
    friend cmat4 operator*(cplx s, const cmat4& a);

    cmat4 adjoint() const;
    cmat4 conjugate() const;
    cplx trace() const;

    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const cmat4& o) const;
    /// max_ij |a_ij|
    double max_abs() const;
    double frobenius_norm() const;
    /// max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;

  private:
    std::array<cplx, 16> m_;
};

/// Rank-1 projector v v^dagger (unnormalized).
cmat4 outer(const std::array<cplx, 4>& v);

struct eig_result {
    std::array<double, 4> values; // descending
    cmat4 vectors;                // unitary, columns are eigenvectors
};

/// Eigendecomposition of a 4x4 complex Hermitian matrix by cyclic-by-rows
/// complex Jacobi rotations. Deterministic for identical input.
/// Requires ||H - H^dagger||_max < 1e-10; throws numeric_error if the
/// off-diagonal norm has not reached 1e-14 * ||H||_F after 100 sweeps.
eig_result eig_hermitian(const cmat4& h);

/// Same, recording the off-diagonal Frobenius norm after each sweep
/// (first entry is the initial off-diagonal norm).
eig_result eig_hermitian_traced(const cmat4& h, std::vector<double>& off_per_sweep);

/// PSD square root via eigendecomposition. Eigenvalues in [-1e-10, 0) are
/// clamped to zero; anything more negative throws numeric_error. Values below
/// 1e-14 * max eigenvalue are structural zeros (solver noise on rank-deficient
/// input) and are also clamped, so the root of a projector is the projector.
cmat4 sqrt_psd(const cmat4& rho);

/// Singular values, descending, by one-sided Jacobi orthogonalization of the
/// columns. Absolute accuracy is eps * ||A|| for every singular value, with
/// none of the square-root amplification an eigenvalue route would add to
/// values near zero.
std::array<double, 4> singular_values(const cmat4& a);

} // namespace catsim
