#include "catsim/kernel.hpp"

#include "catsim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace catsim {

cmat4 cmat4::operator+(const cmat4& o) const {
    cmat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m_[i] = m_[i] + o.m_[i];
    return r;
}

cmat4 cmat4::operator-(const cmat4& o) const {
    cmat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m_[i] = m_[i] - o.m_[i];
    return r;
}

cmat4 cmat4::operator*(const cmat4& o) const {
    cmat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < 4; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

cmat4& cmat4::operator+=(const cmat4& o) {
    for (std::size_t i = 0; i < 16; ++i) m_[i] += o.m_[i];
    return *this;
}

cmat4& cmat4::operator*=(double s) {
    for (auto& v : m_) v *= s;
    return *this;
}

cmat4 operator*(double s, const cmat4& a) {
    cmat4 r = a;
    r *= s;
    return r;
}

cmat4 operator*(cplx s, const cmat4& a) {
    cmat4 r = a;
    for (auto& v : r.m_) v *= s;
    return r;
}

cmat4 cmat4::adjoint() const {
    cmat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

cmat4 cmat4::conjugate() const {
    cmat4 r;
    for (std::size_t i = 0; i < 16; ++i) r.m_[i] = std::conj(m_[i]);
    return r;
}

cplx cmat4::trace() const { return m_[0] + m_[5] + m_[10] + m_[15]; }

double cmat4::max_abs_diff(const cmat4& o) const {
    double m = 0.0;
    for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(m_[i] - o.m_[i]));
    return m;
}

double cmat4::max_abs() const {
    double m = 0.0;
    for (const auto& v : m_) m = std::max(m, std::abs(v));
    return m;
}

double cmat4::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : m_) s += std::norm(v);
    return std::sqrt(s);
}

double cmat4::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

cmat4 outer(const std::array<cplx, 4>& v) {
    cmat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r(i, j) = v[i] * std::conj(v[j]);
    return r;
}

namespace {

double off_diagonal_norm(const cmat4& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 Hermitian block
// [[app, apq], [conj(apq), aqq]] is diagonalized by U = [[c, -conj(s)], [s, c]]
// with s = t*c*e^{-i phi}, apq = |apq| e^{i phi}, and t the smaller-magnitude
// root of t^2 - 2 tau t - 1 = 0, tau = (aqq - app) / (2 |apq|). |t| <= 1 keeps
// the rotation angle at most 45 degrees.
void rotate(cmat4& a, cmat4& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const cplx phase = apq / r;
    const cplx s = t * c * std::conj(phase);

    // columns: A <- A U
    for (std::size_t i = 0; i < 4; ++i) {
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip + s * aiq;
        a(i, q) = -std::conj(s) * aip + c * aiq;
    }
    // rows: A <- U^dagger A
    for (std::size_t j = 0; j < 4; ++j) {
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj + std::conj(s) * aqj;
        a(q, j) = -s * apj + c * aqj;
    }
    // exact zeros on the eliminated pair, real diagonal
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);

    for (std::size_t i = 0; i < 4; ++i) {
        const cplx vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip + s * viq;
        v(i, q) = -std::conj(s) * vip + c * viq;
    }
}

eig_result eig_impl(const cmat4& h, std::vector<double>* trace_out) {
    if (h.hermiticity_defect() > 1e-10)
        throw numeric_error("eig_hermitian: input is not Hermitian");

    // symmetrized working copy; kills representation drift in the input
    cmat4 a;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    cmat4 v = cmat4::identity();
    const double tol = 1e-14 * std::max(a.frobenius_norm(), 1e-300);
    if (trace_out) trace_out->push_back(off_diagonal_norm(a));

    bool converged = false;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm(a) < tol) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t q = p + 1; q < 4; ++q) rotate(a, v, p, q);
        if (trace_out) trace_out->push_back(off_diagonal_norm(a));
    }
    if (!converged && off_diagonal_norm(a) >= tol)
        throw numeric_error("eig_hermitian: no convergence after 100 sweeps");

    std::array<std::size_t, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    eig_result res;
    for (std::size_t k = 0; k < 4; ++k) {
        res.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < 4; ++i) res.vectors(i, k) = v(i, order[k]);
    }
    return res;
}

} // namespace

eig_result eig_hermitian(const cmat4& h) { return eig_impl(h, nullptr); }

eig_result eig_hermitian_traced(const cmat4& h, std::vector<double>& off_per_sweep) {
    return eig_impl(h, &off_per_sweep);
}

cmat4 sqrt_psd(const cmat4& rho) {
    const eig_result e = eig_hermitian(rho);
    std::array<double, 4> lam = e.values;
    for (double& l : lam) {
        if (l < -1e-10)
            throw numeric_error("sqrt_psd: eigenvalue below -1e-10, input not PSD");
        if (l < 0.0) l = 0.0;
    }
    const double floor = 1e-14 * lam[0];
    for (double& l : lam)
        if (l < floor) l = 0.0;
    cmat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < 4; ++k)
                s += e.vectors(i, k) * std::sqrt(lam[k]) * std::conj(e.vectors(j, k));
            r(i, j) = s;
        }
    return r;
}

std::array<double, 4> singular_values(const cmat4& a) {
    cmat4 m = a;
    auto column_coupling = [&m](std::size_t p, std::size_t q, double& app, double& aqq,
                                cplx& apq) {
        app = aqq = 0.0;
        apq = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            app += std::norm(m(i, p));
            aqq += std::norm(m(i, q));
            apq += std::conj(m(i, p)) * m(i, q);
        }
    };

    constexpr double rel_tol = 8.9e-16; // a few ulps; below this a rotation only churns noise
    double scale2 = 0.0;                // squared Frobenius norm of the input
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) scale2 += std::norm(m(i, j));
    const double abs_tol = 1e-32 * scale2; // pairs of numerically-zero columns

    bool converged = false;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t q = p + 1; q < 4; ++q) {
                double app, aqq;
                cplx apq;
                column_coupling(p, q, app, aqq, apq);
                const double r = std::abs(apq);
                if (r <= abs_tol || r <= rel_tol * std::sqrt(app * aqq)) continue;
                converged = false;
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = t * c * std::conj(apq / r);
                for (std::size_t i = 0; i < 4; ++i) {
                    const cplx mip = m(i, p), miq = m(i, q);
                    m(i, p) = c * mip + s * miq;
                    m(i, q) = -std::conj(s) * mip + c * miq;
                }
            }
    }
    if (!converged) {
        // rounding can keep couplings churning at a few ulps; accept the
        // result only if every residual coupling is negligible
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t q = p + 1; q < 4; ++q) {
                double app, aqq;
                cplx apq;
                column_coupling(p, q, app, aqq, apq);
                if (std::abs(apq) > abs_tol &&
                    std::abs(apq) > 1e-12 * std::sqrt(app * aqq))
                    throw numeric_error("singular_values: no convergence after 100 sweeps");
            }
    }

    std::array<double, 4> sv{};
    for (std::size_t k = 0; k < 4; ++k) {
        double n2 = 0.0;
        for (std::size_t i = 0; i < 4; ++i) n2 += std::norm(m(i, k));
        sv[k] = std::sqrt(n2);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

} // namespace catsim
