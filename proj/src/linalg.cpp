#include "ncbf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ncbf {

bool CMatrix::is_identity(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const cplx want = r == c ? cplx(1.0) : cplx(0.0);
            if (std::abs((*this)(r, c) - want) > tol) return false;
        }
    return true;
}

CMatrix CMatrix::adjoint_times(const CMatrix& rhs) const {
    CMatrix out(cols_, rhs.cols());
    for (std::size_t i = 0; i < cols_; ++i)
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < rows_; ++k)
                acc += std::conj((*this)(k, i)) * rhs(k, j);
            out(i, j) = acc;
        }
    return out;
}

std::vector<cplx> CMatrix::times(const std::vector<cplx>& v) const {
    std::vector<cplx> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        cplx acc = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

std::vector<cplx> CMatrix::adjoint_times(const std::vector<cplx>& v) const {
    std::vector<cplx> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        cplx acc = 0.0;
        for (std::size_t r = 0; r < rows_; ++r) acc += std::conj((*this)(r, c)) * v[r];
        out[c] = acc;
    }
    return out;
}

CholeskyFactor::CholeskyFactor(const CMatrix& a) : l_(a.rows(), a.cols()) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw SingularConstraints("cholesky: matrix not square");
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a(j, j).real();
        for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l_(j, k));
        if (!(diag > 0.0) || !std::isfinite(diag))
            throw SingularConstraints("cholesky: matrix not positive definite");
        const double ljj = std::sqrt(diag);
        l_(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx acc = a(i, j);
            for (std::size_t k = 0; k < j; ++k)
                acc -= l_(i, k) * std::conj(l_(j, k));
            l_(i, j) = acc / ljj;
        }
    }
}

std::vector<cplx> CholeskyFactor::solve(const std::vector<cplx>& b) const {
    const std::size_t n = l_.rows();
    std::vector<cplx> y(b);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) y[i] -= l_(i, k) * y[k];
        y[i] /= l_(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k)
            y[ii] -= std::conj(l_(k, ii)) * y[k];
        y[ii] /= l_(ii, ii);
    }
    return y;
}

CMatrix CholeskyFactor::solve(const CMatrix& b) const {
    CMatrix out(b.rows(), b.cols());
    std::vector<cplx> col(b.rows());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
        col = solve(col);
        for (std::size_t i = 0; i < b.rows(); ++i) out(i, j) = col[i];
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& input) {
    CMatrix a = input;
    const std::size_t n = a.rows();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                // unitary 2x2 annihilation: phase-align then real Jacobi
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double absapq = std::abs(apq);
                const cplx phase = apq / absapq;
                const double theta = 0.5 * std::atan2(2.0 * absapq, aqq - app);
                const double c = std::cos(theta), s = std::sin(theta);
                const cplx sp = s * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(sp) * akq;
                    a(k, q) = sp * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sp * aqk;
                    a(q, k) = std::conj(sp) * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double hermitian_condition(const CMatrix& a) {
    const auto ev = hermitian_eigenvalues(a);
    if (ev.empty()) return 0.0;
    const double lo = ev.front(), hi = ev.back();
    if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

std::vector<cplx> lu_solve(CMatrix a, std::vector<cplx> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw SingularConstraints("lu_solve: shape mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > best) {
                best = std::abs(a(r, col));
                piv = r;
            }
        }
        if (!(best > 0.0) || !std::isfinite(best))
            throw SingularConstraints("lu_solve: singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = a(r, col) / a(col, col);
            if (f == cplx(0.0)) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t c = ii + 1; c < n; ++c) b[ii] -= a(ii, c) * b[c];
        b[ii] /= a(ii, ii);
    }
    return b;
}

}  // namespace ncbf
