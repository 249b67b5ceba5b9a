#pragma once

#include <complex>
#include <vector>

#include "ncbf/errors.hpp"

namespace ncbf {

using cplx = std::complex<double>;

// Dense row-major complex matrix; sized for the small systems that appear
// here (K x K constraint Grams, N x N covariances).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<cplx>& data() const { return data_; }

    bool is_identity(double tol = 0.0) const;

    // A^H * A-style products
    CMatrix adjoint_times(const CMatrix& rhs) const;          // this^H * rhs
    std::vector<cplx> times(const std::vector<cplx>& v) const;
    std::vector<cplx> adjoint_times(const std::vector<cplx>& v) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

// Cholesky factorization A = L L^H of a Hermitian positive-definite matrix.
// Throws SingularConstraints when a pivot is not strictly positive.
class CholeskyFactor {
public:
    explicit CholeskyFactor(const CMatrix& a);

    std::vector<cplx> solve(const std::vector<cplx>& b) const;
    CMatrix solve(const CMatrix& b) const;

private:
    CMatrix l_;
};

// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
std::vector<double> hermitian_eigenvalues(const CMatrix& a);

// lambda_max / lambda_min of a Hermitian PSD matrix; +inf when the smallest
// eigenvalue is not strictly positive.
double hermitian_condition(const CMatrix& a);

// General complex LU solve with partial pivoting (used by oracle-style
// verification code; the production path goes through Cholesky).
std::vector<cplx> lu_solve(CMatrix a, std::vector<cplx> b);

}  // namespace ncbf
