#pragma once

#include <complex>
#include <cstddef>

namespace ncbf::kernels {

// Data-parallel primitives behind the dense-math hot loops. Every entry has
// a scalar reference implementation and an AVX2 variant; the active table is
// picked once at startup from cpuid (override with NCBF_KERNELS=scalar|avx2).
// Products of 32-bit floats are accumulated in 64-bit throughout.
struct Table {
    const char* name;

    // sum_i a[i]*b[i], 64-bit accumulation
    double (*dot_f32)(const float* a, const float* b, std::size_t n);
    double (*dot_f64)(const double* a, const double* b, std::size_t n);

    // acc[i] += a * x[i]
    void (*axpy_f32_acc)(double* acc, double a, const float* x, std::size_t n);
    void (*axpy_f64)(double* y, double a, const double* x, std::size_t n);

    // y[i] = max(x[i], 0)
    void (*relu_f32)(float* y, const float* x, std::size_t n);
    void (*relu_f64)(double* y, const double* x, std::size_t n);

    // dx[i] = x[i] > 0 ? dy[i] : 0
    void (*relu_bwd_f32)(float* dx, const float* x, const float* dy, std::size_t n);
    void (*relu_bwd_f64)(double* dx, const double* x, const double* dy, std::size_t n);

    // adaptive-moment update, 64-bit math; params stored in T
    void (*adam_f32)(float* p, double* m, double* v, const double* g, std::size_t n,
                     double lr, double beta1, double beta2, double eps,
                     double bias1, double bias2);
    void (*adam_f64)(double* p, double* m, double* v, const double* g, std::size_t n,
                     double lr, double beta1, double beta2, double eps,
                     double bias1, double bias2);

    void (*cvt_f64_to_f32)(float* dst, const double* src, std::size_t n);

    // sum_i conj(a[i]) * b[i]
    std::complex<double> (*cdot)(const std::complex<double>* a,
                                 const std::complex<double>* b, std::size_t n);
    // sum_i |a[i]|^2
    double (*sum_abs_sq)(const std::complex<double>* a, std::size_t n);
};

enum class Backend { scalar, avx2 };

const Table& scalar_table();

// null when the backend is unavailable (not compiled in or no CPU support)
const Table* table_for(Backend backend);

bool cpu_supports_avx2();

// runtime-selected table; honors the NCBF_KERNELS environment variable
const Table& active();

}  // namespace ncbf::kernels
