#include "ncbf/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace ncbf::kernels {
namespace {

double dot_f32(const float* a, const float* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

double dot_f64(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_f32_acc(double* acc, double a, const float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += a * static_cast<double>(x[i]);
}

void axpy_f64(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void relu_f32(float* y, const float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_f64(double* y, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_bwd_f32(float* dx, const float* x, const float* dy, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dx[i] = x[i] > 0.0f ? dy[i] : 0.0f;
}

void relu_bwd_f64(double* dx, const double* x, const double* dy, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dx[i] = x[i] > 0.0 ? dy[i] : 0.0;
}

template <typename T>
void adam_impl(T* p, double* m, double* v, const double* g, std::size_t n,
               double lr, double beta1, double beta2, double eps,
               double bias1, double bias2) {
    for (std::size_t i = 0; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        const double mhat = m[i] / bias1;
        const double vhat = v[i] / bias2;
        p[i] = static_cast<T>(static_cast<double>(p[i]) - lr * mhat / (std::sqrt(vhat) + eps));
    }
}

void adam_f32(float* p, double* m, double* v, const double* g, std::size_t n,
              double lr, double b1, double b2, double eps, double c1, double c2) {
    adam_impl(p, m, v, g, n, lr, b1, b2, eps, c1, c2);
}

void adam_f64(double* p, double* m, double* v, const double* g, std::size_t n,
              double lr, double b1, double b2, double eps, double c1, double c2) {
    adam_impl(p, m, v, g, n, lr, b1, b2, eps, c1, c2);
}

void cvt_f64_to_f32(float* dst, const double* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<float>(src[i]);
}

std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double sum_abs_sq(const std::complex<double>* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return acc;
}

}  // namespace

const Table& scalar_table() {
    static const Table t{
        "scalar",   dot_f32,      dot_f64,      axpy_f32_acc, axpy_f64,
        relu_f32,   relu_f64,     relu_bwd_f32, relu_bwd_f64, adam_f32,
        adam_f64,   cvt_f64_to_f32, cdot,       sum_abs_sq,
    };
    return t;
}

}  // namespace ncbf::kernels
