#include "ncbf/kernels.hpp"

#include <cmath>
#include <immintrin.h>

// AVX2+FMA variants. float inputs are widened to double lanes before the
// FMA so accumulation stays in 64-bit, matching the scalar reference up to
// summation order.
namespace ncbf::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_f32(const float* a, const float* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 af = _mm256_loadu_ps(a + i);
        __m256 bf = _mm256_loadu_ps(b + i);
        acc0 = _mm256_fmadd_pd(_mm256_cvtps_pd(_mm256_castps256_ps128(af)),
                               _mm256_cvtps_pd(_mm256_castps256_ps128(bf)), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_cvtps_pd(_mm256_extractf128_ps(af, 1)),
                               _mm256_cvtps_pd(_mm256_extractf128_ps(bf, 1)), acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return acc;
}

double dot_f64(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_f32_acc(double* acc, double a, const float* x, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d xv = _mm256_cvtps_pd(_mm_loadu_ps(x + i));
        _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(av, xv, _mm256_loadu_pd(acc + i)));
    }
    for (; i < n; ++i) acc[i] += a * static_cast<double>(x[i]);
}

void axpy_f64(double* y, double a, const double* x, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                                _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

void relu_f32(float* y, const float* x, std::size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8)
        _mm256_storeu_ps(y + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
    for (; i < n; ++i) y[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_f64(double* y, const double* x, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_max_pd(_mm256_loadu_pd(x + i), zero));
    for (; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_bwd_f32(float* dx, const float* x, const float* dy, std::size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(x + i), zero, _CMP_GT_OQ);
        _mm256_storeu_ps(dx + i, _mm256_and_ps(_mm256_loadu_ps(dy + i), mask));
    }
    for (; i < n; ++i) dx[i] = x[i] > 0.0f ? dy[i] : 0.0f;
}

void relu_bwd_f64(double* dx, const double* x, const double* dy, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d mask = _mm256_cmp_pd(_mm256_loadu_pd(x + i), zero, _CMP_GT_OQ);
        _mm256_storeu_pd(dx + i, _mm256_and_pd(_mm256_loadu_pd(dy + i), mask));
    }
    for (; i < n; ++i) dx[i] = x[i] > 0.0 ? dy[i] : 0.0;
}

inline __m256d adam_lanes(__m256d pv, double* m, double* v, const double* g,
                          std::size_t i, __m256d b1, __m256d b2, __m256d one_b1,
                          __m256d one_b2, __m256d lrv, __m256d epsv,
                          __m256d c1, __m256d c2) {
    __m256d gv = _mm256_loadu_pd(g + i);
    __m256d mv = _mm256_fmadd_pd(b1, _mm256_loadu_pd(m + i), _mm256_mul_pd(one_b1, gv));
    __m256d vv = _mm256_fmadd_pd(b2, _mm256_loadu_pd(v + i),
                                 _mm256_mul_pd(one_b2, _mm256_mul_pd(gv, gv)));
    _mm256_storeu_pd(m + i, mv);
    _mm256_storeu_pd(v + i, vv);
    __m256d mhat = _mm256_div_pd(mv, c1);
    __m256d vhat = _mm256_div_pd(vv, c2);
    __m256d denom = _mm256_add_pd(_mm256_sqrt_pd(vhat), epsv);
    return _mm256_sub_pd(pv, _mm256_div_pd(_mm256_mul_pd(lrv, mhat), denom));
}

void adam_f32(float* p, double* m, double* v, const double* g, std::size_t n,
              double lr, double beta1, double beta2, double eps,
              double bias1, double bias2) {
    const __m256d b1 = _mm256_set1_pd(beta1), b2 = _mm256_set1_pd(beta2);
    const __m256d ob1 = _mm256_set1_pd(1.0 - beta1), ob2 = _mm256_set1_pd(1.0 - beta2);
    const __m256d lrv = _mm256_set1_pd(lr), epsv = _mm256_set1_pd(eps);
    const __m256d c1 = _mm256_set1_pd(bias1), c2 = _mm256_set1_pd(bias2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d pv = _mm256_cvtps_pd(_mm_loadu_ps(p + i));
        pv = adam_lanes(pv, m, v, g, i, b1, b2, ob1, ob2, lrv, epsv, c1, c2);
        _mm_storeu_ps(p + i, _mm256_cvtpd_ps(pv));
    }
    for (; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        p[i] = static_cast<float>(p[i] - lr * (m[i] / bias1) / (std::sqrt(v[i] / bias2) + eps));
    }
}

void adam_f64(double* p, double* m, double* v, const double* g, std::size_t n,
              double lr, double beta1, double beta2, double eps,
              double bias1, double bias2) {
    const __m256d b1 = _mm256_set1_pd(beta1), b2 = _mm256_set1_pd(beta2);
    const __m256d ob1 = _mm256_set1_pd(1.0 - beta1), ob2 = _mm256_set1_pd(1.0 - beta2);
    const __m256d lrv = _mm256_set1_pd(lr), epsv = _mm256_set1_pd(eps);
    const __m256d c1 = _mm256_set1_pd(bias1), c2 = _mm256_set1_pd(bias2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d pv = _mm256_loadu_pd(p + i);
        pv = adam_lanes(pv, m, v, g, i, b1, b2, ob1, ob2, lrv, epsv, c1, c2);
        _mm256_storeu_pd(p + i, pv);
    }
    for (; i < n; ++i) {
        m[i] = beta1 * m[i] + (1.0 - beta1) * g[i];
        v[i] = beta2 * v[i] + (1.0 - beta2) * g[i] * g[i];
        p[i] -= lr * (m[i] / bias1) / (std::sqrt(v[i] / bias2) + eps);
    }
}

void cvt_f64_to_f32(float* dst, const double* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm_storeu_ps(dst + i, _mm256_cvtpd_ps(_mm256_loadu_pd(src + i)));
    for (; i < n; ++i) dst[i] = static_cast<float>(src[i]);
}

std::complex<double> cdot(const std::complex<double>* a, const std::complex<double>* b,
                          std::size_t n) {
    const double* ap = reinterpret_cast<const double*>(a);
    const double* bp = reinterpret_cast<const double*>(b);
    // real part: sum of lane-wise a*b; imag part: sum of a * swapped(b) with
    // the sign of odd lanes flipped, so lanes hold {ar*bi, -ai*br}.
    const __m256d sign = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    __m256d racc = _mm256_setzero_pd();
    __m256d iacc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d av = _mm256_loadu_pd(ap + 2 * i);
        __m256d bv = _mm256_loadu_pd(bp + 2 * i);
        racc = _mm256_fmadd_pd(av, bv, racc);
        __m256d bsw = _mm256_xor_pd(_mm256_permute_pd(bv, 0x5), sign);
        iacc = _mm256_fmadd_pd(av, bsw, iacc);
    }
    double re = hsum(racc), im = hsum(iacc);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double sum_abs_sq(const std::complex<double>* a, std::size_t n) {
    const double* ap = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d av = _mm256_loadu_pd(ap + 2 * i);
        acc = _mm256_fmadd_pd(av, av, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i)
        s += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
    return s;
}

}  // namespace

const Table& avx2_table() {
    static const Table t{
        "avx2",     dot_f32,      dot_f64,      axpy_f32_acc, axpy_f64,
        relu_f32,   relu_f64,     relu_bwd_f32, relu_bwd_f64, adam_f32,
        adam_f64,   cvt_f64_to_f32, cdot,       sum_abs_sq,
    };
    return t;
}

}  // namespace ncbf::kernels
