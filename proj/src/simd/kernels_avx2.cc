// Copyright 2026 The bifree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Built with -mavx2 -mfma; entered only after a runtime CPU check.

#include <immintrin.h>

#include "bifree/simd/kernels.h"

namespace bifree::simd {

namespace {

void axpy_avx2(std::size_t len, double a_re, double a_im, const double *x_re, const double *x_im, double *y_re,
               double *y_im) {
    const __m256d ar = _mm256_set1_pd(a_re);
    const __m256d ai = _mm256_set1_pd(a_im);
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d xr = _mm256_loadu_pd(x_re + k);
        __m256d xi = _mm256_loadu_pd(x_im + k);
        __m256d yr = _mm256_loadu_pd(y_re + k);
        __m256d yi = _mm256_loadu_pd(y_im + k);
        yr = _mm256_fmadd_pd(ar, xr, yr);
        yr = _mm256_fnmadd_pd(ai, xi, yr);
        yi = _mm256_fmadd_pd(ar, xi, yi);
        yi = _mm256_fmadd_pd(ai, xr, yi);
        _mm256_storeu_pd(y_re + k, yr);
        _mm256_storeu_pd(y_im + k, yi);
    }
    for (; k < len; ++k) {
        double xr = x_re[k];
        double xi = x_im[k];
        y_re[k] += a_re * xr - a_im * xi;
        y_im[k] += a_re * xi + a_im * xr;
    }
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

std::complex<double> dotu_avx2(std::size_t len, const double *x_re, const double *x_im, const double *y_re,
                               const double *y_im) {
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d xr = _mm256_loadu_pd(x_re + k);
        __m256d xi = _mm256_loadu_pd(x_im + k);
        __m256d yr = _mm256_loadu_pd(y_re + k);
        __m256d yi = _mm256_loadu_pd(y_im + k);
        re = _mm256_fmadd_pd(xr, yr, re);
        re = _mm256_fnmadd_pd(xi, yi, re);
        im = _mm256_fmadd_pd(xr, yi, im);
        im = _mm256_fmadd_pd(xi, yr, im);
    }
    double sr = hsum(re);
    double si = hsum(im);
    for (; k < len; ++k) {
        sr += x_re[k] * y_re[k] - x_im[k] * y_im[k];
        si += x_re[k] * y_im[k] + x_im[k] * y_re[k];
    }
    return {sr, si};
}

void scale_avx2(std::size_t len, double a_re, double a_im, double *x_re, double *x_im) {
    const __m256d ar = _mm256_set1_pd(a_re);
    const __m256d ai = _mm256_set1_pd(a_im);
    std::size_t k = 0;
    for (; k + 4 <= len; k += 4) {
        __m256d xr = _mm256_loadu_pd(x_re + k);
        __m256d xi = _mm256_loadu_pd(x_im + k);
        __m256d nr = _mm256_fmsub_pd(ar, xr, _mm256_mul_pd(ai, xi));
        __m256d ni = _mm256_fmadd_pd(ar, xi, _mm256_mul_pd(ai, xr));
        _mm256_storeu_pd(x_re + k, nr);
        _mm256_storeu_pd(x_im + k, ni);
    }
    for (; k < len; ++k) {
        double xr = x_re[k];
        double xi = x_im[k];
        x_re[k] = a_re * xr - a_im * xi;
        x_im[k] = a_re * xi + a_im * xr;
    }
}

const KernelTable kAvx2{"avx2", axpy_avx2, dotu_avx2, scale_avx2};

}  // namespace

const KernelTable *avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &kAvx2 : nullptr;
}

}  // namespace bifree::simd
