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

#ifndef BIFREE_SIMD_KERNELS_H
#define BIFREE_SIMD_KERNELS_H

#include <complex>
#include <cstddef>

namespace bifree::simd {

// Complex vectors are passed as separate real and imaginary planes.

/// y += a x
using AxpyFn = void (*)(std::size_t len, double a_re, double a_im, const double *x_re, const double *x_im,
                        double *y_re, double *y_im);
/// sum_k x_k y_k (no conjugation)
using DotuFn = std::complex<double> (*)(std::size_t len, const double *x_re, const double *x_im, const double *y_re,
                                        const double *y_im);
/// x *= a
using ScaleFn = void (*)(std::size_t len, double a_re, double a_im, double *x_re, double *x_im);

struct KernelTable {
    const char *name;
    AxpyFn axpy;
    DotuFn dotu;
    ScaleFn scale;
};

const KernelTable &scalar_kernels();

/// AVX2+FMA variants, or nullptr when not compiled in or not supported by this CPU.
const KernelTable *avx2_kernels();

/// The table used by the matrix code: the best supported variant, unless the
/// environment variable BIFREE_SIMD=scalar forces the reference kernels.
/// Chosen once, on first use.
const KernelTable &active_kernels();

}  // namespace bifree::simd

#endif
