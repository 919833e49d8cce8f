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

#include <cstdlib>
#include <string_view>

#include "bifree/simd/kernels.h"

namespace bifree::simd {

namespace {

void axpy_scalar(std::size_t len, double a_re, double a_im, const double *x_re, const double *x_im, double *y_re,
                 double *y_im) {
    for (std::size_t k = 0; k < len; ++k) {
        double xr = x_re[k];
        double xi = x_im[k];
        y_re[k] += a_re * xr - a_im * xi;
        y_im[k] += a_re * xi + a_im * xr;
    }
}

std::complex<double> dotu_scalar(std::size_t len, const double *x_re, const double *x_im, const double *y_re,
                                 const double *y_im) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        re += x_re[k] * y_re[k] - x_im[k] * y_im[k];
        im += x_re[k] * y_im[k] + x_im[k] * y_re[k];
    }
    return {re, im};
}

void scale_scalar(std::size_t len, double a_re, double a_im, double *x_re, double *x_im) {
    for (std::size_t k = 0; k < len; ++k) {
        double xr = x_re[k];
        double xi = x_im[k];
        x_re[k] = a_re * xr - a_im * xi;
        x_im[k] = a_re * xi + a_im * xr;
    }
}

const KernelTable kScalar{"scalar", axpy_scalar, dotu_scalar, scale_scalar};

}  // namespace

const KernelTable &scalar_kernels() {
    return kScalar;
}

#if !defined(BIFREE_HAVE_AVX2)
const KernelTable *avx2_kernels() {
    return nullptr;
}
#endif

const KernelTable &active_kernels() {
    static const KernelTable &chosen = [] () -> const KernelTable & {
        const char *env = std::getenv("BIFREE_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar") {
            return scalar_kernels();
        }
        if (const KernelTable *fast = avx2_kernels()) {
            return *fast;
        }
        return scalar_kernels();
    }();
    return chosen;
}

}  // namespace bifree::simd
