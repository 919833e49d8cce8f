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

#include "bifree/complex_matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bifree/errors.h"
#include "bifree/simd/kernels.h"

namespace bifree {

namespace {

void require_same(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.re_[i * n + i] = 1.0;
    }
    return m;
}

std::complex<double> ComplexMatrix::trace() const {
    double r = 0.0;
    double i = 0.0;
    for (std::size_t k = 0; k < n_; ++k) {
        r += re_[k * n_ + k];
        i += im_[k * n_ + k];
    }
    return {r, i};
}

std::complex<double> ComplexMatrix::normalized_trace() const {
    if (n_ == 0) {
        throw ArgumentError("trace of an empty matrix");
    }
    return trace() / static_cast<double>(n_);
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (double &v : out.im_) {
        v = -v;
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out.re_[j * n_ + i] = re_[i * n_ + j];
            out.im_[j * n_ + i] = im_[i * n_ + j];
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    return transpose().conj();
}

void ComplexMatrix::add_identity(std::complex<double> s) {
    for (std::size_t k = 0; k < n_; ++k) {
        re_[k * n_ + k] += s.real();
        im_[k * n_ + k] += s.imag();
    }
}

void ComplexMatrix::add_scaled(const ComplexMatrix &other, std::complex<double> s) {
    require_same(*this, other);
    simd::active_kernels().axpy(re_.size(), s.real(), s.imag(), other.re_.data(), other.im_.data(), re_.data(),
                                im_.data());
}

void ComplexMatrix::scale(std::complex<double> s) {
    simd::active_kernels().scale(re_.size(), s.real(), s.imag(), re_.data(), im_.data());
}

bool ComplexMatrix::is_hermitian() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            if (re_[i * n_ + j] != re_[j * n_ + i] || im_[i * n_ + j] != -im_[j * n_ + i]) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same(a, b);
    const std::size_t n = a.dim();
    const auto &k = simd::active_kernels();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double *ar = a.re_row(i);
        const double *ai = a.im_row(i);
        double *cr = c.re_row(i);
        double *ci = c.im_row(i);
        for (std::size_t l = 0; l < n; ++l) {
            if (ar[l] == 0.0 && ai[l] == 0.0) {
                continue;
            }
            k.axpy(n, ar[l], ai[l], b.re_row(l), b.im_row(l), cr, ci);
        }
    }
    return c;
}

std::complex<double> trace_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same(a, b);
    const std::size_t n = a.dim();
    ComplexMatrix bt = b.transpose();
    const auto &k = simd::active_kernels();
    std::complex<double> total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        total += k.dotu(n, a.re_row(i), a.im_row(i), bt.re_row(i), bt.im_row(i));
    }
    return total;
}

ComplexMatrix kron_conj(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix bc = b.conj();
    const auto &k = simd::active_kernels();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            std::complex<double> s = a(i, j);
            for (std::size_t r = 0; r < nb; ++r) {
                std::size_t row = i * nb + r;
                k.axpy(nb, s.real(), s.imag(), bc.re_row(r), bc.im_row(r), out.re_row(row) + j * nb,
                       out.im_row(row) + j * nb);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same(a, b);
    double worst = 0.0;
    for (std::size_t k = 0; k < a.re().size(); ++k) {
        worst = std::max(worst, std::hypot(a.re()[k] - b.re()[k], a.im()[k] - b.im()[k]));
    }
    return worst;
}

}  // namespace bifree
