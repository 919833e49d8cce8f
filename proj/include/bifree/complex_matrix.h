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

#ifndef BIFREE_COMPLEX_MATRIX_H
#define BIFREE_COMPLEX_MATRIX_H

#include <complex>
#include <cstddef>
#include <vector>

namespace bifree {

/// Dense square complex matrix, row-major, with the real and imaginary parts in
/// separate planes so that rows feed the vector kernels directly.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), re_(n * n, 0.0), im_(n * n, 0.0) {
    }

    static ComplexMatrix identity(std::size_t n);

    std::size_t dim() const {
        return n_;
    }
    std::complex<double> operator()(std::size_t i, std::size_t j) const {
        return {re_[i * n_ + j], im_[i * n_ + j]};
    }
    void set(std::size_t i, std::size_t j, std::complex<double> v) {
        re_[i * n_ + j] = v.real();
        im_[i * n_ + j] = v.imag();
    }

    double *re_row(std::size_t i) {
        return re_.data() + i * n_;
    }
    double *im_row(std::size_t i) {
        return im_.data() + i * n_;
    }
    const double *re_row(std::size_t i) const {
        return re_.data() + i * n_;
    }
    const double *im_row(std::size_t i) const {
        return im_.data() + i * n_;
    }
    const std::vector<double> &re() const {
        return re_;
    }
    const std::vector<double> &im() const {
        return im_;
    }

    /// Unnormalized trace.
    std::complex<double> trace() const;
    /// tr = Tr / dim.
    std::complex<double> normalized_trace() const;

    ComplexMatrix conj() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    /// this += s I
    void add_identity(std::complex<double> s);
    /// this += s other
    void add_scaled(const ComplexMatrix &other, std::complex<double> s);
    void scale(std::complex<double> s);

    /// Exact comparison with the adjoint, entry by entry.
    bool is_hermitian() const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<double> re_;
    std::vector<double> im_;
};

/// Throws ArgumentError on a dimension mismatch.
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);
/// Tr(a b) without forming the product.
std::complex<double> trace_product(const ComplexMatrix &a, const ComplexMatrix &b);
/// a (x) conj(b), dimension dim(a) dim(b); index (i, k) maps to i dim(b) + k.
ComplexMatrix kron_conj(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace bifree

#endif
