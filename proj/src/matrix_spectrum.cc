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

#include <Eigen/Dense>
#include <string>

#include "bifree/errors.h"
#include "bifree/matrix_model.h"

namespace bifree {

std::vector<double> delta_spectrum(const SimConfig &config, const EnsembleSpec &spec, std::uint64_t trial) {
    config.validate();
    spec.validate();
    const std::size_t dim = spec.n * spec.n;
    if (dim > kMaxDenseDelta) {
        throw ResourceError("spectrum needs n^2 <= " + std::to_string(kMaxDenseDelta));
    }
    CounterRng rng(config.seed, trial);
    std::vector<ComplexMatrix> w;
    std::vector<double> means;
    for (int j = 0; j < 2 * config.d; ++j) {
        w.push_back(sample_hermitian(spec, rng, static_cast<std::uint64_t>(j)));
        means.push_back(config.means == MeanMode::empirical ? w.back().normalized_trace().real() : spec.lambda);
    }
    ComplexMatrix delta = build_delta(w, means);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = delta(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace bifree
