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

#ifndef BIFREE_MATRIX_MODEL_H
#define BIFREE_MATRIX_MODEL_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bifree/complex_matrix.h"
#include "bifree/counter_rng.h"
#include "bifree/tensor_clt.h"

namespace bifree {

enum class EnsembleKind { gue };

/// sample = GUE with entry variance sigma^2 / n, plus lambda I.
struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::gue;
    std::size_t n = 0;
    double sigma = 1.0;
    double lambda = 0.0;

    /// Throws ArgumentError for n = 0 or a negative or non-finite scale.
    void validate() const;
};

/// How E(tr W_j) is filled in when forming Delta.
enum class MeanMode {
    /// The ensemble's exact mean lambda.
    analytic,
    /// The trace of the sampled W_j itself. Biased: every trial then has tr(Delta) = 0
    /// and the higher moments shrink accordingly.
    empirical,
};

enum class MomentStrategy {
    /// dense when n^2 <= kDenseDeltaLimit, factorized otherwise.
    automatic,
    /// Expand (T - C I)^m binomially, T = sum_j X_j (x) conj(Y_j), and use
    /// tr(X (x) conj Y) = tr(X) conj(tr(Y)) on each word; Delta is never formed.
    factorized,
    /// Form the n^2 x n^2 matrix Delta and multiply it out.
    dense,
};

inline constexpr std::size_t kDenseDeltaLimit = 256;
/// Cap on n^2 * max_moment for a simulation.
inline constexpr std::size_t kMaxDeltaWork = std::size_t{1} << 26;
/// Cap on n^2 for forming Delta explicitly (dense strategy, spectrum).
inline constexpr std::size_t kMaxDenseDelta = 4096;

struct SimConfig {
    int d = 1;
    std::size_t n = 0;
    int trials = 1;
    std::uint64_t seed = 0;
    int max_moment = 4;
    int threads = 1;
    MeanMode means = MeanMode::analytic;
    MomentStrategy strategy = MomentStrategy::automatic;

    void validate() const;
};

/// Hermitian by construction: each upper-triangle entry is drawn once and mirrored.
/// Diagonal N(0, sigma^2/n); off-diagonal real and imaginary parts N(0, sigma^2/(2n)).
/// `matrix` selects the random substream within the trial.
ComplexMatrix sample_hermitian(const EnsembleSpec &spec, const CounterRng &rng, std::uint64_t matrix);

/// (1 / sqrt d) sum_j (W_j (x) conj(W_{j+d}) - means[j] means[j+d] I) for 2d matrices.
ComplexMatrix build_delta(std::span<const ComplexMatrix> w, std::span<const double> means);

/// sum_j K_j (x) conj(K_j).
ComplexMatrix build_kraus(std::span<const ComplexMatrix> kraus);

struct MomentEstimate {
    int m = 0;
    double mean = 0.0;
    /// NaN when only one trial was run.
    double std_error = 0.0;
};

/// tr(Delta^m) for m = 1..max_moment in one trial (normalized trace on n^2 x n^2).
std::vector<double> trial_moments(const SimConfig &config, const EnsembleSpec &spec, std::uint64_t trial,
                                  MomentStrategy strategy);

/// Sample mean and standard error of tr(Delta^m) over config.trials trials.
/// Identical for any thread count. Throws ResourceError past kMaxDeltaWork.
std::vector<MomentEstimate> empirical_moments(const SimConfig &config, const EnsembleSpec &spec);

/// Eigenvalues of Delta for one trial, ascending. Throws ResourceError past kMaxDenseDelta.
std::vector<double> delta_spectrum(const SimConfig &config, const EnsembleSpec &spec, std::uint64_t trial);

/// |tr(X_{j_k} ... X_{j_1}) - tr(conj(X_{j_1}) ... conj(X_{j_k}))|, relative to
/// the larger of |tr(X_{j_k} ... X_{j_1})| and the product of the letters'
/// normalized Frobenius norms. Word entries index into `samples`.
double transpose_trace_check(std::span<const ComplexMatrix> samples, std::span<const int> word);

struct ZScore {
    int m = 0;
    double mean = 0.0;
    double std_error = 0.0;
    double exact = 0.0;
    double z = 0.0;
    bool pass = false;
};

struct Comparison {
    std::vector<ZScore> rows;
    double threshold = 3.0;
    bool all_pass = false;
};

/// z = (mean - exact) / std_error for each estimate; exact[i] pairs with m = i + 1.
/// Throws InsufficientDataError when an estimate has no exact value.
Comparison compare_to_prediction(std::span<const MomentEstimate> estimates, std::span<const double> exact,
                                 double threshold = 3.0);

/// Large-n limit of E tr(Delta^m), m = 1..max_moment: the moments of
/// (1 / sqrt d) sum_{k <= d} (a_k (x) b_k - lambda^2) with both legs
/// semicircular of mean lambda and variance sigma^2.
std::vector<SurdValue> predicted_delta_moments(const EnsembleSpec &spec, int d, int max_moment);

}  // namespace bifree

#endif
