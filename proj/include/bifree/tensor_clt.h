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

#ifndef BIFREE_TENSOR_CLT_H
#define BIFREE_TENSOR_CLT_H

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "bifree/cumulants.h"
#include "bifree/partitions.h"
#include "bifree/rational.h"

namespace bifree {

/// Moment data for the legs a and b of S_n = (1 / (delta sqrt n)) sum_k (a_k (x) b_k - lambda^2).
///
/// lambda = phi(a) = phi(b), sigma2 = var(a) = var(b) != 0,
/// delta2 = sigma2 (sigma2 + 2 lambda^2), q = 2 lambda^2 / (sigma2 + 2 lambda^2).
struct TensorCLTInput {
    MomentSeq ms_a;
    MomentSeq ms_b;
    Rational lambda;
    Rational sigma2;
    Rational delta2;
    Rational q;

    /// Derives lambda, sigma2, delta2 and q from the moments. Throws ArgumentError
    /// when the means or variances of the legs differ or the variance is zero.
    static TensorCLTInput from_moments(MomentSeq a, MomentSeq b);

    /// Rechecks every derived field against the moments.
    void validate() const;
};

/// An exact real of the form coefficient * sqrt(radicand). Rational values carry
/// radicand 1; odd moments at finite n may need a square root of 1 / (delta2 n).
struct SurdValue {
    Rational coefficient;
    Rational radicand = 1;

    bool is_rational() const {
        return radicand == 1 || coefficient == 0;
    }
    double approx() const;
    bool operator==(const SurdValue &other) const;
};

/// phi (x) phi of the word Z_{theta(1)} ... Z_{theta(m)} for a colouring with kernel pi.
struct PartitionWeight {
    SetPartition partition;
    Rational weight;
};

enum class Route {
    /// Binomial expansion of Z_k = A_k B_k - lambda^2 with each tensor leg
    /// evaluated as a coloured free moment.
    tensor_factorized,
    /// Bi-free cumulants over alternating vertically split partitions and sign words.
    bifree,
    /// The bi-free route evaluated literally through kappa_bnc_vs for every (tau, s);
    /// slow, kept as a cross-check of the bi-free route.
    bifree_reference,
};

inline constexpr int kDefaultMaxMomentOrder = 8;

/// Caches per-partition weights for one input so that many n can be evaluated.
class TensorMomentEngine {
   public:
    explicit TensorMomentEngine(TensorCLTInput input, int max_order = kDefaultMaxMomentOrder);

    const TensorCLTInput &input() const {
        return input_;
    }

    /// (phi (x) phi)(pi) for every pi in P(m), in restricted-growth-string order.
    const std::vector<PartitionWeight> &weights(int m, Route route);

    /// Sum over P(m) of weight * n (n-1) ... (n-|pi|+1) / n^{m/2}, i.e. the moment
    /// of sqrt(n)^{-1} sum_k Z_k before dividing by delta^m.
    SurdValue raw_moment(int m, std::int64_t n, Route route = Route::tensor_factorized,
                         bool prune_singletons = false);

    /// (phi (x) phi)(S_n^m).
    SurdValue moment(int m, std::int64_t n, Route route = Route::tensor_factorized, bool prune_singletons = false);

   private:
    void check_order(int m) const;
    std::vector<PartitionWeight> tensor_weights(int m);
    std::vector<PartitionWeight> bifree_weights(int m);
    std::vector<PartitionWeight> bifree_reference_weights(int m);

    TensorCLTInput input_;
    int max_order_;
    CumulantSeq kappa_a_;
    CumulantSeq kappa_b_;
    std::map<std::pair<int, Route>, std::vector<PartitionWeight>> cache_;
};

/// (phi (x) phi)(S_n^m) by the tensor-factorized route.
SurdValue exact_moment_Sn(int m, std::int64_t n, const TensorCLTInput &input, int max_order = kDefaultMaxMomentOrder);
/// (phi (x) phi)(S_n^m) by bi-free cumulants.
SurdValue exact_moment_Sn_bifree(int m, std::int64_t n, const TensorCLTInput &input,
                                 int max_order = kDefaultMaxMomentOrder);

/// Limit for centred legs: 0 for odd m, |NC_2(m)| var_a^{m/2} var_b^{m/2} for even m.
Rational centred_limit_moment(int m, const Rational &var_a, const Rational &var_b);

struct ConvergenceRow {
    std::int64_t n = 0;
    SurdValue value;
    Rational limit;
    double gap = 0.0;
};

/// Exact moments of S_n against the mu_q moment M_m for each n.
std::vector<ConvergenceRow> convergence_table(int m, std::span<const std::int64_t> n_values,
                                              const TensorCLTInput &input, int max_order = kDefaultMaxMomentOrder);

namespace legs {

/// lambda + sqrt(variance) s for a standard semicircular s.
MomentSeq shifted_semicircle(const Rational &lambda, const Rational &variance, int max_order);
/// lambda + half_width * eps with eps = +-1 equally likely.
MomentSeq shifted_bernoulli(const Rational &lambda, const Rational &half_width, int max_order);
/// Free Poisson law of rate 1 (every free cumulant equals 1).
MomentSeq free_poisson(int max_order);

}  // namespace legs

}  // namespace bifree

#endif
