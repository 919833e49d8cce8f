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

#include "bifree/tensor_clt.h"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "bifree/bichromatic.h"
#include "bifree/errors.h"
#include "bifree/limit_law.h"

namespace bifree {

namespace {

MomentSeq truncate(const MomentSeq &ms, int order) {
    if (ms.max_order() <= order) {
        return ms;
    }
    return MomentSeq(std::vector<Rational>(ms.values().begin(), ms.values().begin() + order));
}

bool is_square(const mpz_class &z) {
    return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

SurdValue make_surd(Rational coefficient, Rational radicand) {
    coefficient.canonicalize();
    radicand.canonicalize();
    if (coefficient == 0 || radicand == 1) {
        return SurdValue{std::move(coefficient), Rational(1)};
    }
    if (is_square(radicand.get_num()) && is_square(radicand.get_den())) {
        mpz_class num = sqrt(radicand.get_num());
        mpz_class den = sqrt(radicand.get_den());
        Rational root(num, den);
        root.canonicalize();
        return SurdValue{coefficient * root, Rational(1)};
    }
    return SurdValue{std::move(coefficient), std::move(radicand)};
}

// Canonical relabelling of a colour word, packed four bits per letter plus the length.
std::uint64_t pattern_key(const int *colours, int length) {
    int seen[16];
    int next = 0;
    std::uint64_t key = static_cast<std::uint64_t>(length);
    for (int i = 0; i < length; ++i) {
        int label = -1;
        for (int j = 0; j < next; ++j) {
            if (seen[j] == colours[i]) {
                label = j;
                break;
            }
        }
        if (label < 0) {
            seen[next] = colours[i];
            label = next++;
        }
        key |= static_cast<std::uint64_t>(label) << (4 * i + 8);
    }
    return key;
}

// Operand word of Z_{theta(1)} ... Z_{theta(m)} over chi_alternating(m) where
// the bits of `scalar_mask` select the factors replaced by (-lambda) (x) lambda.
OperandSpec sign_word(std::span<const int> theta, unsigned scalar_mask, const Rational &lambda) {
    OperandSpec ops;
    ops.reserve(2 * theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        if ((scalar_mask >> k) & 1U) {
            ops.push_back(Operand::constant(Side::left, -lambda));
            ops.push_back(Operand::constant(Side::right, lambda));
        } else {
            ops.push_back(Operand::variable(Side::left, theta[k]));
            ops.push_back(Operand::variable(Side::right, theta[k]));
        }
    }
    return ops;
}

struct HalfSummary {
    std::vector<unsigned> big_blocks;
    unsigned singleton_mask = 0;
};

HalfSummary summarize(const SetPartition &p) {
    HalfSummary s;
    for (const auto &block : p.blocks()) {
        unsigned mask = 0;
        for (int e : block) {
            mask |= 1U << (e - 1);
        }
        if (block.size() == 1) {
            s.singleton_mask |= mask;
        } else {
            s.big_blocks.push_back(mask);
        }
    }
    return s;
}

bool monochromatic(unsigned mask, const std::vector<int> &theta) {
    int colour = -1;
    for (unsigned rest = mask; rest != 0; rest &= rest - 1) {
        int k = std::countr_zero(rest);
        if (colour < 0) {
            colour = theta[k];
        } else if (theta[k] != colour) {
            return false;
        }
    }
    return true;
}

bool has_singleton(const SetPartition &p) {
    for (const auto &block : p.blocks()) {
        if (block.size() == 1) {
            return true;
        }
    }
    return false;
}

}  // namespace

TensorCLTInput TensorCLTInput::from_moments(MomentSeq a, MomentSeq b) {
    if (a.max_order() < 2 || b.max_order() < 2) {
        throw InsufficientDataError("tensor CLT input needs at least two moments per leg");
    }
    TensorCLTInput in;
    in.lambda = a.at(1);
    in.sigma2 = a.at(2) - in.lambda * in.lambda;
    in.delta2 = in.sigma2 * (in.sigma2 + 2 * in.lambda * in.lambda);
    in.ms_a = std::move(a);
    in.ms_b = std::move(b);
    if (in.sigma2 != 0) {
        in.q = 2 * in.lambda * in.lambda / (in.sigma2 + 2 * in.lambda * in.lambda);
    }
    in.validate();
    return in;
}

void TensorCLTInput::validate() const {
    if (ms_a.max_order() < 2 || ms_b.max_order() < 2) {
        throw InsufficientDataError("tensor CLT input needs at least two moments per leg");
    }
    if (ms_a.at(1) != lambda || ms_b.at(1) != lambda) {
        throw ArgumentError("legs must share the mean lambda: phi(a) = " + to_string(ms_a.at(1)) +
                            ", phi(b) = " + to_string(ms_b.at(1)));
    }
    Rational var_a = ms_a.at(2) - lambda * lambda;
    Rational var_b = ms_b.at(2) - lambda * lambda;
    if (var_a != sigma2 || var_b != sigma2) {
        throw ArgumentError("legs must share the variance: var(a) = " + to_string(var_a) +
                            ", var(b) = " + to_string(var_b));
    }
    if (sigma2 == 0) {
        throw ArgumentError("variance must be non-zero");
    }
    if (delta2 != sigma2 * (sigma2 + 2 * lambda * lambda)) {
        throw ArgumentError("delta2 does not match sigma2 (sigma2 + 2 lambda^2)");
    }
    if (q != 2 * lambda * lambda / (sigma2 + 2 * lambda * lambda)) {
        throw ArgumentError("q does not match 2 lambda^2 / (sigma2 + 2 lambda^2)");
    }
    if (q < 0 || q >= 1) {
        throw ArgumentError("q = " + to_string(q) + " lies outside [0, 1)");
    }
}

double SurdValue::approx() const {
    return coefficient.get_d() * std::sqrt(radicand.get_d());
}

bool SurdValue::operator==(const SurdValue &other) const {
    if (sgn(coefficient) != sgn(other.coefficient)) {
        return false;
    }
    return coefficient * coefficient * radicand == other.coefficient * other.coefficient * other.radicand;
}

TensorMomentEngine::TensorMomentEngine(TensorCLTInput input, int max_order)
    : input_(std::move(input)), max_order_(max_order) {
    input_.validate();
    if (max_order_ < 1) {
        throw ArgumentError("max_order must be at least 1");
    }
    kappa_a_ = free_cumulants_from_moments(truncate(input_.ms_a, max_order_));
    kappa_b_ = free_cumulants_from_moments(truncate(input_.ms_b, max_order_));
}

void TensorMomentEngine::check_order(int m) const {
    if (m < 1) {
        throw ArgumentError("moment order must be at least 1");
    }
    if (m > max_order_) {
        throw ResourceError("moment order " + std::to_string(m) + " exceeds the cap " + std::to_string(max_order_));
    }
    int available = std::min(input_.ms_a.max_order(), input_.ms_b.max_order());
    if (m > available) {
        throw InsufficientDataError("moment order " + std::to_string(m) + " needs " + std::to_string(m) +
                                    " moments per leg, only " + std::to_string(available) + " given");
    }
}

const std::vector<PartitionWeight> &TensorMomentEngine::weights(int m, Route route) {
    check_order(m);
    auto key = std::make_pair(m, route);
    auto it = cache_.find(key);
    if (it != cache_.end()) {
        return it->second;
    }
    std::vector<PartitionWeight> w;
    switch (route) {
        case Route::tensor_factorized:
            w = tensor_weights(m);
            break;
        case Route::bifree:
            w = bifree_weights(m);
            break;
        case Route::bifree_reference:
            w = bifree_reference_weights(m);
            break;
    }
    return cache_.emplace(key, std::move(w)).first->second;
}

std::vector<PartitionWeight> TensorMomentEngine::tensor_weights(int m) {
    const Rational minus_l2 = -input_.lambda * input_.lambda;
    std::vector<Rational> scalar_power(m + 1);
    scalar_power[0] = 1;
    for (int k = 1; k <= m; ++k) {
        scalar_power[k] = scalar_power[k - 1] * minus_l2;
    }
    std::unordered_map<std::uint64_t, Rational> leg_product;
    std::vector<PartitionWeight> out;
    int word[16];
    for_each_partition(m, [&](const SetPartition &pi) {
        const auto &theta = pi.rgs();
        Rational total = 0;
        for (unsigned subset = 0; subset < (1U << m); ++subset) {
            int length = 0;
            for (int k = 0; k < m; ++k) {
                if ((subset >> k) & 1U) {
                    word[length++] = theta[k];
                }
            }
            std::uint64_t key = pattern_key(word, length);
            auto found = leg_product.find(key);
            if (found == leg_product.end()) {
                std::span<const int> colours(word, static_cast<std::size_t>(length));
                Rational value = free_coloured_moment(colours, kappa_a_) * free_coloured_moment(colours, kappa_b_);
                found = leg_product.emplace(key, std::move(value)).first;
            }
            if (found->second != 0) {
                total += scalar_power[m - length] * found->second;
            }
        }
        out.push_back(PartitionWeight{pi, std::move(total)});
    });
    return out;
}

std::vector<PartitionWeight> TensorMomentEngine::bifree_weights(int m) {
    const auto &nc = noncrossing_cached(m);
    std::vector<HalfSummary> halves;
    std::vector<Rational> big_a;
    std::vector<Rational> big_b;
    for (const auto &p : nc) {
        halves.push_back(summarize(p));
        Rational pa = 1;
        Rational pb = 1;
        for (const auto &block : p.blocks()) {
            if (block.size() > 1) {
                pa *= kappa_a_.at(static_cast<int>(block.size()));
                pb *= kappa_b_.at(static_cast<int>(block.size()));
            }
        }
        big_a.push_back(std::move(pa));
        big_b.push_back(std::move(pb));
    }

    // Sign words only touch positions that are singletons on both faces; a scalar
    // inside a larger block kills the cumulant. For singleton masks of sizes
    // (sl, sr) sharing c positions, the sum over scalar subsets e of the shared
    // positions groups by |e| = j with binomial multiplicity.
    const Rational &k1a = kappa_a_.at(1);
    const Rational &k1b = kappa_b_.at(1);
    const Rational left_scalar = -input_.lambda;
    const Rational &right_scalar = input_.lambda;
    auto power = [](const Rational &base, int e) { return pow(base, static_cast<unsigned>(e)); };
    std::vector<Rational> sign_sum((m + 1) * (m + 1) * (m + 1));
    std::vector<bool> sign_ready(sign_sum.size(), false);
    auto sign_factor = [&](int sl, int sr, int c) -> const Rational & {
        std::size_t idx = (static_cast<std::size_t>(sl) * (m + 1) + sr) * (m + 1) + c;
        if (!sign_ready[idx]) {
            std::vector<std::uint64_t> count(c + 1, 0);
            for (unsigned e = 0; e < (1U << c); ++e) {
                ++count[std::popcount(e)];
            }
            Rational s = 0;
            for (int j = 0; j <= c; ++j) {
                s += Rational(static_cast<unsigned long>(count[j])) * power(left_scalar, j) * power(k1a, sl - j) *
                     power(right_scalar, j) * power(k1b, sr - j);
            }
            sign_sum[idx] = std::move(s);
            sign_ready[idx] = true;
        }
        return sign_sum[idx];
    };

    std::vector<PartitionWeight> out;
    std::vector<Rational> agg_left(1U << m);
    std::vector<Rational> agg_right(1U << m);
    std::vector<char> seen(1U << m, 0);
    std::vector<unsigned> used;
    for_each_partition(m, [&](const SetPartition &pi) {
        const auto &theta = pi.rgs();
        for (unsigned mask : used) {
            agg_left[mask] = 0;
            agg_right[mask] = 0;
            seen[mask] = 0;
        }
        used.clear();
        for (std::size_t i = 0; i < nc.size(); ++i) {
            bool ok = true;
            for (unsigned mask : halves[i].big_blocks) {
                if (!monochromatic(mask, theta)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            unsigned s = halves[i].singleton_mask;
            if (!seen[s]) {
                seen[s] = 1;
                used.push_back(s);
            }
            agg_left[s] += big_a[i];
            agg_right[s] += big_b[i];
        }
        Rational total = 0;
        for (unsigned ml : used) {
            if (agg_left[ml] == 0) {
                continue;
            }
            for (unsigned mr : used) {
                if (agg_right[mr] == 0) {
                    continue;
                }
                const Rational &f = sign_factor(std::popcount(ml), std::popcount(mr), std::popcount(ml & mr));
                if (f != 0) {
                    total += agg_left[ml] * agg_right[mr] * f;
                }
            }
        }
        out.push_back(PartitionWeight{pi, std::move(total)});
    });
    return out;
}

std::vector<PartitionWeight> TensorMomentEngine::bifree_reference_weights(int m) {
    auto taus = enumerate_bnc_vs_alt(m);
    std::vector<PartitionWeight> out;
    for_each_partition(m, [&](const SetPartition &pi) {
        const auto &theta = pi.rgs();
        Rational total = 0;
        for (const auto &tau : taus) {
            // tau must be colourable by theta' : position 2k-1 and 2k both carry theta(k).
            bool refines = true;
            for (const auto &block : tau.partition().blocks()) {
                int colour = theta[(block.front() - 1) / 2];
                for (int p : block) {
                    if (theta[(p - 1) / 2] != colour) {
                        refines = false;
                        break;
                    }
                }
                if (!refines) {
                    break;
                }
            }
            if (!refines) {
                continue;
            }
            for (unsigned e = 0; e < (1U << m); ++e) {
                total += kappa_bnc_vs(tau, sign_word(theta, e, input_.lambda), kappa_a_, kappa_b_);
            }
        }
        out.push_back(PartitionWeight{pi, std::move(total)});
    });
    return out;
}

SurdValue TensorMomentEngine::raw_moment(int m, std::int64_t n, Route route, bool prune_singletons) {
    if (n < 1) {
        throw ArgumentError("n must be at least 1");
    }
    const auto &w = weights(m, route);
    Rational sum = 0;
    for (const auto &pw : w) {
        if (pw.weight == 0) {
            continue;
        }
        if (prune_singletons && has_singleton(pw.partition)) {
            continue;
        }
        sum += pw.weight * falling_factorial(n, static_cast<std::int64_t>(pw.partition.block_count()));
    }
    Rational nn(static_cast<long>(n));
    if (m % 2 == 0) {
        return make_surd(sum / pow(nn, static_cast<unsigned>(m / 2)), Rational(1));
    }
    return make_surd(sum / pow(nn, static_cast<unsigned>((m - 1) / 2)), Rational(1) / nn);
}

SurdValue TensorMomentEngine::moment(int m, std::int64_t n, Route route, bool prune_singletons) {
    SurdValue raw = raw_moment(m, n, route, prune_singletons);
    const Rational &d2 = input_.delta2;
    if (m % 2 == 0) {
        return make_surd(raw.coefficient / pow(d2, static_cast<unsigned>(m / 2)), Rational(1));
    }
    return make_surd(raw.coefficient / pow(d2, static_cast<unsigned>((m - 1) / 2)), raw.radicand / d2);
}

SurdValue exact_moment_Sn(int m, std::int64_t n, const TensorCLTInput &input, int max_order) {
    TensorMomentEngine engine(input, max_order);
    return engine.moment(m, n, Route::tensor_factorized);
}

SurdValue exact_moment_Sn_bifree(int m, std::int64_t n, const TensorCLTInput &input, int max_order) {
    TensorMomentEngine engine(input, max_order);
    return engine.moment(m, n, Route::bifree);
}

Rational centred_limit_moment(int m, const Rational &var_a, const Rational &var_b) {
    if (m < 1) {
        throw ArgumentError("moment order must be at least 1");
    }
    if (m % 2 != 0) {
        return Rational(0);
    }
    auto half = static_cast<unsigned>(m / 2);
    return Rational(static_cast<unsigned long>(catalan(half))) * pow(var_a, half) * pow(var_b, half);
}

std::vector<ConvergenceRow> convergence_table(int m, std::span<const std::int64_t> n_values,
                                              const TensorCLTInput &input, int max_order) {
    TensorMomentEngine engine(input, max_order);
    Rational limit = mu_q_moments_recurrence(input.q, m).at(m);
    std::vector<ConvergenceRow> rows;
    for (std::int64_t n : n_values) {
        ConvergenceRow row;
        row.n = n;
        row.value = engine.moment(m, n);
        row.limit = limit;
        row.gap = std::abs(row.value.approx() - limit.get_d());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace legs {

MomentSeq shifted_semicircle(const Rational &lambda, const Rational &variance, int max_order) {
    std::vector<Rational> kappa(std::max(max_order, 0), Rational(0));
    if (max_order >= 1) {
        kappa[0] = lambda;
    }
    if (max_order >= 2) {
        kappa[1] = variance;
    }
    return moments_from_free_cumulants(CumulantSeq(std::move(kappa)));
}

MomentSeq shifted_bernoulli(const Rational &lambda, const Rational &half_width, int max_order) {
    std::vector<Rational> out;
    for (int k = 1; k <= max_order; ++k) {
        Rational total = 0;
        Rational binom = 1;
        for (int j = 0; j <= k; ++j) {
            if (j % 2 == 0) {
                total += binom * pow(lambda, static_cast<unsigned>(k - j)) * pow(half_width, static_cast<unsigned>(j));
            }
            binom = binom * (k - j) / (j + 1);
        }
        out.push_back(std::move(total));
    }
    return MomentSeq(std::move(out));
}

MomentSeq free_poisson(int max_order) {
    return moments_from_free_cumulants(CumulantSeq(std::vector<Rational>(std::max(max_order, 0), Rational(1))));
}

}  // namespace legs

}  // namespace bifree
