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

#include "bifree/matrix_model.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "bifree/errors.h"

namespace bifree {

namespace {

constexpr std::size_t kMaxWordProducts = std::size_t{1} << 14;

std::vector<double> leg_means(const SimConfig &config, const EnsembleSpec &spec,
                              const std::vector<ComplexMatrix> &w) {
    std::vector<double> means(w.size(), spec.lambda);
    if (config.means == MeanMode::empirical) {
        for (std::size_t j = 0; j < w.size(); ++j) {
            means[j] = w[j].normalized_trace().real();
        }
    }
    return means;
}

std::vector<ComplexMatrix> sample_all(const SimConfig &config, const EnsembleSpec &spec, std::uint64_t trial) {
    CounterRng rng(config.seed, trial);
    std::vector<ComplexMatrix> w;
    w.reserve(2 * static_cast<std::size_t>(config.d));
    for (int j = 0; j < 2 * config.d; ++j) {
        w.push_back(sample_hermitian(spec, rng, static_cast<std::uint64_t>(j)));
    }
    return w;
}

// Normalized traces of every word of length 1..max_len in `letters`, indexed
// per length by the base-d number of the word (first letter most significant).
std::vector<std::vector<std::complex<double>>> word_traces(std::span<const ComplexMatrix> letters, int max_len) {
    const std::size_t d = letters.size();
    const double n = static_cast<double>(letters[0].dim());
    std::vector<std::vector<std::complex<double>>> traces(max_len + 1);
    std::vector<ComplexMatrix> prefixes(letters.begin(), letters.end());
    traces[1].resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        traces[1][j] = letters[j].normalized_trace();
    }
    for (int len = 2; len <= max_len; ++len) {
        traces[len].resize(prefixes.size() * d);
        std::vector<ComplexMatrix> next;
        if (len < max_len) {
            next.reserve(prefixes.size() * d);
        }
        for (std::size_t p = 0; p < prefixes.size(); ++p) {
            for (std::size_t j = 0; j < d; ++j) {
                if (len < max_len) {
                    next.push_back(multiply(prefixes[p], letters[j]));
                    traces[len][p * d + j] = next.back().normalized_trace();
                } else {
                    traces[len][p * d + j] = trace_product(prefixes[p], letters[j]) / n;
                }
            }
        }
        prefixes = std::move(next);
    }
    return traces;
}

std::vector<double> factorized_moments(const SimConfig &config, const std::vector<ComplexMatrix> &w,
                                       const std::vector<double> &means) {
    const int d = config.d;
    const int mmax = config.max_moment;
    std::span<const ComplexMatrix> all(w);
    auto tx = word_traces(all.subspan(0, d), mmax);
    auto ty = word_traces(all.subspan(d, d), mmax);
    // tr(T^k) with T = sum_j X_j (x) conj(Y_j).
    std::vector<std::complex<double>> power_trace(mmax + 1);
    power_trace[0] = 1.0;
    for (int k = 1; k <= mmax; ++k) {
        std::complex<double> s = 0.0;
        for (std::size_t idx = 0; idx < tx[k].size(); ++idx) {
            s += tx[k][idx] * std::conj(ty[k][idx]);
        }
        power_trace[k] = s;
    }
    double shift = 0.0;
    for (int j = 0; j < d; ++j) {
        shift += means[j] * means[j + d];
    }
    std::vector<double> out;
    for (int m = 1; m <= mmax; ++m) {
        std::complex<double> s = 0.0;
        double binom = 1.0;
        for (int k = m; k >= 0; --k) {
            s += binom * std::pow(-shift, m - k) * power_trace[k];
            binom = binom * k / (m - k + 1);
        }
        out.push_back(s.real() / std::pow(static_cast<double>(d), 0.5 * m));
    }
    return out;
}

std::vector<double> dense_moments(const SimConfig &config, const std::vector<ComplexMatrix> &w,
                                  const std::vector<double> &means) {
    ComplexMatrix delta = build_delta(w, means);
    const double dim = static_cast<double>(delta.dim());
    std::vector<double> out;
    out.push_back(delta.normalized_trace().real());
    ComplexMatrix power = delta;
    for (int m = 2; m <= config.max_moment; ++m) {
        if (m == config.max_moment) {
            out.push_back(trace_product(power, delta).real() / dim);
        } else {
            power = multiply(power, delta);
            out.push_back(power.normalized_trace().real());
        }
    }
    return out;
}

double frobenius_normalized(const ComplexMatrix &x) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.re().size(); ++k) {
        s += x.re()[k] * x.re()[k] + x.im()[k] * x.im()[k];
    }
    return std::sqrt(s / static_cast<double>(x.dim()));
}

}  // namespace

void EnsembleSpec::validate() const {
    if (n == 0) {
        throw ArgumentError("matrix dimension n must be at least 1");
    }
    if (!std::isfinite(sigma) || sigma < 0) {
        throw ArgumentError("sigma must be finite and non-negative");
    }
    if (!std::isfinite(lambda)) {
        throw ArgumentError("lambda must be finite");
    }
}

void SimConfig::validate() const {
    if (d < 1) {
        throw ArgumentError("d must be at least 1");
    }
    if (n == 0) {
        throw ArgumentError("n must be at least 1");
    }
    if (trials < 1) {
        throw ArgumentError("trials must be at least 1");
    }
    if (max_moment < 1) {
        throw ArgumentError("max_moment must be at least 1");
    }
    if (threads < 1) {
        throw ArgumentError("threads must be at least 1");
    }
}

ComplexMatrix sample_hermitian(const EnsembleSpec &spec, const CounterRng &rng, std::uint64_t matrix) {
    spec.validate();
    const std::size_t n = spec.n;
    const double diag_sd = spec.sigma / std::sqrt(static_cast<double>(n));
    const double off_sd = spec.sigma / std::sqrt(2.0 * static_cast<double>(n));
    ComplexMatrix w(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto [g1, g2] = rng.normal_pair(matrix, i * n + j);
            if (i == j) {
                w.set(i, i, {diag_sd * g1 + spec.lambda, 0.0});
            } else {
                double re = off_sd * g1;
                double im = off_sd * g2;
                w.set(i, j, {re, im});
                w.set(j, i, {re, -im});
            }
        }
    }
    return w;
}

ComplexMatrix build_delta(std::span<const ComplexMatrix> w, std::span<const double> means) {
    if (w.empty() || w.size() % 2 != 0) {
        throw ArgumentError("build_delta needs 2d matrices, got " + std::to_string(w.size()));
    }
    if (means.size() != w.size()) {
        throw ArgumentError("build_delta needs one mean per matrix");
    }
    const std::size_t d = w.size() / 2;
    for (const auto &m : w) {
        if (m.dim() != w[0].dim()) {
            throw ArgumentError("build_delta: matrix dimensions differ");
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix delta;
    double shift = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        ComplexMatrix term = kron_conj(w[j], w[j + d]);
        if (j == 0) {
            term.scale(scale);
            delta = std::move(term);
        } else {
            delta.add_scaled(term, scale);
        }
        shift += means[j] * means[j + d];
    }
    if (shift != 0.0) {
        delta.add_identity(-scale * shift);
    }
    return delta;
}

ComplexMatrix build_kraus(std::span<const ComplexMatrix> kraus) {
    if (kraus.empty()) {
        throw ArgumentError("build_kraus needs at least one operator");
    }
    ComplexMatrix out;
    for (std::size_t j = 0; j < kraus.size(); ++j) {
        if (kraus[j].dim() != kraus[0].dim()) {
            throw ArgumentError("build_kraus: matrix dimensions differ");
        }
        ComplexMatrix term = kron_conj(kraus[j], kraus[j]);
        if (j == 0) {
            out = std::move(term);
        } else {
            out.add_scaled(term, 1.0);
        }
    }
    return out;
}

std::vector<double> trial_moments(const SimConfig &config, const EnsembleSpec &spec, std::uint64_t trial,
                                  MomentStrategy strategy) {
    config.validate();
    if (strategy == MomentStrategy::automatic) {
        strategy = spec.n * spec.n <= kDenseDeltaLimit ? MomentStrategy::dense : MomentStrategy::factorized;
    }
    if (strategy == MomentStrategy::dense && spec.n * spec.n > kMaxDenseDelta) {
        throw ResourceError("dense Delta needs n^2 <= " + std::to_string(kMaxDenseDelta));
    }
    auto w = sample_all(config, spec, trial);
    auto means = leg_means(config, spec, w);
    if (strategy == MomentStrategy::dense) {
        return dense_moments(config, w, means);
    }
    return factorized_moments(config, w, means);
}

std::vector<MomentEstimate> empirical_moments(const SimConfig &config, const EnsembleSpec &spec) {
    config.validate();
    spec.validate();
    if (config.n != spec.n) {
        throw ArgumentError("SimConfig.n and EnsembleSpec.n differ");
    }
    if (spec.n * spec.n * static_cast<std::size_t>(config.max_moment) > kMaxDeltaWork) {
        throw ResourceError("n^2 * max_moment exceeds " + std::to_string(kMaxDeltaWork));
    }
    std::size_t products = 0;
    std::size_t level = 1;
    for (int k = 2; k < config.max_moment; ++k) {
        level *= static_cast<std::size_t>(config.d);
        products += level * static_cast<std::size_t>(config.d);
        if (products > kMaxWordProducts) {
            throw ResourceError("too many word products for d = " + std::to_string(config.d) +
                                " and max_moment = " + std::to_string(config.max_moment));
        }
    }

    const auto trials = static_cast<std::size_t>(config.trials);
    std::vector<std::vector<double>> per_trial(trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t t = next++; t < trials; t = next++) {
            try {
                per_trial[t] = trial_moments(config, spec, t, config.strategy);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const int workers = std::min<int>(config.threads, config.trials);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<MomentEstimate> out;
    for (int m = 1; m <= config.max_moment; ++m) {
        double sum = 0.0;
        for (const auto &row : per_trial) {
            sum += row[m - 1];
        }
        double mean = sum / static_cast<double>(trials);
        double se = std::numeric_limits<double>::quiet_NaN();
        if (trials > 1) {
            double ss = 0.0;
            for (const auto &row : per_trial) {
                double dev = row[m - 1] - mean;
                ss += dev * dev;
            }
            se = std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
        }
        out.push_back(MomentEstimate{m, mean, se});
    }
    return out;
}

double transpose_trace_check(std::span<const ComplexMatrix> samples, std::span<const int> word) {
    if (word.empty()) {
        return 0.0;
    }
    for (int j : word) {
        if (j < 0 || static_cast<std::size_t>(j) >= samples.size()) {
            throw ArgumentError("word index " + std::to_string(j) + " out of range");
        }
    }
    const std::size_t k = word.size();
    ComplexMatrix lhs = samples[word[k - 1]];
    for (std::size_t i = k - 1; i-- > 0;) {
        lhs = multiply(lhs, samples[word[i]]);
    }
    ComplexMatrix rhs = samples[word[0]].conj();
    for (std::size_t i = 1; i < k; ++i) {
        rhs = multiply(rhs, samples[word[i]].conj());
    }
    std::complex<double> a = lhs.normalized_trace();
    std::complex<double> b = rhs.normalized_trace();
    double scale = 1.0;
    for (int j : word) {
        scale *= frobenius_normalized(samples[j]);
    }
    scale = std::max({scale, std::abs(a), std::numeric_limits<double>::min()});
    return std::abs(a - b) / scale;
}

Comparison compare_to_prediction(std::span<const MomentEstimate> estimates, std::span<const double> exact,
                                 double threshold) {
    if (exact.size() < estimates.size()) {
        throw InsufficientDataError("exact predictions cover " + std::to_string(exact.size()) + " orders, " +
                                    std::to_string(estimates.size()) + " estimated");
    }
    Comparison cmp;
    cmp.threshold = threshold;
    cmp.all_pass = true;
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        const auto &e = estimates[i];
        ZScore z;
        z.m = e.m;
        z.mean = e.mean;
        z.std_error = e.std_error;
        z.exact = exact[static_cast<std::size_t>(e.m) - 1];
        double diff = e.mean - z.exact;
        if (std::isnan(e.std_error)) {
            z.z = std::numeric_limits<double>::quiet_NaN();
        } else if (diff == 0.0) {
            z.z = 0.0;
        } else {
            z.z = diff / e.std_error;
        }
        z.pass = std::isfinite(z.z) && std::abs(z.z) <= threshold;
        cmp.all_pass = cmp.all_pass && z.pass;
        cmp.rows.push_back(z);
    }
    return cmp;
}

std::vector<SurdValue> predicted_delta_moments(const EnsembleSpec &spec, int d, int max_moment) {
    spec.validate();
    Rational lambda(spec.lambda);
    Rational sigma(spec.sigma);
    MomentSeq leg = legs::shifted_semicircle(lambda, sigma * sigma, std::max(max_moment, 2));
    TensorMomentEngine engine(TensorCLTInput::from_moments(leg, leg), std::max(max_moment, kDefaultMaxMomentOrder));
    std::vector<SurdValue> out;
    for (int m = 1; m <= max_moment; ++m) {
        out.push_back(engine.raw_moment(m, d));
    }
    return out;
}

}  // namespace bifree
