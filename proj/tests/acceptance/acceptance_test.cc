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

// Acceptance run: every criterion is evaluated at its stated tolerance and
// wall-clock bound, printing one PASS/FAIL line each. Exit status is non-zero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bifree/bichromatic.h"
#include "bifree/cumulants.h"
#include "bifree/limit_law.h"
#include "bifree/matrix_model.h"
#include "bifree/meanders.h"
#include "bifree/partitions.h"
#include "bifree/tensor_clt.h"

using namespace bifree;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string &why) {
        if (ok) {
            detail = why;
        }
        ok = false;
    }
};

struct Criterion {
    int id;
    const char *title;
    double seconds_allowed;
    std::function<Outcome()> body;
};

std::vector<std::pair<const char *, TensorCLTInput>> reference_inputs() {
    auto semi = legs::shifted_semicircle(Rational(0), Rational(1), 8);
    auto bern = legs::shifted_bernoulli(Rational(1, 2), Rational(1), 8);
    auto a = legs::shifted_semicircle(Rational(1), Rational(1), 8);
    auto b = legs::free_poisson(8);
    return {
        {"centred semicircle", TensorCLTInput::from_moments(semi, semi)},
        {"shifted Bernoulli", TensorCLTInput::from_moments(bern, bern)},
        {"asymmetric", TensorCLTInput::from_moments(a, b)},
    };
}

Outcome exact_second_moment() {
    Outcome o;
    for (const auto &[name, in] : reference_inputs()) {
        for (int n = 1; n <= 50; ++n) {
            auto v = exact_moment_Sn(2, n, in);
            if (!(v.coefficient == 1 && v.radicand == 1)) {
                o.fail(std::string(name) + " n=" + std::to_string(n) + " gives " + to_string(v.coefficient));
            }
        }
    }
    o.detail = o.ok ? "150 exact values equal 1" : o.detail;
    return o;
}

Outcome dual_route_clt() {
    Outcome o;
    int checked = 0;
    for (const auto &[name, in] : reference_inputs()) {
        TensorMomentEngine engine(in);
        for (int m = 1; m <= 6; ++m) {
            for (int n : {1, 2, 3, 5, 8}) {
                auto a = engine.moment(m, n, Route::tensor_factorized);
                auto b = engine.moment(m, n, Route::bifree);
                ++checked;
                if (!(a == b)) {
                    o.fail(std::string(name) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                           to_string(a.coefficient) + " vs " + to_string(b.coefficient));
                }
            }
        }
    }
    o.detail = o.ok ? std::to_string(checked) + " (m, n, input) cells agree exactly" : o.detail;
    return o;
}

Outcome dual_route_limit() {
    Outcome o;
    for (const auto &q : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(9, 10)}) {
        auto rec = mu_q_moments_recurrence(q, 12);
        auto cum = mu_q_moments_cumulant_route(q, 12);
        if (!(rec == cum)) {
            o.fail("routes differ at q=" + to_string(q));
        }
        if (q == 0) {
            for (int k = 1; k <= 12; ++k) {
                Rational expected = k % 2 == 0 ? Rational(static_cast<unsigned long>(catalan(k / 2))) : Rational(0);
                if (rec.at(k) != expected || cum.at(k) != expected) {
                    o.fail("q=0 order " + std::to_string(k) + " is not the Catalan moment");
                }
            }
        }
    }
    o.detail = o.ok ? "K=12 at 4 values of q; q=0 gives Catalan moments" : o.detail;
    return o;
}

Outcome convergence_to_mu_q() {
    Outcome o;
    auto leg = legs::shifted_semicircle(Rational(1), Rational(1), 8);
    auto in = TensorCLTInput::from_moments(leg, leg);
    if (in.q != Rational(2, 3)) {
        o.fail("q is " + to_string(in.q));
        return o;
    }
    Rational m4 = mu_q_moments_recurrence(in.q, 4).at(4);
    if (m4 != 2 + in.q * in.q / 2) {
        o.fail("M_4 = " + to_string(m4) + " differs from 2 + q^2/2");
    }
    TensorMomentEngine engine(in);
    std::ostringstream gaps;
    for (int n : {50, 100, 200, 400, 800}) {
        double gap = std::abs(engine.moment(4, n).approx() - m4.get_d());
        gaps << " n=" << n << ":" << gap;
        if (gap > 10.0 / n) {
            o.fail("n=" + std::to_string(n) + " gap " + std::to_string(gap) + " > 10/n");
        }
    }
    o.detail = o.ok ? "M_4 = " + to_string(m4) + ", gaps" + gaps.str() : o.detail;
    return o;
}

Outcome centred_clt() {
    Outcome o;
    auto leg = legs::shifted_semicircle(Rational(0), Rational(1), 8);
    TensorMomentEngine engine(TensorCLTInput::from_moments(leg, leg));
    std::ostringstream values;
    for (int m = 1; m <= 6; ++m) {
        double limit = m % 2 == 0 ? static_cast<double>(enumerate_pair_noncrossing(m).size()) : 0.0;
        double value = engine.moment(m, 500).approx();
        values << " m=" << m << ":" << value;
        if (std::abs(value - limit) > 0.05) {
            o.fail("m=" + std::to_string(m) + " value " + std::to_string(value) + " vs " + std::to_string(limit));
        }
    }
    o.detail = o.ok ? "n=500" + values.str() : o.detail;
    return o;
}

Outcome meander_combinatorics() {
    Outcome o;
    for (int m = 1; m <= 5; ++m) {
        auto hist = loop_distribution(m);
        std::uint64_t total = 0;
        for (const auto &[c, count] : hist) {
            total += count;
        }
        std::uint64_t cat = catalan(static_cast<unsigned>(m));
        if (total != cat * cat) {
            o.fail("m=" + std::to_string(m) + " total " + std::to_string(total));
        }
        if (hist[m] != cat) {
            o.fail("m=" + std::to_string(m) + " diagonal " + std::to_string(hist[m]));
        }
    }
    int systems = 0;
    for (int m = 1; m <= 4; ++m) {
        for (const auto &p : enumerate_bnc_vs2_alt(2 * m)) {
            auto s = meander_from_bnc(p);
            ++systems;
            if (loop_count(s) != loop_count_traced(s)) {
                o.fail("union-find and tracing disagree on " + to_string(s));
            }
        }
    }
    o.detail = o.ok ? "m<=5 histograms; " + std::to_string(systems) + " systems traced" : o.detail;
    return o;
}

Outcome mobius_cumulant_suite() {
    Outcome o;
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 12);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 1 + trial % 10;
        std::vector<Rational> values;
        for (int i = 0; i < k; ++i) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            values.push_back(r);
        }
        MomentSeq ms(values);
        if (!(moments_from_free_cumulants(free_cumulants_from_moments(ms)) == ms)) {
            o.fail("round trip failed on sequence " + std::to_string(trial));
        }
    }
    for (int n = 1; n <= 7; ++n) {
        std::int64_t expected = static_cast<std::int64_t>(catalan(n - 1)) * (n % 2 == 1 ? 1 : -1);
        if (mobius_nc(SetPartition::singletons(n), SetPartition::full(n)) != expected) {
            o.fail("mu(0_n, 1_n) wrong at n=" + std::to_string(n));
        }
    }
    if (count_bicon_pairs(2) != 1) {
        o.fail("|P2^bicon(2)| != 1");
    }
    o.detail = o.ok ? "100 round trips, K<=10; mu(0_n,1_n) n<=7; |P2^bicon(2)| = 1" : o.detail;
    return o;
}

Outcome matrix_model() {
    Outcome o;
    EnsembleSpec spec{EnsembleKind::gue, 100, 1.0, 0.0};
    SimConfig config;
    config.d = 2;
    config.n = 100;
    config.trials = 200;
    config.seed = 42;
    config.max_moment = 4;
    auto estimates = empirical_moments(config, spec);
    std::vector<double> exact;
    for (const auto &v : predicted_delta_moments(spec, config.d, config.max_moment)) {
        exact.push_back(v.approx());
    }
    auto cmp = compare_to_prediction(estimates, exact, 3.0);
    std::ostringstream zs;
    for (const auto &row : cmp.rows) {
        zs << " z" << row.m << "=" << row.z;
        if (!row.pass) {
            o.fail("m=" + std::to_string(row.m) + " mean " + std::to_string(row.mean) + " exact " +
                   std::to_string(row.exact) + " z " + std::to_string(row.z));
        }
    }

    CounterRng rng(config.seed, 0);
    std::vector<ComplexMatrix> samples;
    for (int j = 0; j < 2 * config.d; ++j) {
        samples.push_back(sample_hermitian(spec, rng, static_cast<std::uint64_t>(j)));
    }
    double worst = 0.0;
    int words = 0;
    for (int len = 1; len <= 4; ++len) {
        int total = 1;
        for (int i = 0; i < len; ++i) {
            total *= static_cast<int>(samples.size());
        }
        for (int code = 0; code < total; ++code) {
            std::vector<int> word;
            for (int i = 0, c = code; i < len; ++i, c /= static_cast<int>(samples.size())) {
                word.push_back(c % static_cast<int>(samples.size()));
            }
            worst = std::max(worst, transpose_trace_check(samples, word));
            ++words;
        }
    }
    if (worst > 1e-10) {
        o.fail("transpose-trace deviation " + std::to_string(worst));
    }
    if (o.ok) {
        std::ostringstream d;
        d << "d=2 n=100 trials=200;" << zs.str() << "; transpose-trace max " << worst << " over " << words << " words";
        o.detail = d.str();
    }
    return o;
}

Outcome structural_counts() {
    Outcome o;
    auto vs = enumerate_bnc_vs_alt(2);
    std::set<SetPartition> got;
    for (const auto &b : vs) {
        got.insert(b.partition());
    }
    std::set<SetPartition> named{parse_partition("1|2|3|4"), parse_partition("1,3|2|4"), parse_partition("1|2,4|3"),
                                 parse_partition("1,3|2,4")};
    if (vs.size() != 4 || got != named) {
        o.fail("BNC_vs^a(2) is not {tau_0, tau_l, tau_r, tau_lr}");
    }
    int chis = 0;
    for (int n = 0; n <= 6; ++n) {
        auto all = enumerate_partitions(n);
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            std::vector<Side> sides;
            for (int k = 0; k < n; ++k) {
                sides.push_back(((mask >> k) & 1U) ? Side::right : Side::left);
            }
            ChiMap chi(sides);
            std::set<SetPartition> filtered;
            for (const auto &p : all) {
                if (is_bnc(p, chi)) {
                    filtered.insert(p);
                }
            }
            std::set<SetPartition> built;
            for (const auto &b : enumerate_bnc(chi)) {
                built.insert(b.partition());
            }
            ++chis;
            if (built.size() != catalan(n) || filtered != built) {
                o.fail("BNC(" + to_string(chi) + ") has " + std::to_string(built.size()) + " built, " +
                       std::to_string(filtered.size()) + " filtered");
            }
        }
    }
    o.detail = o.ok ? "4 named elements; " + std::to_string(chis) + " chi maps with Catalan(n) elements" : o.detail;
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exact second moment of S_n is 1", 1.0, exact_second_moment},
        {2, "tensor and bi-free routes agree", 120.0, dual_route_clt},
        {3, "mu_q recurrence equals cumulant route", 10.0, dual_route_limit},
        {4, "fourth moment converges to mu_q", 60.0, convergence_to_mu_q},
        {5, "centred CLT limits", 60.0, centred_clt},
        {6, "meander loop statistics", 30.0, meander_combinatorics},
        {7, "Moebius and cumulant suite", 30.0, mobius_cumulant_suite},
        {8, "matrix model against exact predictions", 300.0, matrix_model},
        {9, "structural counts", 30.0, structural_counts},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.seconds_allowed) {
            o.fail("took " + std::to_string(elapsed) + " s, bound " + std::to_string(c.seconds_allowed) + " s");
        }
        std::printf("%s criterion %d: %s [%.2f s / %.0f s] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, elapsed,
                    c.seconds_allowed, o.detail.c_str());
        std::fflush(stdout);
        failures += o.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
