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

#include "bifree/limit_law.h"

#include <vector>

#include "bifree/errors.h"
#include "bifree/partitions.h"

namespace bifree {

void LimitLawParams::validate() const {
    if (q < 0 || q >= 1) {
        throw ArgumentError("q must lie in [0, 1), got " + to_string(q));
    }
    if (max_order < 1) {
        throw ArgumentError("max_order must be at least 1");
    }
}

CumulantSeq mu1_free_cumulants(int max_order) {
    std::vector<Rational> out;
    for (int n = 1; n <= max_order; ++n) {
        if (n % 2 != 0) {
            out.emplace_back(0);
            continue;
        }
        Rational half(1, 2);
        out.push_back(2 * pow(half, static_cast<unsigned>(n / 2)) * Rational(count_bicon_pairs(n)));
    }
    return CumulantSeq(std::move(out));
}

CumulantSeq z_free_cumulants(const Rational &q, int max_order) {
    LimitLawParams{q, max_order}.validate();
    std::vector<Rational> out;
    for (int n = 1; n <= max_order; ++n) {
        if (n % 2 != 0) {
            out.emplace_back(0);
        } else if (n == 2) {
            out.emplace_back(1);
        } else {
            Rational half_q = q / 2;
            out.push_back(2 * pow(half_q, static_cast<unsigned>(n / 2)) * Rational(count_bicon_pairs(n)));
        }
    }
    return CumulantSeq(std::move(out));
}

MomentSeq mu_q_moments_recurrence(const Rational &q, int max_order) {
    LimitLawParams{q, max_order}.validate();
    // moments[k] = M_k with M_0 = 1.
    std::vector<Rational> moments(static_cast<std::size_t>(max_order) + 1, Rational(0));
    moments[0] = 1;
    if (max_order >= 2) {
        moments[2] = 1;
    }
    // Sum of M_{k_1} ... M_{k_p} over compositions k_1 + ... + k_p = total, every
    // part at most `total`; only entries already known are touched.
    auto composition_sum = [&](int parts, int total) {
        std::vector<Rational> dp(static_cast<std::size_t>(total) + 1, Rational(0));
        dp[0] = 1;
        for (int p = 0; p < parts; ++p) {
            std::vector<Rational> next(dp.size(), Rational(0));
            for (int a = 0; a <= total; ++a) {
                if (dp[a] == 0) {
                    continue;
                }
                for (int b = 0; a + b <= total; ++b) {
                    next[a + b] += dp[a] * moments[b];
                }
            }
            dp = std::move(next);
        }
        return dp[total];
    };
    for (int n = 4; n <= max_order; n += 2) {
        Rational value = composition_sum(2, n - 2);
        for (int j = 2; 2 * j <= n; ++j) {
            Rational weight = 2 * pow(Rational(q / 2), static_cast<unsigned>(j)) * Rational(count_bicon_pairs(2 * j));
            if (weight == 0) {
                continue;
            }
            value += weight * composition_sum(2 * j, n - 2 * j);
        }
        moments[n] = value;
    }
    return MomentSeq(std::vector<Rational>(moments.begin() + 1, moments.end()));
}

MomentSeq mu_q_moments_cumulant_route(const Rational &q, int max_order) {
    return moments_from_free_cumulants(z_free_cumulants(q, max_order));
}

MomentSeq semicircle_moments(int max_order) {
    std::vector<Rational> out;
    for (int k = 1; k <= max_order; ++k) {
        out.emplace_back(k % 2 == 0 ? Rational(catalan(static_cast<unsigned>(k / 2))) : Rational(0));
    }
    return MomentSeq(std::move(out));
}

}  // namespace bifree
