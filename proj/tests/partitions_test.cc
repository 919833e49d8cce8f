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

#include "bifree/partitions.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "bifree/errors.h"
#include "bifree/rational.h"
#include "gtest/gtest.h"

using namespace bifree;

static SetPartition P(const char *text) {
    return parse_partition(text);
}

TEST(set_partition, canonical_form) {
    SetPartition p(4, {{3, 1}, {4}, {2}});
    EXPECT_EQ(to_string(p), "1,3|2|4");
    EXPECT_EQ(p, P("2|4|3,1"));
    EXPECT_EQ(p.rgs(), (std::vector<int>{0, 1, 0, 2}));
    EXPECT_EQ(p.block_of(3), 0);
    EXPECT_EQ(SetPartition::from_labels(std::vector<int>{7, 7, 2, 9}), P("1,2|3|4"));
}

TEST(set_partition, rejects_bad_blocks) {
    EXPECT_THROW(SetPartition(3, {{1, 2}}), ArgumentError);
    EXPECT_THROW(SetPartition(3, {{1, 2}, {2, 3}}), ArgumentError);
    EXPECT_THROW(SetPartition(2, {{1}, {}, {2}}), ArgumentError);
    EXPECT_THROW(SetPartition(2, {{1}, {3}}), ArgumentError);
    EXPECT_THROW(P("1,,2"), ArgumentError);
}

TEST(set_partition, hash_agrees_with_equality) {
    std::unordered_set<SetPartition, SetPartitionHash> seen;
    for (const auto &p : enumerate_partitions(5)) {
        EXPECT_TRUE(seen.insert(p).second);
        EXPECT_FALSE(seen.insert(P(to_string(p).c_str())).second);
    }
}

TEST(enumerate_partitions, bell_numbers) {
    std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n <= 8; ++n) {
        auto all = enumerate_partitions(n);
        EXPECT_EQ(all.size(), bell[n]) << n;
        std::set<SetPartition> distinct(all.begin(), all.end());
        EXPECT_EQ(distinct.size(), all.size());
    }
    EXPECT_EQ(enumerate_partitions(0)[0].block_count(), 0u);
}

TEST(noncrossing, catalan_counts_and_routes_agree) {
    for (int n = 0; n <= 8; ++n) {
        auto filtered = enumerate_noncrossing_filtered(n);
        auto recursive = enumerate_noncrossing_recursive(n);
        std::sort(filtered.begin(), filtered.end());
        std::sort(recursive.begin(), recursive.end());
        EXPECT_EQ(filtered.size(), catalan(n)) << n;
        EXPECT_EQ(filtered, recursive) << n;
        std::size_t by_predicate = 0;
        for (const auto &p : enumerate_partitions(n)) {
            by_predicate += is_noncrossing(p) ? 1 : 0;
        }
        EXPECT_EQ(by_predicate, catalan(n));
    }
    EXPECT_EQ(enumerate_noncrossing(1).size(), 1u);
    EXPECT_EQ(enumerate_noncrossing(4).size(), 14u);
    EXPECT_EQ(enumerate_noncrossing(6).size(), 132u);
    EXPECT_EQ(enumerate_noncrossing(11).size(), catalan(11));
}

TEST(noncrossing, crossing_predicate) {
    EXPECT_TRUE(is_noncrossing(P("1,4|2,3")));
    EXPECT_FALSE(is_noncrossing(P("1,3|2,4")));
    EXPECT_FALSE(is_noncrossing(P("1,4|2,5|3,6")));
    EXPECT_TRUE(is_noncrossing(P("1,5|2,3,4")));
}

TEST(pair_noncrossing, small_cases) {
    EXPECT_EQ(enumerate_pair_noncrossing(2), (std::vector<SetPartition>{P("1,2")}));
    EXPECT_TRUE(enumerate_pair_noncrossing(3).empty());
    auto four = enumerate_pair_noncrossing(4);
    std::set<SetPartition> got(four.begin(), four.end());
    EXPECT_EQ(got, (std::set<SetPartition>{P("1,2|3,4"), P("1,4|2,3")}));
    EXPECT_EQ(enumerate_pair_noncrossing(6).size(), 5u);
    EXPECT_EQ(enumerate_pair_noncrossing(8).size(), 14u);
}

TEST(refinement, examples) {
    EXPECT_TRUE(is_refinement(SetPartition::singletons(3), P("1,3|2")));
    EXPECT_TRUE(is_refinement(P("1,2|3"), P("1,2,3")));
    EXPECT_FALSE(is_refinement(P("1,3|2"), P("1,2|3")));
    EXPECT_THROW(is_refinement(P("1|2"), P("1,2,3")), ArgumentError);
}

TEST(refinement, partial_order_exhaustive) {
    for (int n = 0; n <= 5; ++n) {
        auto all = enumerate_partitions(n);
        for (const auto &a : all) {
            EXPECT_TRUE(is_refinement(a, a));
            for (const auto &b : all) {
                bool ab = is_refinement(a, b);
                if (ab && is_refinement(b, a)) {
                    EXPECT_EQ(a, b);
                }
                if (!ab) {
                    continue;
                }
                for (const auto &c : all) {
                    if (is_refinement(b, c)) {
                        EXPECT_TRUE(is_refinement(a, c));
                    }
                }
            }
        }
    }
}

TEST(mobius_nc, examples) {
    EXPECT_EQ(mobius_nc(P("1,2|3"), P("1,2|3")), 1);
    EXPECT_EQ(mobius_nc(SetPartition::singletons(2), SetPartition::full(2)), -1);
    EXPECT_EQ(mobius_nc(SetPartition::singletons(4), SetPartition::full(4)), -5);
    EXPECT_EQ(mobius_nc(P("1,2|3"), P("1|2,3")), 0);
    EXPECT_THROW(mobius_nc(P("1,3|2,4"), SetPartition::full(4)), ArgumentError);
}

TEST(mobius_nc, bottom_to_top_matches_signed_catalan) {
    for (int n = 1; n <= 7; ++n) {
        std::int64_t expected = static_cast<std::int64_t>(catalan(n - 1)) * ((n % 2 == 1) ? 1 : -1);
        EXPECT_EQ(mobius_nc(SetPartition::singletons(n), SetPartition::full(n)), expected) << n;
    }
}

TEST(mobius_nc, both_recursions_hold) {
    // sum_{pi <= rho <= sigma} mu(rho, sigma) = [pi == sigma] and
    // sum_{pi <= rho <= sigma} mu(pi, rho) = [pi == sigma].
    for (int n = 1; n <= 6; ++n) {
        const auto &nc = noncrossing_cached(n);
        for (const auto &pi : nc) {
            for (const auto &sigma : nc) {
                if (!is_refinement(pi, sigma)) {
                    EXPECT_EQ(mobius_nc(pi, sigma), 0);
                    continue;
                }
                std::int64_t upper = 0;
                std::int64_t lower = 0;
                for (const auto &rho : nc) {
                    if (is_refinement(pi, rho) && is_refinement(rho, sigma)) {
                        upper += mobius_nc(rho, sigma);
                        lower += mobius_nc(pi, rho);
                    }
                }
                std::int64_t delta = pi == sigma ? 1 : 0;
                EXPECT_EQ(upper, delta);
                EXPECT_EQ(lower, delta);
            }
        }
    }
}

TEST(apply_permutation, relabels_elements) {
    std::vector<int> perm{2, 3, 1};
    EXPECT_EQ(apply_permutation(P("1,2|3"), perm), P("2,3|1"));
}

TEST(intersection_graph, examples) {
    auto g = intersection_graph(P("1,2|3,4"));
    EXPECT_EQ(g.vertex_count, 2);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_FALSE(g.is_connected());
    g = intersection_graph(P("1,3|2,4"));
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_TRUE(g.is_connected());
    EXPECT_TRUE(g.is_bipartite());
    g = intersection_graph(P("1,4|2,5|3,6"));
    EXPECT_EQ(g.vertex_count, 3);
    EXPECT_EQ(g.edge_count(), 3u);
    EXPECT_FALSE(g.is_bipartite());
    for (int i = 0; i < g.vertex_count; ++i) {
        EXPECT_FALSE(g.adjacency[i][i]);
        for (int j = 0; j < g.vertex_count; ++j) {
            EXPECT_EQ(g.adjacency[i][j], g.adjacency[j][i]);
        }
    }
}

TEST(classify_pair_partition, examples) {
    auto c = classify_pair_partition(P("1,2"));
    EXPECT_TRUE(c.is_pair && c.is_connected && c.is_bipartite_connected);
    c = classify_pair_partition(P("1,3|2,4"));
    EXPECT_TRUE(c.is_pair && c.is_connected && c.is_bipartite_connected);
    c = classify_pair_partition(P("1,2|3,4"));
    EXPECT_TRUE(c.is_pair);
    EXPECT_FALSE(c.is_connected);
    c = classify_pair_partition(P("1,2,3"));
    EXPECT_FALSE(c.is_pair);
    c = classify_pair_partition(P("1,4|2,5|3,6"));
    EXPECT_TRUE(c.is_connected);
    EXPECT_FALSE(c.is_bipartite_connected);
}

TEST(classify_pair_partition, invariant_under_reversal) {
    for (int n = 2; n <= 8; n += 2) {
        std::vector<int> reverse(n);
        for (int k = 1; k <= n; ++k) {
            reverse[k - 1] = n + 1 - k;
        }
        for_each_pair_partition(n, [&](const SetPartition &p) {
            auto a = classify_pair_partition(p);
            auto b = classify_pair_partition(apply_permutation(p, reverse));
            EXPECT_EQ(a.is_connected, b.is_connected);
            EXPECT_EQ(a.is_bipartite_connected, b.is_bipartite_connected);
        });
    }
}

TEST(count_bicon_pairs, brute_force_values) {
    // Independent brute force in tests/oracles/oracle.py.
    EXPECT_EQ(count_bicon_pairs(2), 1u);
    EXPECT_EQ(count_bicon_pairs(4), 1u);
    EXPECT_EQ(count_bicon_pairs(6), 3u);
    EXPECT_EQ(count_bicon_pairs(8), 14u);
    EXPECT_EQ(count_bicon_pairs(10), 80u);
    EXPECT_THROW(count_bicon_pairs(5), ArgumentError);
    EXPECT_THROW(count_bicon_pairs(0), ArgumentError);
}

TEST(count_bicon_pairs, matches_classification) {
    for (int n = 2; n <= 8; n += 2) {
        std::uint64_t count = 0;
        std::uint64_t total = 0;
        for_each_pair_partition(n, [&](const SetPartition &p) {
            ++total;
            count += classify_pair_partition(p).is_bipartite_connected ? 1 : 0;
        });
        EXPECT_EQ(count, count_bicon_pairs(n));
        std::uint64_t double_factorial = 1;
        for (int k = n - 1; k > 1; k -= 2) {
            double_factorial *= k;
        }
        EXPECT_EQ(total, double_factorial);
    }
}
