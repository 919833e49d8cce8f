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

#ifndef BIFREE_PARTITIONS_H
#define BIFREE_PARTITIONS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bifree {

/// A partition of the ground set [n] = {1, ..., n}.
///
/// Always held in canonical form: each block sorted ascending, blocks ordered by
/// their minimum element. Two partitions are equal iff they have the same blocks.
class SetPartition {
   public:
    SetPartition() = default;

    /// Validates and canonicalizes. Throws ArgumentError unless the blocks are
    /// non-empty, pairwise disjoint, and cover exactly {1, ..., n}.
    SetPartition(int n, std::vector<std::vector<int>> blocks);

    /// Builds the partition whose blocks are the level sets of `labels`; element
    /// i + 1 carries labels[i]. Any label values are allowed.
    static SetPartition from_labels(std::span<const int> labels);

    static SetPartition singletons(int n);
    static SetPartition full(int n);

    int size() const {
        return n_;
    }
    std::size_t block_count() const {
        return blocks_.size();
    }
    const std::vector<std::vector<int>> &blocks() const {
        return blocks_;
    }
    /// Restricted growth string: rgs()[i] is the index of the block holding element i + 1.
    const std::vector<int> &rgs() const {
        return rgs_;
    }
    int block_of(int element) const {
        return rgs_[element - 1];
    }

    bool operator==(const SetPartition &other) const {
        return n_ == other.n_ && rgs_ == other.rgs_;
    }
    bool operator<(const SetPartition &other) const {
        return n_ != other.n_ ? n_ < other.n_ : rgs_ < other.rgs_;
    }

   private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> rgs_;
};

struct SetPartitionHash {
    std::size_t operator()(const SetPartition &p) const;
};

/// Text form "1,4|2,5|3,6"; the empty partition is "".
std::string to_string(const SetPartition &p);
/// Parses the text form. The ground-set size is the largest element mentioned.
SetPartition parse_partition(std::string_view text);

/// Calls `visit` once for every partition of [n], in restricted-growth-string order.
void for_each_partition(int n, const std::function<void(const SetPartition &)> &visit);
std::vector<SetPartition> enumerate_partitions(int n);

/// True iff blocks `a` and `b` interleave: some a1 < b1 < a2 < b2 or b1 < a1 < b2 < a2.
bool blocks_cross(std::span<const int> a, std::span<const int> b);
bool is_noncrossing(const SetPartition &p);

/// Non-crossing partitions of [n]. Filters all partitions for n <= 10 and builds
/// them recursively from the block containing 1 above that.
std::vector<SetPartition> enumerate_noncrossing(int n);
std::vector<SetPartition> enumerate_noncrossing_filtered(int n);
std::vector<SetPartition> enumerate_noncrossing_recursive(int n);
/// Shared, lazily built NC(n) list (canonical order of enumerate_noncrossing).
const std::vector<SetPartition> &noncrossing_cached(int n);

std::vector<SetPartition> enumerate_pair_noncrossing(int n);
/// Every pair partition (perfect matching) of [n]; empty when n is odd.
void for_each_pair_partition(int n, const std::function<void(const SetPartition &)> &visit);

/// sigma <= pi in the refinement order. Throws ArgumentError on mismatched n.
bool is_refinement(const SetPartition &sigma, const SetPartition &pi);

/// Moebius function of the non-crossing lattice NC(n).
///
/// Returns 0 unless pi <= sigma. Evaluated by memoized recursion over the
/// interval [pi, sigma]; thread-safe. Throws ArgumentError if either argument is
/// crossing or the sizes differ.
std::int64_t mobius_nc(const SetPartition &pi, const SetPartition &sigma);

/// Applies a permutation to the ground set: element k goes to perm[k - 1].
SetPartition apply_permutation(const SetPartition &p, std::span<const int> perm);

struct IntersectionGraph {
    int vertex_count = 0;
    /// adjacency[i][j] is true iff blocks i and j cross. Irreflexive and symmetric.
    std::vector<std::vector<bool>> adjacency;

    std::size_t edge_count() const;
    bool is_connected() const;
    bool is_bipartite() const;
};

IntersectionGraph intersection_graph(const SetPartition &p);

struct PairClassification {
    bool is_pair = false;
    bool is_connected = false;
    bool is_bipartite_connected = false;
};

PairClassification classify_pair_partition(const SetPartition &p);

/// Number of pair partitions of [two_j] whose intersection graph is connected and
/// bipartite. Brute force over all (two_j - 1)!! pairings, cached.
std::uint64_t count_bicon_pairs(int two_j);

}  // namespace bifree

#endif
