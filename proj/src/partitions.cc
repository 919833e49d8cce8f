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
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "bifree/errors.h"

namespace bifree {

namespace {

struct RgsHash {
    std::size_t operator()(const std::vector<int> &v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

std::vector<int> canonical_rgs(std::span<const int> labels) {
    std::vector<int> rgs(labels.size());
    std::unordered_map<int, int> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = remap.emplace(labels[i], static_cast<int>(remap.size()));
        rgs[i] = it->second;
    }
    return rgs;
}

// Builds a partition directly from a restricted growth string known to be canonical.
SetPartition from_canonical_rgs(const std::vector<int> &rgs) {
    return SetPartition::from_labels(rgs);
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
    if (n < 0) {
        throw ArgumentError("partition ground set size must be non-negative");
    }
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) {
            throw ArgumentError("partition blocks must be non-empty");
        }
        for (int e : blocks[b]) {
            if (e < 1 || e > n) {
                throw ArgumentError("partition element " + std::to_string(e) + " outside [1, " +
                                    std::to_string(n) + "]");
            }
            if (owner[e - 1] != -1) {
                throw ArgumentError("element " + std::to_string(e) + " appears in two blocks");
            }
            owner[e - 1] = static_cast<int>(b);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (owner[i] == -1) {
            throw ArgumentError("element " + std::to_string(i + 1) + " is not covered");
        }
    }
    *this = from_labels(owner);
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
    SetPartition p;
    p.n_ = static_cast<int>(labels.size());
    p.rgs_ = canonical_rgs(labels);
    int count = 0;
    for (int r : p.rgs_) {
        count = std::max(count, r + 1);
    }
    p.blocks_.assign(static_cast<std::size_t>(count), {});
    for (int i = 0; i < p.n_; ++i) {
        p.blocks_[p.rgs_[i]].push_back(i + 1);
    }
    return p;
}

SetPartition SetPartition::singletons(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        labels[i] = i;
    }
    return from_labels(labels);
}

SetPartition SetPartition::full(int n) {
    return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::size_t SetPartitionHash::operator()(const SetPartition &p) const {
    return RgsHash{}(p.rgs()) ^ static_cast<std::size_t>(p.size());
}

std::string to_string(const SetPartition &p) {
    std::string out;
    for (std::size_t b = 0; b < p.blocks().size(); ++b) {
        if (b) {
            out += '|';
        }
        const auto &block = p.blocks()[b];
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += std::to_string(block[i]);
        }
    }
    return out;
}

SetPartition parse_partition(std::string_view text) {
    std::vector<std::vector<int>> blocks;
    int n = 0;
    if (text.empty()) {
        return SetPartition();
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto bar = text.find('|', start);
        auto block_text = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
        std::vector<int> block;
        std::size_t pos = 0;
        while (pos <= block_text.size()) {
            auto comma = block_text.find(',', pos);
            auto item = block_text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
                throw ArgumentError("malformed partition text: '" + std::string(text) + "'");
            }
            block.push_back(value);
            n = std::max(n, value);
            if (comma == std::string_view::npos) {
                break;
            }
            pos = comma + 1;
        }
        blocks.push_back(std::move(block));
        if (bar == std::string_view::npos) {
            break;
        }
        start = bar + 1;
    }
    return SetPartition(n, std::move(blocks));
}

void for_each_partition(int n, const std::function<void(const SetPartition &)> &visit) {
    if (n < 0) {
        throw ArgumentError("n must be non-negative");
    }
    if (n == 0) {
        visit(SetPartition());
        return;
    }
    // Iterate restricted growth strings a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
    while (true) {
        visit(from_canonical_rgs(a));
        int i = n - 1;
        while (i > 0 && a[i] == prefix_max[i - 1] + 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

std::vector<SetPartition> enumerate_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition &p) { out.push_back(p); });
    return out;
}

bool blocks_cross(std::span<const int> a, std::span<const int> b) {
    // With both blocks sorted, they interleave iff some element of b lies strictly
    // between two elements of a while another element of b lies outside that gap.
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        int lo = a[i];
        int hi = a[i + 1];
        bool inside = false;
        bool outside = false;
        for (int x : b) {
            if (x > lo && x < hi) {
                inside = true;
            } else {
                outside = true;
            }
        }
        if (inside && outside) {
            return true;
        }
    }
    return false;
}

bool is_noncrossing(const SetPartition &p) {
    const auto &blocks = p.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            if (blocks_cross(blocks[i], blocks[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<SetPartition> enumerate_noncrossing_filtered(int n) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition &p) {
        if (is_noncrossing(p)) {
            out.push_back(p);
        }
    });
    return out;
}

namespace {

using BlockList = std::vector<std::vector<int>>;
using Emit = std::function<void(BlockList &)>;

void nc_recursive(const std::vector<int> &elems, BlockList &acc, const Emit &emit);

void fill_gaps(const std::vector<std::vector<int>> &gaps, std::size_t g, BlockList &acc, const Emit &emit) {
    if (g == gaps.size()) {
        emit(acc);
        return;
    }
    nc_recursive(gaps[g], acc, [&](BlockList &a) { fill_gaps(gaps, g + 1, a, emit); });
}

// All non-crossing partitions of the increasing sequence `elems`, built from the
// block containing the first element; the gaps it leaves are filled independently.
void nc_recursive(const std::vector<int> &elems, BlockList &acc, const Emit &emit) {
    if (elems.empty()) {
        emit(acc);
        return;
    }
    std::size_t rest = elems.size() - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest); ++mask) {
        std::vector<int> block{elems[0]};
        std::vector<std::vector<int>> gaps;
        std::vector<int> current;
        for (std::size_t k = 0; k < rest; ++k) {
            if (mask >> k & 1) {
                block.push_back(elems[k + 1]);
                gaps.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(elems[k + 1]);
            }
        }
        gaps.push_back(std::move(current));
        acc.push_back(std::move(block));
        fill_gaps(gaps, 0, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

std::vector<SetPartition> enumerate_noncrossing_recursive(int n) {
    if (n < 0) {
        throw ArgumentError("n must be non-negative");
    }
    std::vector<int> elems(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        elems[i] = i + 1;
    }
    std::vector<SetPartition> out;
    BlockList acc;
    nc_recursive(elems, acc, [&](BlockList &blocks) {
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            for (int e : blocks[b]) {
                labels[e - 1] = static_cast<int>(b);
            }
        }
        out.push_back(SetPartition::from_labels(labels));
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> enumerate_noncrossing(int n) {
    return n <= 10 ? enumerate_noncrossing_filtered(n) : enumerate_noncrossing_recursive(n);
}

const std::vector<SetPartition> &noncrossing_cached(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<std::vector<SetPartition>>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[n];
    if (!slot) {
        slot = std::make_unique<std::vector<SetPartition>>(enumerate_noncrossing(n));
    }
    return *slot;
}

std::vector<SetPartition> enumerate_pair_noncrossing(int n) {
    std::vector<SetPartition> out;
    if (n % 2 != 0) {
        return out;
    }
    for (const auto &p : noncrossing_cached(n)) {
        if (std::all_of(p.blocks().begin(), p.blocks().end(), [](const auto &b) { return b.size() == 2; })) {
            out.push_back(p);
        }
    }
    return out;
}

void for_each_pair_partition(int n, const std::function<void(const SetPartition &)> &visit) {
    if (n < 0 || n % 2 != 0) {
        return;
    }
    std::vector<int> labels(static_cast<std::size_t>(n), -1);
    std::function<void(int)> rec = [&](int pairs_done) {
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (labels[i] == -1) {
                first = i;
                break;
            }
        }
        if (first == -1) {
            visit(SetPartition::from_labels(labels));
            return;
        }
        labels[first] = pairs_done;
        for (int j = first + 1; j < n; ++j) {
            if (labels[j] == -1) {
                labels[j] = pairs_done;
                rec(pairs_done + 1);
                labels[j] = -1;
            }
        }
        labels[first] = -1;
    };
    rec(0);
}

bool is_refinement(const SetPartition &sigma, const SetPartition &pi) {
    if (sigma.size() != pi.size()) {
        throw ArgumentError("refinement needs partitions of the same ground set");
    }
    for (const auto &block : sigma.blocks()) {
        int owner = pi.block_of(block.front());
        for (int e : block) {
            if (pi.block_of(e) != owner) {
                return false;
            }
        }
    }
    return true;
}

namespace {

struct MobiusTable {
    std::unordered_map<std::vector<int>, std::int64_t, RgsHash> values;
};

std::shared_ptr<const MobiusTable> build_mobius_table(const SetPartition &sigma) {
    int n = sigma.size();
    std::vector<const SetPartition *> interval;
    for (const auto &tau : noncrossing_cached(n)) {
        if (is_refinement(tau, sigma)) {
            interval.push_back(&tau);
        }
    }
    std::stable_sort(interval.begin(), interval.end(),
                     [](const SetPartition *a, const SetPartition *b) { return a->block_count() < b->block_count(); });
    // rep[i][e] = smallest element in the block of e, 0-based.
    std::vector<std::vector<int>> rep(interval.size(), std::vector<int>(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < interval.size(); ++i) {
        for (const auto &block : interval[i]->blocks()) {
            for (int e : block) {
                rep[i][e - 1] = block.front() - 1;
            }
        }
    }
    auto table = std::make_shared<MobiusTable>();
    std::vector<std::int64_t> value(interval.size(), 0);
    for (std::size_t i = 0; i < interval.size(); ++i) {
        if (*interval[i] == sigma) {
            value[i] = 1;
        } else {
            // mu(tau, sigma) = - sum over tau < rho <= sigma of mu(rho, sigma).
            std::int64_t acc = 0;
            const auto &r = rep[i];
            for (std::size_t j = 0; j < i; ++j) {
                if (interval[j]->block_count() >= interval[i]->block_count()) {
                    break;
                }
                const auto &coarse = interval[j]->rgs();
                bool finer = true;
                for (int e = 0; e < n; ++e) {
                    if (coarse[e] != coarse[r[e]]) {
                        finer = false;
                        break;
                    }
                }
                if (finer) {
                    acc += value[j];
                }
            }
            value[i] = -acc;
        }
        table->values.emplace(interval[i]->rgs(), value[i]);
    }
    return table;
}

}  // namespace

std::int64_t mobius_nc(const SetPartition &pi, const SetPartition &sigma) {
    if (pi.size() != sigma.size()) {
        throw ArgumentError("mobius_nc needs partitions of the same ground set");
    }
    if (!is_noncrossing(pi) || !is_noncrossing(sigma)) {
        throw ArgumentError("mobius_nc is defined on non-crossing partitions only");
    }
    if (!is_refinement(pi, sigma)) {
        return 0;
    }
    static std::mutex mutex;
    static std::map<std::pair<int, std::vector<int>>, std::shared_ptr<const MobiusTable>> cache;
    std::shared_ptr<const MobiusTable> table;
    {
        std::lock_guard lock(mutex);
        auto &slot = cache[{sigma.size(), sigma.rgs()}];
        if (!slot) {
            slot = build_mobius_table(sigma);
        }
        table = slot;
    }
    return table->values.at(pi.rgs());
}

SetPartition apply_permutation(const SetPartition &p, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != p.size()) {
        throw ArgumentError("permutation size does not match partition");
    }
    std::vector<int> labels(perm.size(), -1);
    for (int k = 1; k <= p.size(); ++k) {
        int image = perm[k - 1];
        if (image < 1 || image > p.size() || labels[image - 1] != -1) {
            throw ArgumentError("not a permutation of [n]");
        }
        labels[image - 1] = p.block_of(k);
    }
    return SetPartition::from_labels(labels);
}

std::size_t IntersectionGraph::edge_count() const {
    std::size_t edges = 0;
    for (int i = 0; i < vertex_count; ++i) {
        for (int j = i + 1; j < vertex_count; ++j) {
            edges += adjacency[i][j] ? 1 : 0;
        }
    }
    return edges;
}

bool IntersectionGraph::is_connected() const {
    if (vertex_count == 0) {
        return false;
    }
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < vertex_count; ++v) {
            if (adjacency[u][v] && !seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == vertex_count;
}

bool IntersectionGraph::is_bipartite() const {
    std::vector<int> colour(static_cast<std::size_t>(vertex_count), -1);
    for (int start = 0; start < vertex_count; ++start) {
        if (colour[start] != -1) {
            continue;
        }
        colour[start] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < vertex_count; ++v) {
                if (!adjacency[u][v]) {
                    continue;
                }
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

IntersectionGraph intersection_graph(const SetPartition &p) {
    IntersectionGraph g;
    g.vertex_count = static_cast<int>(p.block_count());
    g.adjacency.assign(p.block_count(), std::vector<bool>(p.block_count(), false));
    for (std::size_t i = 0; i < p.block_count(); ++i) {
        for (std::size_t j = i + 1; j < p.block_count(); ++j) {
            bool cross = blocks_cross(p.blocks()[i], p.blocks()[j]);
            g.adjacency[i][j] = cross;
            g.adjacency[j][i] = cross;
        }
    }
    return g;
}

PairClassification classify_pair_partition(const SetPartition &p) {
    PairClassification c;
    c.is_pair = std::all_of(p.blocks().begin(), p.blocks().end(), [](const auto &b) { return b.size() == 2; });
    if (!c.is_pair) {
        return c;
    }
    auto g = intersection_graph(p);
    c.is_connected = g.is_connected();
    c.is_bipartite_connected = c.is_connected && g.is_bipartite();
    return c;
}

std::uint64_t count_bicon_pairs(int two_j) {
    if (two_j < 2 || two_j % 2 != 0) {
        throw ArgumentError("count_bicon_pairs needs an even size >= 2, got " + std::to_string(two_j));
    }
    static std::mutex mutex;
    static std::map<int, std::uint64_t> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(two_j); it != cache.end()) {
            return it->second;
        }
    }
    std::uint64_t count = 0;
    for_each_pair_partition(two_j, [&](const SetPartition &p) {
        if (classify_pair_partition(p).is_bipartite_connected) {
            ++count;
        }
    });
    std::lock_guard lock(mutex);
    cache[two_j] = count;
    return count;
}

}  // namespace bifree
