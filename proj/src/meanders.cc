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

#include "bifree/meanders.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "bifree/errors.h"

namespace bifree {

namespace {

bool is_nc_pairing(const SetPartition &p) {
    return std::all_of(p.blocks().begin(), p.blocks().end(), [](const auto &b) { return b.size() == 2; }) &&
           is_noncrossing(p);
}

class DisjointSets {
   public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), components_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[a] = b;
            --components_;
        }
    }
    int components() const {
        return components_;
    }

   private:
    std::vector<int> parent_;
    int components_;
};

// partner[i] = the point joined to i by an arc of `p` (0-based).
std::vector<int> partners(const SetPartition &p) {
    std::vector<int> out(static_cast<std::size_t>(p.size()));
    for (const auto &b : p.blocks()) {
        out[b[0] - 1] = b[1] - 1;
        out[b[1] - 1] = b[0] - 1;
    }
    return out;
}

}  // namespace

MeandricSystem::MeandricSystem(SetPartition top, SetPartition bottom)
    : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.size() != bottom_.size()) {
        throw ArgumentError("meandric system needs top and bottom on the same points");
    }
    if (!is_nc_pairing(top_) || !is_nc_pairing(bottom_)) {
        throw ArgumentError("meandric system arcs must be non-crossing pair partitions");
    }
}

std::string to_string(const MeandricSystem &system) {
    return "top=" + to_string(system.top()) + ";bottom=" + to_string(system.bottom());
}

MeandricSystem parse_meander(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos || !text.starts_with("top=") ||
        text.substr(semi + 1, 7) != "bottom=") {
        throw ArgumentError("meandric system text must look like 'top=1,2|3,4;bottom=1,4|2,3'");
    }
    auto top = parse_partition(text.substr(4, semi - 4));
    auto bottom = parse_partition(text.substr(semi + 8));
    return MeandricSystem(std::move(top), std::move(bottom));
}

MeandricSystem meander_from_bnc(const BNCPartition &p) {
    const int n = p.partition().size();
    if (n % 4 != 0) {
        throw ArgumentError("meander_from_bnc needs a partition of [4m]");
    }
    auto [left, right] = alternating_halves(p);
    if (!is_nc_pairing(left) || !is_nc_pairing(right)) {
        throw ArgumentError("meander_from_bnc needs every block to have exactly two elements");
    }
    return MeandricSystem(std::move(left), std::move(right));
}

BNCPartition meander_to_bnc(const MeandricSystem &system) {
    return from_alternating_halves(system.top(), system.bottom());
}

int loop_count(const MeandricSystem &system) {
    DisjointSets sets(system.top().size());
    for (const auto *arcs : {&system.top(), &system.bottom()}) {
        for (const auto &b : arcs->blocks()) {
            sets.unite(b[0] - 1, b[1] - 1);
        }
    }
    return sets.components();
}

int loop_count_traced(const MeandricSystem &system) {
    auto up = partners(system.top());
    auto down = partners(system.bottom());
    std::vector<bool> seen(up.size(), false);
    int loops = 0;
    for (std::size_t start = 0; start < up.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        ++loops;
        int x = static_cast<int>(start);
        do {
            seen[x] = true;
            int y = up[x];
            seen[y] = true;
            x = down[y];
        } while (x != static_cast<int>(start));
    }
    return loops;
}

std::map<int, std::uint64_t> loop_distribution(int m, int max_size) {
    if (m < 1) {
        throw ArgumentError("loop_distribution needs m >= 1");
    }
    if (m > max_size) {
        throw ResourceError("loop_distribution size " + std::to_string(m) + " exceeds the bound " +
                            std::to_string(max_size) + " (Catalan(m)^2 systems)");
    }
    auto pairings = enumerate_pair_noncrossing(2 * m);
    std::map<int, std::uint64_t> hist;
    for (const auto &top : pairings) {
        for (const auto &bottom : pairings) {
            ++hist[loop_count(MeandricSystem(top, bottom))];
        }
    }
    return hist;
}

}  // namespace bifree
