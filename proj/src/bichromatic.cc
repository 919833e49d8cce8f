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

#include "bifree/bichromatic.h"

#include "bifree/errors.h"

namespace bifree {

ChiMap::ChiMap(std::vector<Side> sides) : sides_(std::move(sides)) {
    int n = size();
    perm_.reserve(sides_.size());
    for (int k = 1; k <= n; ++k) {
        if (side(k) == Side::left) {
            perm_.push_back(k);
        }
    }
    for (int k = n; k >= 1; --k) {
        if (side(k) == Side::right) {
            perm_.push_back(k);
        }
    }
    rank_.assign(sides_.size(), 0);
    for (int r = 1; r <= n; ++r) {
        rank_[perm_[r - 1] - 1] = r;
    }
}

ChiMap ChiMap::alternating(int m) {
    if (m < 0) {
        throw ArgumentError("alternating chi needs m >= 0");
    }
    std::vector<Side> sides;
    sides.reserve(2 * static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        sides.push_back(Side::left);
        sides.push_back(Side::right);
    }
    return ChiMap(std::move(sides));
}

ChiMap chi_alternating(int m) {
    return ChiMap::alternating(m);
}

std::vector<int> chi_permutation(const ChiMap &chi) {
    return chi.permutation();
}

std::string to_string(const ChiMap &chi) {
    std::string out;
    for (Side s : chi.sides()) {
        out += s == Side::left ? 'L' : 'R';
    }
    return out;
}

ChiMap parse_chi(std::string_view text) {
    std::vector<Side> sides;
    for (char c : text) {
        if (c == 'L' || c == 'l') {
            sides.push_back(Side::left);
        } else if (c == 'R' || c == 'r') {
            sides.push_back(Side::right);
        } else {
            throw ArgumentError("chi must be a string over {L,R}, got '" + std::string(text) + "'");
        }
    }
    return ChiMap(std::move(sides));
}

bool is_bnc(const SetPartition &p, const ChiMap &chi) {
    if (p.size() != chi.size()) {
        throw ArgumentError("partition and chi sizes differ");
    }
    return is_noncrossing(apply_permutation(p, chi.rank()));
}

bool is_bnc_by_order(const SetPartition &p, const ChiMap &chi) {
    if (p.size() != chi.size()) {
        throw ArgumentError("partition and chi sizes differ");
    }
    const int n = p.size();
    const auto &perm = chi.permutation();
    // Walk quadruples in chi-order; block labels read in that order must not alternate.
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            int va = p.block_of(perm[a]);
            int wb = p.block_of(perm[b]);
            if (va == wb) {
                continue;
            }
            for (int c = b + 1; c < n; ++c) {
                if (p.block_of(perm[c]) != va) {
                    continue;
                }
                for (int d = c + 1; d < n; ++d) {
                    if (p.block_of(perm[d]) == wb) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

BNCPartition::BNCPartition(SetPartition p, ChiMap chi) : partition_(std::move(p)), chi_(std::move(chi)) {
    if (!is_bnc(partition_, chi_)) {
        throw ArgumentError("partition " + to_string(partition_) + " is not bi-non-crossing for chi " +
                            to_string(chi_));
    }
}

std::vector<BNCPartition> enumerate_bnc(const ChiMap &chi) {
    std::vector<BNCPartition> out;
    const auto &nc = noncrossing_cached(chi.size());
    out.reserve(nc.size());
    for (const auto &sigma : nc) {
        out.emplace_back(apply_permutation(sigma, chi.permutation()), chi);
    }
    return out;
}

bool is_vertically_split(const BNCPartition &p) {
    const auto &chi = p.chi();
    for (const auto &block : p.partition().blocks()) {
        Side s = chi.side(block.front());
        for (int e : block) {
            if (chi.side(e) != s) {
                return false;
            }
        }
    }
    return true;
}

BNCPartition from_alternating_halves(const SetPartition &left, const SetPartition &right) {
    if (left.size() != right.size()) {
        throw ArgumentError("left and right halves must have the same size");
    }
    const int m = left.size();
    std::vector<int> labels(2 * static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        labels[2 * k - 2] = left.block_of(k);
        labels[2 * k - 1] = static_cast<int>(left.block_count()) + right.block_of(k);
    }
    return BNCPartition(SetPartition::from_labels(labels), ChiMap::alternating(m));
}

std::pair<SetPartition, SetPartition> alternating_halves(const BNCPartition &p) {
    const int n = p.partition().size();
    if (n % 2 != 0 || !(p.chi() == ChiMap::alternating(n / 2))) {
        throw ArgumentError("alternating_halves needs an alternating chi");
    }
    if (!is_vertically_split(p)) {
        throw ArgumentError("alternating_halves needs a vertically split partition");
    }
    const int m = n / 2;
    std::vector<int> left(static_cast<std::size_t>(m));
    std::vector<int> right(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        left[k - 1] = p.partition().block_of(2 * k - 1);
        right[k - 1] = p.partition().block_of(2 * k);
    }
    return {SetPartition::from_labels(left), SetPartition::from_labels(right)};
}

std::vector<BNCPartition> enumerate_bnc_vs_alt(int m) {
    std::vector<BNCPartition> out;
    const auto &nc = noncrossing_cached(m);
    out.reserve(nc.size() * nc.size());
    for (const auto &left : nc) {
        for (const auto &right : nc) {
            out.push_back(from_alternating_halves(left, right));
        }
    }
    return out;
}

std::vector<BNCPartition> enumerate_bnc_vs2_alt(int m) {
    std::vector<BNCPartition> out;
    auto pairs = enumerate_pair_noncrossing(m);
    out.reserve(pairs.size() * pairs.size());
    for (const auto &left : pairs) {
        for (const auto &right : pairs) {
            out.push_back(from_alternating_halves(left, right));
        }
    }
    return out;
}

std::int64_t mobius_bnc(const BNCPartition &pi, const BNCPartition &sigma) {
    if (!(pi.chi() == sigma.chi())) {
        throw ArgumentError("mobius_bnc needs both partitions over the same chi");
    }
    const auto &rank = pi.chi().rank();
    return mobius_nc(apply_permutation(pi.partition(), rank), apply_permutation(sigma.partition(), rank));
}

}  // namespace bifree
