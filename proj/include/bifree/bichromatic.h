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

#ifndef BIFREE_BICHROMATIC_H
#define BIFREE_BICHROMATIC_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bifree/partitions.h"

namespace bifree {

enum class Side : std::uint8_t { left, right };

/// Assignment of each position of [n] to the left or right face.
///
/// Carries the reading permutation s_chi: left positions in increasing order,
/// then right positions in decreasing order. Position a precedes b in the
/// chi-order iff a is read before b.
class ChiMap {
   public:
    ChiMap() = default;
    explicit ChiMap(std::vector<Side> sides);

    /// Positions 1..2m with odd -> left, even -> right.
    static ChiMap alternating(int m);

    int size() const {
        return static_cast<int>(sides_.size());
    }
    Side side(int position) const {
        return sides_[position - 1];
    }
    const std::vector<Side> &sides() const {
        return sides_;
    }
    /// permutation()[k - 1] = s_chi(k), the k-th position in reading order.
    const std::vector<int> &permutation() const {
        return perm_;
    }
    /// rank()[p - 1] = s_chi^{-1}(p), the 1-based reading rank of position p.
    const std::vector<int> &rank() const {
        return rank_;
    }
    bool precedes(int a, int b) const {
        return rank_[a - 1] < rank_[b - 1];
    }

    bool operator==(const ChiMap &other) const {
        return sides_ == other.sides_;
    }

   private:
    std::vector<Side> sides_;
    std::vector<int> perm_;
    std::vector<int> rank_;
};

ChiMap chi_alternating(int m);
std::vector<int> chi_permutation(const ChiMap &chi);

/// "LRRLLR" form.
std::string to_string(const ChiMap &chi);
ChiMap parse_chi(std::string_view text);

/// True iff s_chi^{-1} applied to the blocks of `p` gives a non-crossing partition.
bool is_bnc(const SetPartition &p, const ChiMap &chi);
/// Same predicate, tested directly as "no interleaving v1 < w1 < v2 < w2 in the chi-order".
bool is_bnc_by_order(const SetPartition &p, const ChiMap &chi);

/// A partition together with a chi under which it is bi-non-crossing.
class BNCPartition {
   public:
    /// Throws ArgumentError if sizes differ or `p` is not bi-non-crossing for `chi`.
    BNCPartition(SetPartition p, ChiMap chi);

    const SetPartition &partition() const {
        return partition_;
    }
    const ChiMap &chi() const {
        return chi_;
    }
    bool operator==(const BNCPartition &other) const = default;

   private:
    SetPartition partition_;
    ChiMap chi_;
};

/// BNC(chi): image of NC(n) under s_chi. Catalan(n) elements.
std::vector<BNCPartition> enumerate_bnc(const ChiMap &chi);

/// No block mixes left and right positions.
bool is_vertically_split(const BNCPartition &p);

/// Vertically split elements over chi_alternating(m): one non-crossing partition
/// on the m left nodes times one on the m right nodes. Left node k sits at
/// position 2k - 1 and right node k at position 2k.
std::vector<BNCPartition> enumerate_bnc_vs_alt(int m);
/// Subfamily whose blocks all have exactly two elements; empty for odd m.
std::vector<BNCPartition> enumerate_bnc_vs2_alt(int m);

/// Builds the alternating vertically split element from its left and right halves.
BNCPartition from_alternating_halves(const SetPartition &left, const SetPartition &right);
/// Inverse of from_alternating_halves. Throws ArgumentError if `p` is not over an
/// alternating chi or not vertically split.
std::pair<SetPartition, SetPartition> alternating_halves(const BNCPartition &p);

/// Bi-non-crossing Moebius function, evaluated through s_chi on the NC lattice.
/// Throws ArgumentError if the two arguments carry different chi maps.
std::int64_t mobius_bnc(const BNCPartition &pi, const BNCPartition &sigma);

}  // namespace bifree

#endif
