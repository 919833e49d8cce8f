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

#ifndef BIFREE_MEANDERS_H
#define BIFREE_MEANDERS_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "bifree/bichromatic.h"
#include "bifree/partitions.h"

namespace bifree {

/// 2m points on a line with non-crossing arcs above (top) and below (bottom).
class MeandricSystem {
   public:
    /// Throws ArgumentError unless both are non-crossing pair partitions of the same [2m].
    MeandricSystem(SetPartition top, SetPartition bottom);

    int size() const {
        return top_.size() / 2;
    }
    const SetPartition &top() const {
        return top_;
    }
    const SetPartition &bottom() const {
        return bottom_;
    }
    bool operator==(const MeandricSystem &other) const = default;

   private:
    SetPartition top_;
    SetPartition bottom_;
};

/// "top=1,2|3,4;bottom=1,4|2,3"
std::string to_string(const MeandricSystem &system);
MeandricSystem parse_meander(std::string_view text);

/// Maps an alternating, vertically split, pair-block partition of [4m] to the
/// meandric system of size m. The left pairing (odd positions, 2k-1 -> k) is drawn
/// on top and the right pairing (even positions, 2k -> k) below.
MeandricSystem meander_from_bnc(const BNCPartition &p);
BNCPartition meander_to_bnc(const MeandricSystem &system);

/// Closed loops c(M): connected components of the 2m points under all arcs.
int loop_count(const MeandricSystem &system);
/// Same count by walking each loop top arc, bottom arc, top arc, ... until it closes.
int loop_count_traced(const MeandricSystem &system);

inline constexpr int kMaxMeanderSize = 6;

/// Histogram c -> number of systems of size m with c loops. Sums to Catalan(m)^2.
/// Throws ResourceError when m > max_size.
std::map<int, std::uint64_t> loop_distribution(int m, int max_size = kMaxMeanderSize);

}  // namespace bifree

#endif
