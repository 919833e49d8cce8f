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

#include "bifree/cumulants.h"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "json.hpp"

#include "bifree/errors.h"
#include "bifree/partitions.h"

namespace bifree {

namespace {

using BlockType = std::vector<int>;  // block sizes, sorted descending

BlockType block_type(const SetPartition &p) {
    BlockType t;
    t.reserve(p.block_count());
    for (const auto &b : p.blocks()) {
        t.push_back(static_cast<int>(b.size()));
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

using TypeTable = std::map<BlockType, std::int64_t>;

// Aggregates NC(n) by block type: either the plain count of each type or the sum
// of mu_NC(pi, 1_n) over partitions of that type.
const TypeTable &nc_type_table(int n, bool with_mobius) {
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, std::unique_ptr<TypeTable>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({n, with_mobius}); it != cache.end()) {
            return *it->second;
        }
    }
    auto table = std::make_unique<TypeTable>();
    const auto top = SetPartition::full(n);
    for (const auto &pi : noncrossing_cached(n)) {
        (*table)[block_type(pi)] += with_mobius ? mobius_nc(pi, top) : 1;
    }
    std::lock_guard lock(mutex);
    auto &slot = cache[{n, with_mobius}];
    if (!slot) {
        slot = std::move(table);
    }
    return *slot;
}

std::string too_short(const char *what, int k, int have) {
    return std::string(what) + " of order " + std::to_string(k) + " requested but only " + std::to_string(have) +
           " supplied";
}

}  // namespace

const Rational &MomentSeq::at(int k) const {
    static const Rational one(1);
    if (k == 0) {
        return one;
    }
    if (k < 0 || k > max_order()) {
        throw InsufficientDataError(too_short("moment", k, max_order()));
    }
    return values_[k - 1];
}

const Rational &CumulantSeq::at(int k) const {
    if (k < 1 || k > max_order()) {
        throw InsufficientDataError(too_short("cumulant", k, max_order()));
    }
    return values_[k - 1];
}

CumulantSeq free_cumulants_from_moments(const MomentSeq &moments) {
    std::vector<Rational> out;
    for (int n = 1; n <= moments.max_order(); ++n) {
        Rational kappa = 0;
        for (const auto &[type, mu] : nc_type_table(n, true)) {
            if (mu == 0) {
                continue;
            }
            Rational term = mu;
            for (int size : type) {
                term *= moments.at(size);
            }
            kappa += term;
        }
        out.push_back(kappa);
    }
    return CumulantSeq(std::move(out));
}

MomentSeq moments_from_free_cumulants(const CumulantSeq &cumulants) {
    std::vector<Rational> out;
    for (int n = 1; n <= cumulants.max_order(); ++n) {
        Rational moment = 0;
        for (const auto &[type, count] : nc_type_table(n, false)) {
            Rational term = count;
            for (int size : type) {
                term *= cumulants.at(size);
            }
            moment += term;
        }
        out.push_back(moment);
    }
    return MomentSeq(std::move(out));
}

Rational free_coloured_moment(std::span<const int> colours, const CumulantSeq &cumulants) {
    const int r = static_cast<int>(colours.size());
    if (r > cumulants.max_order()) {
        throw InsufficientDataError(too_short("coloured moment", r, cumulants.max_order()));
    }
    Rational total = 0;
    for (const auto &pi : noncrossing_cached(r)) {
        bool refines = true;
        for (const auto &block : pi.blocks()) {
            for (int e : block) {
                if (colours[e - 1] != colours[block.front() - 1]) {
                    refines = false;
                    break;
                }
            }
            if (!refines) {
                break;
            }
        }
        if (!refines) {
            continue;
        }
        Rational term = 1;
        for (const auto &block : pi.blocks()) {
            term *= cumulants.at(static_cast<int>(block.size()));
            if (term == 0) {
                break;
            }
        }
        total += term;
    }
    return total;
}

Rational free_coloured_moment(std::span<const int> colours, const MomentSeq &moments) {
    if (static_cast<int>(colours.size()) > moments.max_order()) {
        throw InsufficientDataError(too_short("coloured moment", static_cast<int>(colours.size()), moments.max_order()));
    }
    return free_coloured_moment(colours, free_cumulants_from_moments(moments));
}

Rational kappa_bnc_vs(const BNCPartition &tau, const OperandSpec &ops, const CumulantSeq &left_cumulants,
                      const CumulantSeq &right_cumulants) {
    const auto &chi = tau.chi();
    if (static_cast<int>(ops.size()) != chi.size()) {
        throw ArgumentError("operand list length does not match the partition");
    }
    for (int p = 1; p <= chi.size(); ++p) {
        if (ops[p - 1].side != chi.side(p)) {
            throw ArgumentError("operand " + std::to_string(p) + " is on the wrong face for chi");
        }
    }
    if (!is_vertically_split(tau)) {
        throw ArgumentError("kappa_bnc_vs needs a vertically split partition; other cumulants vanish");
    }
    Rational product = 1;
    for (const auto &block : tau.partition().blocks()) {
        const Operand &first = ops[block.front() - 1];
        const auto &legs = first.side == Side::left ? left_cumulants : right_cumulants;
        if (block.size() == 1) {
            product *= first.scalar ? *first.scalar : legs.at(1);
        } else {
            for (int e : block) {
                const Operand &op = ops[e - 1];
                if (op.scalar || op.colour != first.colour) {
                    return Rational(0);
                }
            }
            product *= legs.at(static_cast<int>(block.size()));
        }
        if (product == 0) {
            return product;
        }
    }
    return product;
}

Rational kappa_bnc_vs(const BNCPartition &tau, const OperandSpec &ops, const MomentSeq &left_moments,
                      const MomentSeq &right_moments) {
    return kappa_bnc_vs(tau, ops, free_cumulants_from_moments(left_moments), free_cumulants_from_moments(right_moments));
}

Rational bnc_moment(const ChiMap &chi, const OperandSpec &ops, const MomentSeq &left_moments,
                    const MomentSeq &right_moments) {
    auto left = free_cumulants_from_moments(left_moments);
    auto right = free_cumulants_from_moments(right_moments);
    Rational total = 0;
    for (const auto &tau : enumerate_bnc(chi)) {
        if (!is_vertically_split(tau)) {
            continue;
        }
        total += kappa_bnc_vs(tau, ops, left, right);
    }
    return total;
}

std::string moments_to_json(const std::vector<Rational> &values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &v : values) {
        arr.push_back(to_string(v));
    }
    return arr.dump();
}

std::vector<Rational> rationals_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ArgumentError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ArgumentError("expected a JSON array of rational strings");
    }
    std::vector<Rational> out;
    for (const auto &item : doc) {
        if (item.is_string()) {
            out.push_back(parse_rational(item.get<std::string>()));
        } else if (item.is_number_integer()) {
            out.push_back(parse_rational(std::to_string(item.get<long long>())));
        } else {
            throw ArgumentError("array entries must be rational strings like \"p/q\"");
        }
    }
    return out;
}

}  // namespace bifree
