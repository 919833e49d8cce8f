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

#ifndef BIFREE_CUMULANTS_H
#define BIFREE_CUMULANTS_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bifree/bichromatic.h"
#include "bifree/rational.h"

namespace bifree {

/// Moments m_1..m_K of a single variable; m_0 = 1 is implicit.
class MomentSeq {
   public:
    MomentSeq() = default;
    explicit MomentSeq(std::vector<Rational> m1_to_k) : values_(std::move(m1_to_k)) {
    }

    int max_order() const {
        return static_cast<int>(values_.size());
    }
    /// m_k; m_0 = 1. Throws InsufficientDataError when k > max_order().
    const Rational &at(int k) const;
    const std::vector<Rational> &values() const {
        return values_;
    }
    bool operator==(const MomentSeq &) const = default;

   private:
    std::vector<Rational> values_;
};

/// Free cumulants kappa_1..kappa_K.
class CumulantSeq {
   public:
    CumulantSeq() = default;
    explicit CumulantSeq(std::vector<Rational> k1_to_k) : values_(std::move(k1_to_k)) {
    }

    int max_order() const {
        return static_cast<int>(values_.size());
    }
    /// kappa_k for k >= 1. Throws InsufficientDataError when k > max_order().
    const Rational &at(int k) const;
    const std::vector<Rational> &values() const {
        return values_;
    }
    bool operator==(const CumulantSeq &) const = default;

   private:
    std::vector<Rational> values_;
};

/// kappa_n = sum over pi in NC(n) of m_pi * mu_NC(pi, 1_n).
CumulantSeq free_cumulants_from_moments(const MomentSeq &moments);
/// m_n = sum over pi in NC(n) of kappa_pi.
MomentSeq moments_from_free_cumulants(const CumulantSeq &cumulants);

/// phi(a_{c_1} ... a_{c_r}) for freely independent identically distributed copies.
/// Only non-crossing partitions refining the colour kernel contribute.
/// Throws InsufficientDataError when r exceeds the available order.
Rational free_coloured_moment(std::span<const int> colours, const MomentSeq &moments);
Rational free_coloured_moment(std::span<const int> colours, const CumulantSeq &cumulants);

/// One entry of a bi-free word: its face, its free-copy index, and either a
/// variable (distributed as the face's leg) or a scalar multiple of the unit.
struct Operand {
    Side side = Side::left;
    int colour = 0;
    std::optional<Rational> scalar;

    static Operand variable(Side side, int colour) {
        return Operand{side, colour, std::nullopt};
    }
    static Operand constant(Side side, Rational value) {
        return Operand{side, 0, std::move(value)};
    }
};

using OperandSpec = std::vector<Operand>;

/// Product over the blocks of a vertically split tau of bi-free cumulants. Left
/// blocks are free cumulants of the left leg, right blocks of the right leg. A
/// block of size >= 2 holding a scalar or mixing colours gives 0; a singleton
/// scalar gives the scalar; a singleton variable gives kappa_1.
/// Throws ArgumentError if tau is not vertically split or `ops` does not match it.
Rational kappa_bnc_vs(const BNCPartition &tau, const OperandSpec &ops, const MomentSeq &left_moments,
                      const MomentSeq &right_moments);
Rational kappa_bnc_vs(const BNCPartition &tau, const OperandSpec &ops, const CumulantSeq &left_cumulants,
                      const CumulantSeq &right_cumulants);

/// Moment of the word `ops` (sides given by chi) by the bi-free moment-cumulant
/// formula: sum over tau in BNC(chi) of kappa_tau, keeping only vertically split,
/// colour-refining tau.
Rational bnc_moment(const ChiMap &chi, const OperandSpec &ops, const MomentSeq &left_moments,
                    const MomentSeq &right_moments);

/// Serialization: JSON array of "p/q" strings for m_1..m_K.
std::string moments_to_json(const std::vector<Rational> &values);
std::vector<Rational> rationals_from_json(const std::string &text);

}  // namespace bifree

#endif
