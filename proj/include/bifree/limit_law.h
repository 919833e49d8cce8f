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

#ifndef BIFREE_LIMIT_LAW_H
#define BIFREE_LIMIT_LAW_H

#include "bifree/cumulants.h"
#include "bifree/rational.h"

namespace bifree {

/// Parameters of the limit law mu_q: q in [0, 1) and the highest moment order wanted.
struct LimitLawParams {
    Rational q;
    int max_order = 0;

    /// Throws ArgumentError unless 0 <= q < 1 and max_order >= 1.
    void validate() const;
};

/// Free cumulants of mu_1 (the classical sum of two independent semicircles of
/// variance 1/2): zero at odd orders, 2 (1/2)^{n/2} |P2^bicon(n)| at even orders.
CumulantSeq mu1_free_cumulants(int max_order);

/// Free cumulants of Z = sqrt(1-q) S + sqrt(q) T: kappa_2 = 1, even n >= 4 gives
/// 2 (q/2)^{n/2} |P2^bicon(n)|, odd orders vanish.
CumulantSeq z_free_cumulants(const Rational &q, int max_order);

/// Moments of mu_q from the first-block recurrence. M_0 = 1 is implicit.
MomentSeq mu_q_moments_recurrence(const Rational &q, int max_order);
/// Moments of mu_q by summing z_free_cumulants over non-crossing partitions.
MomentSeq mu_q_moments_cumulant_route(const Rational &q, int max_order);

/// Standard semicircle: 0 at odd orders, Catalan(k) at order 2k.
MomentSeq semicircle_moments(int max_order);

}  // namespace bifree

#endif
