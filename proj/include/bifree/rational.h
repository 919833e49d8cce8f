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

#ifndef BIFREE_RATIONAL_H
#define BIFREE_RATIONAL_H

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bifree {

/// Exact rational arithmetic; every combinatorial quantity in the library is a Rational.
using Rational = mpq_class;

/// "p/q" in lowest terms with q > 0. Integers keep the "/1" suffix.
std::string to_string(const Rational &value);

/// Accepts "p/q", "p", and plain decimals such as "-0.25" or "1e-3" (converted exactly).
/// Throws ArgumentError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

Rational pow(const Rational &base, unsigned exponent);

/// n (n-1) ... (n-k+1); zero when k > n.
Rational falling_factorial(std::int64_t n, std::int64_t k);

std::uint64_t catalan(unsigned n);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

}  // namespace bifree

#endif
