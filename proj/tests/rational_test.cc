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

#include "bifree/rational.h"

#include <cmath>

#include "bifree/errors.h"
#include "gtest/gtest.h"

using namespace bifree;

TEST(rational, to_string_always_has_denominator) {
    EXPECT_EQ(to_string(Rational(1)), "1/1");
    EXPECT_EQ(to_string(Rational(0)), "0/1");
    EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}

TEST(rational, parse_forms) {
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("1.5e2"), Rational(150));
    EXPECT_EQ(parse_rational("2e-1"), Rational(1, 5));
    EXPECT_THROW(parse_rational("1/0"), ArgumentError);
    EXPECT_THROW(parse_rational("abc"), ArgumentError);
    EXPECT_THROW(parse_rational(""), ArgumentError);
}

TEST(rational, round_trip_text) {
    for (const char *s : {"5/7", "-12/5", "0/1", "1000000000000000000000/3"}) {
        EXPECT_EQ(to_string(parse_rational(s)), s);
    }
}

TEST(rational, helpers) {
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(pow(Rational(5), 0), Rational(1));
    EXPECT_EQ(falling_factorial(5, 2), Rational(20));
    EXPECT_EQ(falling_factorial(3, 4), Rational(0));
    EXPECT_EQ(falling_factorial(7, 0), Rational(1));
    std::uint64_t expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (unsigned n = 0; n < 9; ++n) {
        EXPECT_EQ(catalan(n), expected[n]);
    }
}

TEST(rational, format_double_round_trips) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(1.0), "1");
    double x = 1.0 / 3.0;
    EXPECT_EQ(std::stod(format_double(x)), x);
}
