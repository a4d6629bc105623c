// Copyright 2026 The apcshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apcshare {

/// Cost shares and publication units are exact rationals throughout the
/// pipeline. Rounding happens once, at the report boundary, and is always
/// half-up (halves round away from zero).
using Rational = mpq_class;

/// num/den reduced to lowest terms. den must be nonzero.
Rational make_rational(long num, long den);

/// Parses plain decimal notation: "1540", "275.00", "-12.5".
/// Throws std::invalid_argument for anything else (incl. thousands separators).
Rational rational_from_decimal(std::string_view text);

/// Rounds to `decimals` fractional digits, halves away from zero.
Rational round_half_up(const Rational& value, unsigned decimals);

/// Rounds to the nearest integer, halves away from zero.
long long round_half_up_to_int64(const Rational& value);

/// Fixed-point rendering with exactly `decimals` fractional digits,
/// e.g. format_decimal(1/6, 2) == "0.17".
std::string format_decimal(const Rational& value, unsigned decimals);

/// Lowest-terms rendering: "1/6", "-3/5", integers without a denominator.
std::string format_rational(const Rational& value);

}  // namespace apcshare
