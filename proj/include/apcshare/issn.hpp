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

#include <string>
#include <string_view>

namespace apcshare {

/// Strict rejects ISSNs with a failing ISO 3297 check digit; Lax keeps them
/// (with a warning upstream) for dirty real-world journal lists.
enum class IssnPolicy { Strict, Lax };

struct IssnParse {
    enum class Status { Ok, Malformed, BadChecksum };
    Status status = Status::Malformed;
    std::string value;  // normalized "NNNN-NNNC" when status != Malformed
};

/// Strips hyphens and whitespace, uppercases a trailing x, reinserts the
/// hyphen after the fourth digit, and verifies the mod-11 check digit
/// (weights 8..2, X standing for 10). Never throws.
IssnParse try_normalize_issn(std::string_view raw) noexcept;

/// Like try_normalize_issn, but throws MalformedIssn or ChecksumFailure.
std::string normalize_issn(std::string_view raw);

/// Check digit for a 7-digit ISSN prefix ('0'..'9' or 'X').
char issn_check_digit(std::string_view first_seven);

}  // namespace apcshare
