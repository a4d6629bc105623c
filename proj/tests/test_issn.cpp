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

#include <doctest.h>

#include <random>

#include "apcshare/errors.hpp"
#include "apcshare/issn.hpp"

using namespace apcshare;

TEST_CASE("normalize_issn accepts valid spellings") {
    CHECK(normalize_issn("2041-1723") == "2041-1723");
    CHECK(normalize_issn("20411723") == "2041-1723");
    CHECK(normalize_issn(" 1550-7998 ") == "1550-7998");
    CHECK(normalize_issn("2050-084x") == "2050-084X");
    CHECK(normalize_issn("1367 2630") == "1367-2630");
}

TEST_CASE("normalize_issn rejects bad check digits and shapes") {
    CHECK_THROWS_AS(normalize_issn("1234-5678"), ChecksumFailure);
    CHECK_THROWS_AS(normalize_issn("2041-1724"), ChecksumFailure);
    CHECK_THROWS_AS(normalize_issn("1234-567"), MalformedIssn);
    CHECK_THROWS_AS(normalize_issn("123456789"), MalformedIssn);
    CHECK_THROWS_AS(normalize_issn("20A1-1723"), MalformedIssn);
    CHECK_THROWS_AS(normalize_issn("2041_1723"), MalformedIssn);
    CHECK_THROWS_AS(normalize_issn("204X-1723"), MalformedIssn);
    CHECK_THROWS_AS(normalize_issn(""), MalformedIssn);
}

TEST_CASE("try_normalize_issn reports status without throwing") {
    CHECK(try_normalize_issn("2041-1723").status == IssnParse::Status::Ok);
    const IssnParse bad = try_normalize_issn("1234-5678");
    CHECK(bad.status == IssnParse::Status::BadChecksum);
    CHECK(bad.value == "1234-5678");  // normalized candidate kept for lax mode
    CHECK(try_normalize_issn("junk").status == IssnParse::Status::Malformed);
}

TEST_CASE("normalization is idempotent on random valid ISSNs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        std::string prefix;
        for (int d = 0; d < 7; ++d) prefix.push_back(static_cast<char>('0' + rng() % 10));
        const std::string issn = prefix + issn_check_digit(prefix);
        const std::string once = normalize_issn(issn);
        CHECK(normalize_issn(once) == once);
    }
}
