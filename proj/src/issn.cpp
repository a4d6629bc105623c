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

#include "apcshare/issn.hpp"

#include <cctype>
#include <stdexcept>

#include "apcshare/errors.hpp"

namespace apcshare {

char issn_check_digit(std::string_view first_seven) {
    if (first_seven.size() != 7)
        throw std::invalid_argument("check digit needs exactly 7 digits");
    int sum = 0;
    int weight = 8;
    for (char c : first_seven) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("check digit input must be numeric");
        sum += (c - '0') * weight--;
    }
    const int check = (11 - sum % 11) % 11;
    return check == 10 ? 'X' : static_cast<char>('0' + check);
}

IssnParse try_normalize_issn(std::string_view raw) noexcept {
    std::string compact;
    compact.reserve(9);
    for (char c : raw) {
        if (c == '-' || std::isspace(static_cast<unsigned char>(c))) continue;
        compact.push_back(c);
    }
    if (compact.size() != 8) return {IssnParse::Status::Malformed, {}};

    for (std::size_t i = 0; i < 7; ++i)
        if (compact[i] < '0' || compact[i] > '9') return {IssnParse::Status::Malformed, {}};
    char last = compact[7];
    if (last == 'x') last = 'X';
    if (last != 'X' && (last < '0' || last > '9')) return {IssnParse::Status::Malformed, {}};

    std::string normalized = compact.substr(0, 4) + "-" + compact.substr(4, 3) + last;
    const auto status = issn_check_digit(std::string_view(compact).substr(0, 7)) == last
                            ? IssnParse::Status::Ok
                            : IssnParse::Status::BadChecksum;
    return {status, std::move(normalized)};
}

std::string normalize_issn(std::string_view raw) {
    IssnParse parsed = try_normalize_issn(raw);
    switch (parsed.status) {
        case IssnParse::Status::Ok:
            return std::move(parsed.value);
        case IssnParse::Status::Malformed:
            throw MalformedIssn("malformed ISSN: '" + std::string(raw) + "'");
        case IssnParse::Status::BadChecksum:
            throw ChecksumFailure("ISSN check digit mismatch: '" + std::string(raw) + "'");
    }
    throw MalformedIssn("malformed ISSN: '" + std::string(raw) + "'");
}

}  // namespace apcshare
