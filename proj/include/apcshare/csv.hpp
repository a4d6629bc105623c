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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apcshare {

struct CsvRecord {
    std::size_t line = 0;  // 1-based line the record starts on
    std::vector<std::string> fields;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRecord> rows;

    /// Case-insensitive header lookup (surrounding whitespace ignored).
    std::optional<std::size_t> column(std::string_view name) const;
};

/// RFC-4180-style reader: quoted fields, doubled quotes, embedded newlines,
/// CRLF line ends, optional UTF-8 BOM. Blank lines are skipped.
/// Throws FileUnreadable when the file cannot be opened.
CsvTable read_csv(const std::filesystem::path& path);

/// Quotes a value when it contains separators, quotes or newlines.
std::string csv_field(std::string_view value);

/// Joins pre-escaped or plain fields into one CSV line (no newline).
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace apcshare
