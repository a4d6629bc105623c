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

#include "apcshare/csv.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>

#include "apcshare/errors.hpp"

namespace apcshare {

namespace {

std::string trim_lower(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string out(text.substr(begin, end - begin));
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_blank_record(const std::vector<std::string>& fields) {
    return fields.size() == 1 && fields.front().empty();
}

}  // namespace

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
    const std::string wanted = trim_lower(name);
    for (std::size_t i = 0; i < header.size(); ++i)
        if (trim_lower(header[i]) == wanted) return i;
    return std::nullopt;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable("cannot open '" + path.string() + "'");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (data.starts_with("\xEF\xBB\xBF")) data.erase(0, 3);

    CsvTable table;
    std::vector<std::string> fields;
    std::string current;
    bool in_quotes = false;
    std::size_t line = 1;
    std::size_t record_line = 1;

    auto flush_record = [&]() {
        fields.push_back(std::move(current));
        current.clear();
        if (!is_blank_record(fields)) {
            if (table.header.empty())
                table.header = std::move(fields);
            else
                table.rows.push_back({record_line, std::move(fields)});
        }
        fields = {};
    };

    for (std::size_t i = 0; i < data.size(); ++i) {
        const char c = data[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                current.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"': in_quotes = true; break;
            case ',':
                fields.push_back(std::move(current));
                current.clear();
                break;
            case '\r': break;
            case '\n':
                flush_record();
                ++line;
                record_line = line;
                break;
            default: current.push_back(c);
        }
    }
    if (!current.empty() || !fields.empty()) flush_record();
    return table;
}

std::string csv_field(std::string_view value) {
    const bool needs_quotes =
        value.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(value);
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += fields[i];
    }
    return out;
}

}  // namespace apcshare
