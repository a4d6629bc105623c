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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "apcshare/types.hpp"

namespace apcshare::testing {

/// Institutions spelled "id" (German) or "id@CC" for other countries.
inline AuthorRecord author(int position, bool is_reprint,
                           const std::vector<std::string>& institutions) {
    AuthorRecord record;
    record.position = position;
    record.is_reprint = is_reprint;
    for (const std::string& spec : institutions) {
        const auto at = spec.find('@');
        if (at == std::string::npos)
            record.affiliations.push_back({InstitutionId(spec), "DE"});
        else
            record.affiliations.push_back(
                {InstitutionId(spec.substr(0, at)), spec.substr(at + 1)});
    }
    return record;
}

inline Publication make_pub(std::string id, std::vector<AuthorRecord> authors, int year = 2016,
                            std::set<std::string> doc_types = {"Article"},
                            std::set<std::string> issns = {}) {
    Publication pub;
    pub.id = std::move(id);
    pub.year = year;
    pub.doc_types = std::move(doc_types);
    pub.issns = std::move(issns);
    pub.authors = std::move(authors);
    return pub;
}

/// Five authors over four institutions: A1 (first and reprint author) at I1,
/// A2 at I2 and I3, A3..A5 at I4. The standing example used across the
/// attribution tests.
inline Publication worked_example() {
    return make_pub("worked-example",
                    {
                        author(1, true, {"I1"}),
                        author(2, false, {"I2", "I3"}),
                        author(3, false, {"I4"}),
                        author(4, false, {"I4"}),
                        author(5, false, {"I4"}),
                    },
                    2016, {"Article"}, {"2041-1723"});
}

inline SectorRegistry worked_example_registry() {
    SectorRegistry registry;
    registry.add(InstitutionId("I1"), {Sector::UNIV}, "Institute One");
    registry.add(InstitutionId("I2"), {Sector::UNIV}, "Institute Two");
    registry.add(InstitutionId("I3"), {Sector::MPG}, "Institute Three");
    registry.add(InstitutionId("I4"), {Sector::HGF}, "Institute Four");
    return registry;
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        dir_ = std::filesystem::temp_directory_path() /
               ("apcshare-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return dir_; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        const std::filesystem::path file = dir_ / name;
        std::ofstream out(file, std::ios::binary);
        out << content;
        return file;
    }

private:
    std::filesystem::path dir_;
};

}  // namespace apcshare::testing
