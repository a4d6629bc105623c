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

#include "apcshare/attribution.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace apcshare;
using namespace apcshare::testing;

namespace {

// sector_count in {0,1,2}, nonsector_count in {0,1}, one author per
// institution plus a foreign co-author when requested.
Publication grid_publication(int sector_count, int nonsector_count, bool foreign) {
    std::vector<AuthorRecord> authors;
    int position = 1;
    for (int i = 0; i < sector_count; ++i, ++position)
        authors.push_back(author(position, position == 1, {"sector" + std::to_string(i)}));
    for (int i = 0; i < nonsector_count; ++i, ++position)
        authors.push_back(author(position, position == 1, {"plain" + std::to_string(i)}));
    if (foreign) authors.push_back(author(position, position == 1, {"abroad@US"}));
    return make_pub("grid", std::move(authors));
}

SectorRegistry grid_registry() {
    SectorRegistry registry;
    registry.add(InstitutionId("sector0"), {Sector::UNIV});
    registry.add(InstitutionId("sector1"), {Sector::MPG});
    return registry;
}

}  // namespace

TEST_CASE("classifier covers the full constellation grid") {
    const SectorRegistry registry = grid_registry();
    struct GridCase {
        int sector;
        int nonsector;
        bool foreign;
        CooperationType expected;
    };
    // (0,0,false) admits no publication at all: no affiliations.
    const std::vector<GridCase> cases = {
        {0, 0, true, CooperationType::OutOfScope},
        {0, 1, false, CooperationType::OutOfScope},
        {0, 1, true, CooperationType::OutOfScope},
        {1, 0, false, CooperationType::K0},
        {1, 0, true, CooperationType::KI},
        {1, 1, false, CooperationType::KN},
        {1, 1, true, CooperationType::KI},
        {2, 0, false, CooperationType::KNSec},
        {2, 0, true, CooperationType::KISec},
        {2, 1, false, CooperationType::KNSec},
        {2, 1, true, CooperationType::KISec},
    };
    for (const GridCase& c : cases) {
        CAPTURE(c.sector);
        CAPTURE(c.nonsector);
        CAPTURE(c.foreign);
        CHECK(classify_cooperation(grid_publication(c.sector, c.nonsector, c.foreign),
                                   registry) == c.expected);
    }
}

TEST_CASE("classifier details") {
    const SectorRegistry registry = grid_registry();

    SUBCASE("inner-institutional cooperation is still K0") {
        const Publication pub = make_pub("p", {author(1, true, {"sector0"}),
                                               author(2, false, {"sector0"})});
        CHECK(classify_cooperation(pub, registry) == CooperationType::K0);
    }
    SUBCASE("an institution is German when any of its affiliations is") {
        const Publication pub = make_pub("p", {author(1, true, {"sector0"}),
                                               author(2, false, {"sector1@CH"})});
        // sector1 appears only with a non-German address here: foreign present.
        CHECK(classify_cooperation(pub, registry) == CooperationType::KI);
    }
    SUBCASE("worked example is a national cross-sector cooperation") {
        CHECK(classify_cooperation(worked_example(), worked_example_registry()) ==
              CooperationType::KNSec);
    }
}

TEST_CASE("classifier is total over random publications") {
    std::mt19937 rng(99);
    const SectorRegistry registry = pool_registry();
    RandomPubConfig config;
    config.max_authors = 12;
    for (int i = 0; i < 500; ++i) {
        const Publication pub = random_publication(rng, "r" + std::to_string(i), config);
        const CooperationType type = classify_cooperation(pub, registry);
        const bool known =
            std::find(kAllCooperationTypes.begin(), kAllCooperationTypes.end(), type) !=
            kAllCooperationTypes.end();
        CHECK(known);
    }
}
