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

#include "apcshare/attribution.hpp"
#include "apcshare/errors.hpp"
#include "support/fixtures.hpp"

using namespace apcshare;
using namespace apcshare::testing;

namespace {

ShareVector expect(const std::vector<std::pair<std::string, Rational>>& entries) {
    ShareVector shares;
    for (const auto& [institution, share] : entries)
        shares.add(InstitutionId(institution), share);
    return shares;
}

std::set<InstitutionId> all_participants(const Publication& pub) {
    return pub.institutions();
}

}  // namespace

TEST_CASE("participants under the three scopes") {
    const SectorRegistry registry = worked_example_registry();

    SUBCASE("all institutions qualify under SectorOnly when German and registered") {
        const Publication pub = worked_example();
        CHECK(participants(pub, registry, ParticipantScope::SectorOnly) ==
              std::set<InstitutionId>{InstitutionId("I1"), InstitutionId("I2"),
                                      InstitutionId("I3"), InstitutionId("I4")});
    }
    SUBCASE("GermanOnly drops foreign affiliations") {
        const Publication pub = make_pub("p", {
                                                  author(1, true, {"I1"}),
                                                  author(2, false, {"I2@US", "I3"}),
                                                  author(3, false, {"I4"}),
                                              });
        CHECK(participants(pub, registry, ParticipantScope::GermanOnly) ==
              std::set<InstitutionId>{InstitutionId("I1"), InstitutionId("I3"),
                                      InstitutionId("I4")});
    }
    SUBCASE("SectorOnly keeps only registered institutions") {
        SectorRegistry only_i1;
        only_i1.add(InstitutionId("I1"), {Sector::UNIV});
        CHECK(participants(worked_example(), only_i1, ParticipantScope::SectorOnly) ==
              std::set<InstitutionId>{InstitutionId("I1")});
    }
    SUBCASE("may be empty") {
        const Publication pub = make_pub("p", {author(1, true, {"x@US"})});
        CHECK(participants(pub, registry, ParticipantScope::GermanOnly).empty());
    }
}

TEST_CASE("model 1: first-author institutions") {
    const Publication pub = worked_example();
    CHECK(shares_first_author(pub, all_participants(pub)) == expect({{"I1", Rational(1)}}));

    SUBCASE("splits over multiple first-author affiliations") {
        const Publication multi = make_pub("p", {author(1, true, {"I1", "I2"}),
                                                 author(2, false, {"I3"})});
        CHECK(shares_first_author(multi, all_participants(multi)) ==
              expect({{"I1", make_rational(1, 2)}, {"I2", make_rational(1, 2)}}));
    }
    SUBCASE("single author, single affiliation") {
        const Publication solo = make_pub("p", {author(1, true, {"Ix"})});
        CHECK(shares_first_author(solo, all_participants(solo)) == expect({{"Ix", Rational(1)}}));
    }
    SUBCASE("no participating affiliation") {
        const Publication pub2 = make_pub("p", {author(1, true, {"a@US"}), author(2, false, {"b"})});
        CHECK_THROWS_AS(shares_first_author(pub2, {InstitutionId("b")}), NoEligiblePayer);
    }
}

TEST_CASE("model 2: reprint-author institutions, distinct counting") {
    const Publication pub = worked_example();
    CHECK(shares_reprint_author(pub, all_participants(pub)) == expect({{"I1", Rational(1)}}));

    SUBCASE("two reprint authors at different institutions") {
        const Publication two = make_pub("p", {author(1, false, {"I1"}),
                                               author(2, true, {"I2"}),
                                               author(3, true, {"I4"})});
        CHECK(shares_reprint_author(two, all_participants(two)) ==
              expect({{"I2", make_rational(1, 2)}, {"I4", make_rational(1, 2)}}));
    }
    SUBCASE("two reprint authors of one institution pay once") {
        const Publication same = make_pub("p", {author(1, false, {"I1"}),
                                                author(2, true, {"I4"}),
                                                author(3, true, {"I4"})});
        CHECK(shares_reprint_author(same, all_participants(same)) ==
              expect({{"I4", Rational(1)}}));
    }
    SUBCASE("no reprint author at all") {
        const Publication none = make_pub("p", {author(1, false, {"I1"})});
        CHECK_THROWS_AS(shares_reprint_author(none, all_participants(none)), NoEligiblePayer);
    }
}

TEST_CASE("model 3: equal shares over participants") {
    const Publication pub = worked_example();
    CHECK(shares_equal(pub, all_participants(pub)) ==
          expect({{"I1", make_rational(1, 4)},
                  {"I2", make_rational(1, 4)},
                  {"I3", make_rational(1, 4)},
                  {"I4", make_rational(1, 4)}}));

    SUBCASE("single participant carries everything") {
        CHECK(shares_equal(pub, {InstitutionId("I3")}) == expect({{"I3", Rational(1)}}));
    }
    SUBCASE("empty participant set") {
        CHECK_THROWS_AS(shares_equal(pub, {}), NoEligiblePayer);
    }
}

TEST_CASE("model 4a: author-institution pair counting") {
    const Publication pub = worked_example();
    // Six pairs; three of them belong to I4.
    CHECK(shares_by_author_institution_pairs(pub, all_participants(pub)) ==
          expect({{"I1", make_rational(1, 6)},
                  {"I2", make_rational(1, 6)},
                  {"I3", make_rational(1, 6)},
                  {"I4", make_rational(1, 2)}}));

    SUBCASE("single author, single affiliation") {
        const Publication solo = make_pub("p", {author(1, true, {"Ix"})});
        CHECK(shares_by_author_institution_pairs(solo, all_participants(solo)) ==
              expect({{"Ix", Rational(1)}}));
    }
    SUBCASE("two authors sharing the same two affiliations") {
        const Publication pub2 = make_pub("p", {author(1, true, {"Ia", "Ib"}),
                                                author(2, false, {"Ia", "Ib"})});
        CHECK(shares_by_author_institution_pairs(pub2, all_participants(pub2)) ==
              expect({{"Ia", make_rational(1, 2)}, {"Ib", make_rational(1, 2)}}));
    }
    SUBCASE("non-participant pairs leave numerator and denominator") {
        CHECK(shares_by_author_institution_pairs(pub, {InstitutionId("I4")}) ==
              expect({{"I4", Rational(1)}}));
    }
    SUBCASE("nobody participates") {
        CHECK_THROWS_AS(shares_by_author_institution_pairs(pub, {InstitutionId("other")}),
                        NoEligiblePayer);
    }
}

TEST_CASE("model 4b: fractional authorship") {
    const Publication pub = worked_example();
    CHECK(shares_by_fractional_authorship(pub, all_participants(pub)) ==
          expect({{"I1", make_rational(1, 5)},
                  {"I2", make_rational(1, 10)},
                  {"I3", make_rational(1, 10)},
                  {"I4", make_rational(3, 5)}}));

    SUBCASE("author weight splits over the author's institutions") {
        const Publication pub2 = make_pub("p", {author(1, true, {"Ia"}),
                                                author(2, false, {"Ia", "Ib"})});
        CHECK(shares_by_fractional_authorship(pub2, all_participants(pub2)) ==
              expect({{"Ia", make_rational(3, 4)}, {"Ib", make_rational(1, 4)}}));
    }
    SUBCASE("restricted participants renormalize to 1") {
        // Weight reaching I2+I3 is dropped; I1:I4 stays 1/5 : 3/5.
        CHECK(shares_by_fractional_authorship(pub, {InstitutionId("I1"), InstitutionId("I4")}) ==
              expect({{"I1", make_rational(1, 4)}, {"I4", make_rational(3, 4)}}));
    }
    SUBCASE("nobody participates") {
        CHECK_THROWS_AS(shares_by_fractional_authorship(pub, {InstitutionId("other")}),
                        NoEligiblePayer);
    }
}

TEST_CASE("attribute dispatches and keeps the sum at exactly 1") {
    const Publication pub = worked_example();
    const SectorRegistry registry = worked_example_registry();
    for (CostModel model : kAllCostModels) {
        const ShareVector shares = attribute(pub, model, registry, ParticipantScope::SectorOnly);
        CHECK(shares.sum() == Rational(1));
    }
    CHECK(attribute(pub, CostModel::EqualShares, registry, ParticipantScope::SectorOnly)
              .share_of(InstitutionId("I2")) == make_rational(1, 4));

    SUBCASE("all five models coincide for a single-author publication") {
        const Publication solo = make_pub("p", {author(1, true, {"Ix"})});
        SectorRegistry registry2;
        registry2.add(InstitutionId("Ix"), {Sector::UNIV});
        for (CostModel model : kAllCostModels)
            CHECK(attribute(solo, model, registry2, ParticipantScope::SectorOnly) ==
                  expect({{"Ix", Rational(1)}}));
    }
    SUBCASE("errors propagate") {
        const Publication foreign_first =
            make_pub("p", {author(1, false, {"far@US"}), author(2, true, {"I1"})});
        CHECK_THROWS_AS(attribute(foreign_first, CostModel::FirstAuthor, registry,
                                  ParticipantScope::GermanOnly),
                        NoEligiblePayer);
    }
    SUBCASE("a lone registered institution carries the whole equal share") {
        // national co-authorship where only one participant is registered
        const Publication kn = make_pub(
            "p", {author(1, true, {"I1"}), author(2, false, {"hospital"}),
                  author(3, false, {"agency"})});
        SectorRegistry only_i1;
        only_i1.add(InstitutionId("I1"), {Sector::UNIV});
        CHECK(classify_cooperation(kn, only_i1) == CooperationType::KN);
        CHECK(attribute(kn, CostModel::EqualShares, only_i1, ParticipantScope::SectorOnly) ==
              expect({{"I1", Rational(1)}}));
    }
}

TEST_CASE("document-type inclusion") {
    const auto with_types = [](std::set<std::string> types) {
        return make_pub("p", {author(1, true, {"I1"})}, 2016, std::move(types));
    };
    CHECK(is_included_document(with_types({"Article"})));
    CHECK_FALSE(is_included_document(with_types({"Meeting", "Proceedings Paper"})));
    CHECK(is_included_document(with_types({"Article", "Proceedings Paper"})));
    CHECK(is_included_document(with_types({"ARTICLE"})));  // tolerant of casing
    CHECK_FALSE(is_included_document(with_types({"Film Review"})));
    CHECK(is_included_document(with_types({"Retracted Publication"})));

    CHECK(unknown_doc_types(with_types({"Film Review", "Article"})) ==
          std::vector<std::string>{"Film Review"});
    CHECK(unknown_doc_types(with_types({"Meeting"})).empty());
}

TEST_CASE("publication validation") {
    CHECK(validate_publication(worked_example()).empty());

    Publication no_authors = worked_example();
    no_authors.authors.clear();
    CHECK_FALSE(validate_publication(no_authors).empty());

    Publication gap = worked_example();
    gap.authors[2].position = 7;
    CHECK_FALSE(validate_publication(gap).empty());

    Publication bad_country = worked_example();
    bad_country.authors[0].affiliations[0].country = "de";
    CHECK_FALSE(validate_publication(bad_country).empty());

    Publication no_doc_types = worked_example();
    no_doc_types.doc_types.clear();
    CHECK_FALSE(validate_publication(no_doc_types).empty());
}
