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

#include "apcshare/csv.hpp"
#include "apcshare/errors.hpp"
#include "apcshare/ingest.hpp"
#include "support/fixtures.hpp"

using namespace apcshare;
using namespace apcshare::testing;

namespace {

const char* kValidLine =
    R"({"id":"p1","year":2016,"doc_types":["Article"],"issns":["2041-1723"],"authors":[{"position":1,"is_reprint":true,"affiliations":[{"institution_id":"I1","country":"DE"}]}]})";

std::string with_id(const std::string& id) {
    std::string line = kValidLine;
    return line.replace(line.find("p1"), 2, id);
}

}  // namespace

TEST_CASE("csv reader handles quoting, CRLF and BOM") {
    TempDir dir;
    const auto path = dir.write("t.csv",
                                "\xEF\xBB\xBFissn,name\r\n"
                                "2041-1723,\"Nature, Communications\"\r\n"
                                "\"1932-6203\",\"say \"\"hi\"\"\"\n"
                                "\n"
                                "2045-2322,multi\nline oops\n");
    const CsvTable table = read_csv(path);
    REQUIRE(table.header == std::vector<std::string>{"issn", "name"});
    REQUIRE(table.rows.size() == 4);  // the unquoted newline starts a new record
    CHECK(table.rows[0].fields[1] == "Nature, Communications");
    CHECK(table.rows[1].fields[1] == "say \"hi\"");
    CHECK(table.rows[0].line == 2);
    CHECK(table.column("ISSN") == 0);
    CHECK_FALSE(table.column("missing").has_value());
    CHECK_THROWS_AS(read_csv(dir.path() / "absent.csv"), FileUnreadable);
}

TEST_CASE("gold list loading") {
    TempDir dir;

    SUBCASE("duplicates collapse after normalization") {
        const auto path = dir.write("g.csv", "issn\n2041-1723\n20411723\n");
        const GoldOaLoadResult result = load_gold_oa_list(path);
        CHECK(result.list == GoldOaIssnList{"2041-1723"});
        CHECK(result.valid_rows == 2);
        CHECK(result.warnings.empty());
    }
    SUBCASE("skip-and-warn keeps the good rows") {
        const auto path = dir.write("g.csv", "issn\n2041-1723\nnot-an-issn\n1932-6203\n");
        const GoldOaLoadResult result = load_gold_oa_list(path);
        CHECK(result.list.size() == 2);
        REQUIRE(result.warnings.size() == 1);
        CHECK(result.warnings[0].line == 3);
        CHECK(result.valid_rows + result.warnings.size() == result.data_rows);
    }
    SUBCASE("bad check digits are skipped strictly, kept laxly") {
        const auto path = dir.write("g.csv", "issn\n1234-5678\n2041-1723\n");
        CHECK(load_gold_oa_list(path).list == GoldOaIssnList{"2041-1723"});
        CHECK(load_gold_oa_list(path, IssnPolicy::Lax).list ==
              GoldOaIssnList{"1234-5678", "2041-1723"});
    }
    SUBCASE("empty or header-less files") {
        CHECK_THROWS_AS(load_gold_oa_list(dir.write("e.csv", "")), EmptyList);
        CHECK_THROWS_AS(load_gold_oa_list(dir.write("h.csv", "journal\nfoo\n")), EmptyList);
        CHECK_THROWS_AS(load_gold_oa_list(dir.write("z.csv", "issn\nbad\n")), EmptyList);
    }
}

TEST_CASE("gold membership of publications") {
    const GoldOaIssnList list{"2041-1723"};
    CHECK(is_gold_oa(worked_example(), list));
    CHECK_FALSE(is_gold_oa(make_pub("p", {author(1, true, {"I1"})}), list));

    Publication multi = worked_example();
    multi.issns = {"0028-0836", "20411723"};  // print ISSN absent, e-ISSN matches
    CHECK(is_gold_oa(multi, list));

    Publication broken = worked_example();
    broken.issns = {"1234-5678"};
    CHECK_FALSE(is_gold_oa(broken, GoldOaIssnList{"1234-5678"}));
    CHECK(is_gold_oa(broken, GoldOaIssnList{"1234-5678"}, IssnPolicy::Lax));
}

TEST_CASE("corpus parsing") {
    TempDir dir;

    SUBCASE("valid lines parse in order") {
        const auto path =
            dir.write("c.jsonl", with_id("a") + "\n" + with_id("b") + "\n" + with_id("c") + "\n");
        const CorpusLoadResult result = parse_publication_corpus(path);
        REQUIRE(result.publications.size() == 3);
        CHECK(result.publications[0].id == "a");
        CHECK(result.publications[2].id == "c");
        CHECK(result.warnings.empty());
    }
    SUBCASE("schema violations are skipped with line numbers") {
        const std::string bad =
            R"({"id":"x","year":2016,"doc_types":["Article"],"issns":[],"authors":[]})";
        const auto path = dir.write("c.jsonl", with_id("a") + "\n" + bad + "\n" + "{oops\n" +
                                                   with_id("b") + "\n");
        const CorpusLoadResult result = parse_publication_corpus(path);
        CHECK(result.publications.size() == 2);
        REQUIRE(result.warnings.size() == 2);
        CHECK(result.warnings[0].line == 2);
        CHECK(result.warnings[1].line == 3);
    }
    SUBCASE("duplicate ids are fatal") {
        const auto path = dir.write("c.jsonl", with_id("a") + "\n" + with_id("a") + "\n");
        CHECK_THROWS_AS(parse_publication_corpus(path), DuplicateId);
    }
    SUBCASE("unsorted positions are reordered; gaps rejected") {
        const std::string shuffled =
            R"({"id":"s","year":2016,"doc_types":["Article"],"issns":[],"authors":[)"
            R"({"position":2,"is_reprint":false,"affiliations":[{"institution_id":"B","country":"DE"}]},)"
            R"({"position":1,"is_reprint":true,"affiliations":[{"institution_id":"A","country":"DE"}]}]})";
        const CorpusLoadResult ok = parse_publication_corpus(dir.write("s.jsonl", shuffled));
        REQUIRE(ok.publications.size() == 1);
        CHECK(ok.publications[0].first_author().affiliations[0].institution ==
              InstitutionId("A"));

        const std::string gapped =
            R"({"id":"g","year":2016,"doc_types":["Article"],"issns":[],"authors":[)"
            R"({"position":1,"is_reprint":true,"affiliations":[{"institution_id":"A","country":"DE"}]},)"
            R"({"position":3,"is_reprint":false,"affiliations":[{"institution_id":"B","country":"DE"}]}]})";
        CHECK(parse_publication_corpus(dir.write("g.jsonl", gapped)).warnings.size() == 1);
    }
    SUBCASE("duplicate affiliations of one author collapse") {
        const std::string doubled =
            R"({"id":"d","year":2016,"doc_types":["Article"],"issns":[],"authors":[)"
            R"({"position":1,"is_reprint":true,"affiliations":[)"
            R"({"institution_id":"A","country":"DE"},{"institution_id":"A","country":"DE"}]}]})";
        const CorpusLoadResult result = parse_publication_corpus(dir.write("d.jsonl", doubled));
        REQUIRE(result.publications.size() == 1);
        CHECK(result.publications[0].first_author().affiliations.size() == 1);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(parse_publication_corpus(dir.path() / "nope.jsonl"), FileUnreadable);
    }
}

TEST_CASE("corpus write/parse round trip") {
    TempDir dir;
    const std::vector<Publication> corpus = {
        worked_example(),
        make_pub("two", {author(1, false, {"A", "B@CH"}), author(2, true, {"C"})}, 2018,
                 {"Review", "Article"}, {"1932-6203", "2045-2322"}),
    };
    const auto path = dir.path() / "out.jsonl";
    write_publication_corpus(path, corpus);
    const CorpusLoadResult reread = parse_publication_corpus(path);
    CHECK(reread.warnings.empty());
    CHECK(reread.publications == corpus);
}

TEST_CASE("payments loading") {
    TempDir dir;
    const std::string header = "institution,period,euro,is_hybrid,issn,doi\n";

    SUBCASE("typed records with optional fields") {
        const auto path = dir.write("p.csv", header +
                                                 "X,2018,1234.00,FALSE,2041-1723,10.1/x\n"
                                                 "Y,2017,999,true,,\n");
        const PaymentsLoadResult result = load_apc_payments(path);
        REQUIRE(result.records.size() == 2);
        CHECK(result.records[0].euro_cents == 123400);
        CHECK(result.records[0].issn == "2041-1723");
        CHECK_FALSE(result.records[0].is_hybrid);
        CHECK(result.records[1].is_hybrid);
        CHECK_FALSE(result.records[1].issn.has_value());
        CHECK_FALSE(result.records[1].doi.has_value());
    }
    SUBCASE("row errors are skipped with warnings") {
        const auto path = dir.write("p.csv", header +
                                                 "X,2018,-5,FALSE,,\n"
                                                 "X,2018,12.345,FALSE,,\n"
                                                 "X,1700,100,FALSE,,\n"
                                                 "X,2018,100,maybe,,\n"
                                                 ",2018,100,FALSE,,\n"
                                                 "X,2018,100.5,FALSE,,\n");
        const PaymentsLoadResult result = load_apc_payments(path);
        REQUIRE(result.records.size() == 1);
        CHECK(result.records[0].euro_cents == 10050);
        CHECK(result.warnings.size() == 5);
    }
    SUBCASE("missing required column is structural") {
        CHECK_THROWS_AS(load_apc_payments(dir.write("m.csv", "institution,period\nX,2018\n")),
                        FileUnreadable);
    }
}

TEST_CASE("average apc") {
    const auto record = [](int period, bool hybrid, long long cents) {
        ApcPaymentRecord r;
        r.institution = "X";
        r.period = period;
        r.is_hybrid = hybrid;
        r.euro_cents = cents;
        return r;
    };
    const std::vector<ApcPaymentRecord> records = {
        record(2018, false, 100000), record(2018, false, 150000), record(2018, false, 212000)};
    CHECK(average_apc(records) == 1540);
    CHECK(average_apc(records, 2018, false) == 1540);

    const std::vector<ApcPaymentRecord> mixed = {record(2018, false, 154000),
                                                 record(2017, true, 999900)};
    CHECK(average_apc(mixed, 2018, false) == 1540);
    CHECK_THROWS_AS(average_apc(mixed, 2019, std::nullopt), EmptySelection);
    CHECK_THROWS_AS(average_apc({}, std::nullopt, std::nullopt), EmptySelection);

    // mean of 1.00 and 1.01 euros: 100.5 cents rounds up
    CHECK(average_apc({record(2018, false, 100), record(2018, false, 101)}) == 1);
}

TEST_CASE("sector registry loading") {
    TempDir dir;

    SUBCASE("multi-sector memberships and names") {
        const auto path = dir.write("r.csv",
                                    "institution_id,name,sectors\n"
                                    "kit,Institute,UNIV;HGF\n"
                                    "mpi,\"MPI, Alpha\",MPG\n");
        const RegistryLoadResult result = load_sector_registry(path);
        CHECK(result.registry.size() == 2);
        CHECK(*result.registry.sectors_of(InstitutionId("kit")) ==
              std::set<Sector>{Sector::UNIV, Sector::HGF});
        CHECK(result.warnings.empty());
    }
    SUBCASE("unknown sector tokens skip the row") {
        const auto path = dir.write("r.csv",
                                    "institution_id,name,sectors\n"
                                    "a,A,UNIV\n"
                                    "b,B,ACME\n");
        const RegistryLoadResult result = load_sector_registry(path);
        CHECK(result.registry.size() == 1);
        CHECK(result.warnings.size() == 1);
    }
    SUBCASE("duplicate ids merge with a warning") {
        const auto path = dir.write("r.csv",
                                    "institution_id,name,sectors\n"
                                    "a,A,UNIV\n"
                                    "a,A,HGF\n");
        const RegistryLoadResult result = load_sector_registry(path);
        CHECK(*result.registry.sectors_of(InstitutionId("a")) ==
              std::set<Sector>{Sector::UNIV, Sector::HGF});
        CHECK(result.warnings.size() == 1);
    }
    SUBCASE("no usable rows") {
        CHECK_THROWS_AS(load_sector_registry(dir.write("r.csv", "institution_id,sectors\n")),
                        EmptyList);
    }
}
