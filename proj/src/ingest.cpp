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

#include "apcshare/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "apcshare/attribution.hpp"
#include "apcshare/csv.hpp"
#include "apcshare/errors.hpp"

namespace apcshare {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string trim(std::string_view text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

const json& require_key(const json& object, const char* key) {
    auto it = object.find(key);
    if (it == object.end()) throw Error(std::string("missing key '") + key + "'");
    return *it;
}

std::string require_string(const json& object, const char* key) {
    const json& value = require_key(object, key);
    if (!value.is_string()) throw Error(std::string("'") + key + "' must be a string");
    return value.get<std::string>();
}

int require_int(const json& object, const char* key) {
    const json& value = require_key(object, key);
    if (!value.is_number_integer()) throw Error(std::string("'") + key + "' must be an integer");
    return value.get<int>();
}

bool require_bool(const json& object, const char* key) {
    const json& value = require_key(object, key);
    if (!value.is_boolean()) throw Error(std::string("'") + key + "' must be a boolean");
    return value.get<bool>();
}

const json& require_array(const json& object, const char* key) {
    const json& value = require_key(object, key);
    if (!value.is_array()) throw Error(std::string("'") + key + "' must be an array");
    return value;
}

Publication publication_from_json(const json& j) {
    if (!j.is_object()) throw Error("record is not a JSON object");

    Publication pub;
    pub.id = require_string(j, "id");
    pub.year = require_int(j, "year");
    for (const json& t : require_array(j, "doc_types")) {
        if (!t.is_string()) throw Error("'doc_types' entries must be strings");
        pub.doc_types.insert(t.get<std::string>());
    }
    for (const json& s : require_array(j, "issns")) {
        if (!s.is_string()) throw Error("'issns' entries must be strings");
        pub.issns.insert(s.get<std::string>());
    }

    for (const json& a : require_array(j, "authors")) {
        if (!a.is_object()) throw Error("'authors' entries must be objects");
        AuthorRecord author;
        author.position = require_int(a, "position");
        author.is_reprint = require_bool(a, "is_reprint");
        for (const json& aff : require_array(a, "affiliations")) {
            if (!aff.is_object()) throw Error("'affiliations' entries must be objects");
            const std::string inst = require_string(aff, "institution_id");
            if (inst.empty()) throw Error("'institution_id' must be non-empty");
            Affiliation parsed{InstitutionId(inst), require_string(aff, "country")};
            // Same institution listed twice for one author: keep the first.
            const bool duplicate =
                std::any_of(author.affiliations.begin(), author.affiliations.end(),
                            [&](const Affiliation& existing) {
                                return existing.institution == parsed.institution;
                            });
            if (!duplicate) author.affiliations.push_back(std::move(parsed));
        }
        pub.authors.push_back(std::move(author));
    }

    std::sort(pub.authors.begin(), pub.authors.end(),
              [](const AuthorRecord& a, const AuthorRecord& b) { return a.position < b.position; });

    const std::vector<std::string> problems = validate_publication(pub);
    if (!problems.empty()) {
        std::string joined;
        for (const std::string& p : problems) {
            if (!joined.empty()) joined += "; ";
            joined += p;
        }
        throw Error(joined);
    }
    return pub;
}

ordered_json publication_to_json(const Publication& pub) {
    ordered_json j;
    j["id"] = pub.id;
    j["year"] = pub.year;
    j["doc_types"] = pub.doc_types;
    j["issns"] = pub.issns;
    ordered_json authors = ordered_json::array();
    for (const AuthorRecord& author : pub.authors) {
        ordered_json a;
        a["position"] = author.position;
        a["is_reprint"] = author.is_reprint;
        ordered_json affs = ordered_json::array();
        for (const Affiliation& aff : author.affiliations) {
            ordered_json entry;
            entry["institution_id"] = aff.institution.value();
            entry["country"] = aff.country;
            affs.push_back(std::move(entry));
        }
        a["affiliations"] = std::move(affs);
        authors.push_back(std::move(a));
    }
    j["authors"] = std::move(authors);
    return j;
}

}  // namespace

GoldOaLoadResult load_gold_oa_list(const std::filesystem::path& path, IssnPolicy policy) {
    const CsvTable table = read_csv(path);
    const std::optional<std::size_t> issn_col = table.column("issn");
    if (!issn_col)
        throw EmptyList("'" + path.string() + "': no 'issn' column (empty or wrong header)");

    GoldOaLoadResult result;
    result.data_rows = table.rows.size();
    for (const CsvRecord& row : table.rows) {
        const std::string raw =
            row.fields.size() > *issn_col ? trim(row.fields[*issn_col]) : std::string();
        if (raw.empty()) {
            result.warnings.push_back({row.line, "empty issn field"});
            continue;
        }
        const IssnParse parsed = try_normalize_issn(raw);
        switch (parsed.status) {
            case IssnParse::Status::Ok:
                result.list.insert(parsed.value);
                ++result.valid_rows;
                break;
            case IssnParse::Status::Malformed:
                result.warnings.push_back({row.line, "malformed issn '" + raw + "'"});
                break;
            case IssnParse::Status::BadChecksum:
                if (policy == IssnPolicy::Lax) {
                    result.warnings.push_back(
                        {row.line, "issn '" + raw + "' fails the check digit (kept: lax mode)"});
                    result.list.insert(parsed.value);
                    ++result.valid_rows;
                } else {
                    result.warnings.push_back(
                        {row.line, "issn '" + raw + "' fails the check digit"});
                }
                break;
        }
    }
    if (result.list.empty())
        throw EmptyList("'" + path.string() + "': zero valid issn rows");
    return result;
}

bool is_gold_oa(const Publication& pub, const GoldOaIssnList& list, IssnPolicy policy) {
    for (const std::string& raw : pub.issns) {
        const IssnParse parsed = try_normalize_issn(raw);
        const bool usable = parsed.status == IssnParse::Status::Ok ||
                            (policy == IssnPolicy::Lax &&
                             parsed.status == IssnParse::Status::BadChecksum);
        if (usable && list.contains(parsed.value)) return true;
    }
    return false;
}

CorpusLoadResult parse_publication_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable("cannot open '" + path.string() + "'");

    CorpusLoadResult result;
    std::map<std::string, std::size_t> id_lines;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        Publication pub;
        try {
            pub = publication_from_json(json::parse(line));
        } catch (const json::parse_error&) {
            result.warnings.push_back({lineno, "invalid JSON"});
            continue;
        } catch (const std::exception& e) {
            result.warnings.push_back({lineno, e.what()});
            continue;
        }

        auto [it, inserted] = id_lines.emplace(pub.id, lineno);
        if (!inserted)
            throw DuplicateId("duplicate publication id '" + pub.id + "' (lines " +
                              std::to_string(it->second) + " and " + std::to_string(lineno) + ")");
        result.publications.push_back(std::move(pub));
    }
    return result;
}

void write_publication_corpus(const std::filesystem::path& path,
                              const std::vector<Publication>& publications) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileUnreadable("cannot write '" + path.string() + "'");
    for (const Publication& pub : publications)
        out << publication_to_json(pub).dump() << "\n";
}

namespace {

// "1234", "1234.5" or "1234.56" -> cents. Returns nullopt on anything else.
std::optional<long long> parse_euro_cents(std::string_view text) {
    const std::string body = trim(text);
    if (body.empty()) return std::nullopt;
    long long cents = 0;
    std::size_t i = 0;
    bool any_digit = false;
    for (; i < body.size() && body[i] != '.'; ++i) {
        if (body[i] < '0' || body[i] > '9') return std::nullopt;
        if (cents > 1'000'000'000'000LL) return std::nullopt;
        cents = cents * 10 + (body[i] - '0');
        any_digit = true;
    }
    if (!any_digit) return std::nullopt;
    cents *= 100;
    if (i < body.size()) {  // fraction part
        ++i;
        const std::size_t fraction_digits = body.size() - i;
        if (fraction_digits == 0 || fraction_digits > 2) return std::nullopt;
        long long fraction = 0;
        for (; i < body.size(); ++i) {
            if (body[i] < '0' || body[i] > '9') return std::nullopt;
            fraction = fraction * 10 + (body[i] - '0');
        }
        if (fraction_digits == 1) fraction *= 10;
        cents += fraction;
    }
    return cents;
}

std::optional<bool> parse_bool(std::string_view text) {
    const std::string t = lower(trim(text));
    if (t == "true") return true;
    if (t == "false") return false;
    return std::nullopt;
}

}  // namespace

PaymentsLoadResult load_apc_payments(const std::filesystem::path& path, IssnPolicy policy) {
    const CsvTable table = read_csv(path);
    const auto need = [&](const char* name) {
        const std::optional<std::size_t> col = table.column(name);
        if (!col)
            throw FileUnreadable("'" + path.string() + "': missing required column '" +
                                 name + "'");
        return *col;
    };
    const std::size_t col_institution = need("institution");
    const std::size_t col_period = need("period");
    const std::size_t col_euro = need("euro");
    const std::size_t col_hybrid = need("is_hybrid");
    const std::optional<std::size_t> col_issn = table.column("issn");
    const std::optional<std::size_t> col_doi = table.column("doi");

    const auto field = [](const CsvRecord& row, std::size_t col) {
        return row.fields.size() > col ? trim(row.fields[col]) : std::string();
    };

    PaymentsLoadResult result;
    for (const CsvRecord& row : table.rows) {
        ApcPaymentRecord record;
        record.institution = field(row, col_institution);
        if (record.institution.empty()) {
            result.warnings.push_back({row.line, "empty institution"});
            continue;
        }

        const std::string period_text = field(row, col_period);
        try {
            record.period = std::stoi(period_text);
        } catch (const std::exception&) {
            result.warnings.push_back({row.line, "invalid period '" + period_text + "'"});
            continue;
        }
        if (record.period < 1990 || record.period > 2100) {
            result.warnings.push_back({row.line, "implausible period '" + period_text + "'"});
            continue;
        }

        const std::string euro_text = field(row, col_euro);
        const std::optional<long long> cents = parse_euro_cents(euro_text);
        if (!cents || *cents <= 0) {
            result.warnings.push_back({row.line, "invalid euro amount '" + euro_text + "'"});
            continue;
        }
        record.euro_cents = *cents;

        const std::string hybrid_text = field(row, col_hybrid);
        const std::optional<bool> hybrid = parse_bool(hybrid_text);
        if (!hybrid) {
            result.warnings.push_back({row.line, "invalid is_hybrid '" + hybrid_text + "'"});
            continue;
        }
        record.is_hybrid = *hybrid;

        if (col_issn) {
            const std::string raw = field(row, *col_issn);
            if (!raw.empty()) {
                const IssnParse parsed = try_normalize_issn(raw);
                const bool usable = parsed.status == IssnParse::Status::Ok ||
                                    (policy == IssnPolicy::Lax &&
                                     parsed.status == IssnParse::Status::BadChecksum);
                if (!usable) {
                    result.warnings.push_back({row.line, "invalid issn '" + raw + "'"});
                    continue;
                }
                if (parsed.status == IssnParse::Status::BadChecksum)
                    result.warnings.push_back(
                        {row.line, "issn '" + raw + "' fails the check digit (kept: lax mode)"});
                record.issn = parsed.value;
            }
        }
        if (col_doi) {
            const std::string doi = field(row, *col_doi);
            if (!doi.empty()) record.doi = doi;
        }
        result.records.push_back(std::move(record));
    }
    return result;
}

long long average_apc(const std::vector<ApcPaymentRecord>& records, std::optional<int> period,
                      std::optional<bool> hybrid) {
    long long total_cents = 0;
    long long count = 0;
    for (const ApcPaymentRecord& record : records) {
        if (period && record.period != *period) continue;
        if (hybrid && record.is_hybrid != *hybrid) continue;
        total_cents += record.euro_cents;
        ++count;
    }
    if (count == 0) throw EmptySelection("no payment records match the filter");
    Rational mean_euro(mpz_class(static_cast<long>(total_cents)),
                       mpz_class(static_cast<long>(100 * count)));
    mean_euro.canonicalize();
    return round_half_up_to_int64(mean_euro);
}

RegistryLoadResult load_sector_registry(const std::filesystem::path& path) {
    const CsvTable table = read_csv(path);
    const std::optional<std::size_t> col_id = table.column("institution_id");
    const std::optional<std::size_t> col_sectors = table.column("sectors");
    if (!col_id || !col_sectors)
        throw EmptyList("'" + path.string() +
                        "': header must name institution_id and sectors columns");
    const std::optional<std::size_t> col_name = table.column("name");

    RegistryLoadResult result;
    for (const CsvRecord& row : table.rows) {
        const std::string id =
            row.fields.size() > *col_id ? trim(row.fields[*col_id]) : std::string();
        if (id.empty()) {
            result.warnings.push_back({row.line, "empty institution_id"});
            continue;
        }
        const std::string sectors_text =
            row.fields.size() > *col_sectors ? trim(row.fields[*col_sectors]) : std::string();

        std::set<Sector> sectors;
        bool bad_token = false;
        std::stringstream split(sectors_text);
        std::string token;
        while (std::getline(split, token, ';')) {
            const std::string t = trim(token);
            if (t.empty()) continue;
            const std::optional<Sector> sector = sector_from_token(t);
            if (!sector) {
                result.warnings.push_back({row.line, "unknown sector '" + t + "'"});
                bad_token = true;
                break;
            }
            sectors.insert(*sector);
        }
        if (bad_token) continue;
        if (sectors.empty()) {
            result.warnings.push_back({row.line, "no sectors listed"});
            continue;
        }

        const InstitutionId inst(id);
        if (result.registry.contains(inst))
            result.warnings.push_back({row.line, "duplicate institution_id '" + id +
                                                     "' (sector sets merged)"});
        std::string name;
        if (col_name && row.fields.size() > *col_name) name = trim(row.fields[*col_name]);
        result.registry.add(inst, std::move(sectors), std::move(name));
    }
    if (result.registry.empty())
        throw EmptyList("'" + path.string() + "': zero valid registry rows");
    return result;
}

CorpusFilter identity_filter() {
    CorpusFilter filter;
    filter.year_min = 0;
    filter.year_max = 9999;
    filter.coop_types = {kAllCooperationTypes.begin(), kAllCooperationTypes.end()};
    filter.require_gold_oa = false;
    filter.require_included_doctype = false;
    filter.require_sector_first_and_reprint = false;
    return filter;
}

namespace {

bool sector_roles_present(const Publication& pub, const SectorRegistry& registry) {
    const auto hosts_registered = [&](const AuthorRecord& author) {
        return std::any_of(author.affiliations.begin(), author.affiliations.end(),
                           [&](const Affiliation& aff) {
                               return registry.contains(aff.institution);
                           });
    };
    if (!hosts_registered(pub.first_author())) return false;
    return std::any_of(pub.authors.begin(), pub.authors.end(), [&](const AuthorRecord& author) {
        return author.is_reprint && hosts_registered(author);
    });
}

}  // namespace

std::vector<Publication> filter_corpus(const std::vector<Publication>& corpus,
                                       const CorpusFilter& filter, const GoldOaIssnList& list,
                                       const SectorRegistry& registry, IssnPolicy policy,
                                       FilterAudit* audit) {
    if (audit) {
        audit->input = corpus.size();
        audit->stages.clear();
    }

    std::vector<Publication> current = corpus;
    const auto apply_stage = [&](const std::string& name, bool enabled, auto&& keep) {
        if (enabled) {
            std::vector<Publication> next;
            next.reserve(current.size());
            for (const Publication& pub : current)
                if (keep(pub)) next.push_back(pub);
            current = std::move(next);
        }
        if (audit) audit->stages.push_back({name, enabled, current.size()});
    };

    apply_stage("year", true, [&](const Publication& pub) {
        return pub.year >= filter.year_min && pub.year <= filter.year_max;
    });
    apply_stage("cooperation", true, [&](const Publication& pub) {
        return filter.coop_types.contains(classify_cooperation(pub, registry));
    });
    apply_stage("gold-oa", filter.require_gold_oa,
                [&](const Publication& pub) { return is_gold_oa(pub, list, policy); });
    apply_stage("doc-type", filter.require_included_doctype,
                [&](const Publication& pub) { return is_included_document(pub); });
    apply_stage("sector-roles", filter.require_sector_first_and_reprint,
                [&](const Publication& pub) { return sector_roles_present(pub, registry); });

    return current;
}

}  // namespace apcshare
