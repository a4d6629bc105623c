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

#include "apcshare/analytics.hpp"

#include <algorithm>

#include "apcshare/attribution.hpp"
#include "apcshare/errors.hpp"

namespace apcshare {

namespace {

constexpr std::string_view kQuartileRule =
    "exclusive median-of-halves: the median splits the sorted values, is excluded from both "
    "halves for odd counts, and even-sized sets take the mean of the middle pair";

Rational median_of_sorted(const std::vector<Rational>& sorted) {
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
}

}  // namespace

bool PublicationUnitsTable::has_model(CostModel model) const {
    return std::find(models.begin(), models.end(), model) != models.end();
}

std::size_t PublicationUnitsTable::model_index(CostModel model) const {
    const auto it = std::find(models.begin(), models.end(), model);
    if (it == models.end())
        throw ModelMissing("model '" + std::string(model_token(model)) + "' not in table");
    return static_cast<std::size_t>(it - models.begin());
}

Rational PublicationUnitsTable::cell(const InstitutionId& institution, CostModel model) const {
    const std::size_t index = model_index(model);
    const auto it = cells.find(institution);
    return it == cells.end() ? Rational(0) : it->second[index];
}

PublicationUnitsTable compute_publication_units(const std::vector<Publication>& corpus,
                                                const std::set<CostModel>& models,
                                                const SectorRegistry& registry,
                                                ParticipantScope scope) {
    PublicationUnitsTable table;
    table.scope = scope;
    table.corpus_size = corpus.size();
    for (CostModel model : kAllCostModels)
        if (models.contains(model)) table.models.push_back(model);

    for (const Publication& pub : corpus) {
        std::vector<ShareVector> per_model;
        per_model.reserve(table.models.size());
        try {
            for (CostModel model : table.models)
                per_model.push_back(attribute(pub, model, registry, scope));
        } catch (const NoEligiblePayer&) {
            // Unattributable under one model: drop from all of them so the
            // per-model totals stay comparable.
            table.excluded_ids.push_back(pub.id);
            continue;
        }
        for (std::size_t m = 0; m < per_model.size(); ++m) {
            for (const auto& [institution, share] : per_model[m].entries()) {
                auto [it, inserted] = table.cells.try_emplace(
                    institution, std::vector<Rational>(table.models.size(), Rational(0)));
                it->second[m] += share;
            }
        }
    }
    table.attributed = table.corpus_size - table.excluded_ids.size();
    return table;
}

std::vector<RangeReportRow> range_report(const PublicationUnitsTable& table) {
    if (table.models.size() < 2)
        throw ModelMissing("range report needs at least two models");

    std::vector<RangeReportRow> rows;
    rows.reserve(table.cells.size());
    for (const auto& [institution, cells] : table.cells) {
        std::size_t min_index = 0, max_index = 0;
        for (std::size_t m = 1; m < cells.size(); ++m) {
            if (cells[m] < cells[min_index]) min_index = m;
            if (cells[m] > cells[max_index]) max_index = m;
        }
        RangeReportRow row{institution,
                           round_half_up(cells[min_index], 2),
                           round_half_up(cells[max_index], 2),
                           Rational(0),
                           table.models[min_index],
                           table.models[max_index]};
        row.pu_diff = row.pu_max - row.pu_min;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const RangeReportRow& a, const RangeReportRow& b) {
        if (a.pu_diff != b.pu_diff) return a.pu_diff > b.pu_diff;
        return a.institution < b.institution;
    });
    return rows;
}

Rational median_range(const std::vector<RangeReportRow>& report) {
    if (report.empty()) throw EmptyReport("range report is empty");
    std::vector<Rational> diffs;
    diffs.reserve(report.size());
    for (const RangeReportRow& row : report) diffs.push_back(row.pu_diff);
    std::sort(diffs.begin(), diffs.end());
    return round_half_up(median_of_sorted(diffs), 2);
}

long long estimate_cost(const Rational& publication_units, long long avg_apc_eur) {
    return round_half_up_to_int64(publication_units * Rational(static_cast<long>(avg_apc_eur)));
}

PairwiseComparison pairwise_model_comparison(const PublicationUnitsTable& table, CostModel lhs,
                                             CostModel rhs) {
    const std::size_t lhs_index = table.model_index(lhs);
    const std::size_t rhs_index = table.model_index(rhs);

    PairwiseComparison cmp;
    cmp.lhs = lhs;
    cmp.rhs = rhs;
    for (const auto& [institution, cells] : table.cells)
        cmp.rows.push_back({institution, round_half_up(cells[lhs_index] - cells[rhs_index], 2)});
    std::sort(cmp.rows.begin(), cmp.rows.end(), [](const PairwiseRow& a, const PairwiseRow& b) {
        const Rational abs_a = abs(a.diff), abs_b = abs(b.diff);
        if (abs_a != abs_b) return abs_a > abs_b;
        return a.institution < b.institution;
    });

    if (!cmp.rows.empty()) {
        std::vector<Rational> diffs;
        diffs.reserve(cmp.rows.size());
        Rational total(0);
        for (const PairwiseRow& row : cmp.rows) {
            diffs.push_back(row.diff);
            total += row.diff;
            Rational magnitude = abs(row.diff);
            if (magnitude > cmp.max_abs) cmp.max_abs = magnitude;
        }
        cmp.mean = total / Rational(static_cast<long>(diffs.size()));
        std::sort(diffs.begin(), diffs.end());
        cmp.median = median_of_sorted(diffs);
    }
    return cmp;
}

SectorTotals sector_totals(const PublicationUnitsTable& table, const SectorRegistry& registry) {
    SectorTotals result;
    result.models = table.models;
    for (Sector sector : kAllSectors)
        result.rows.push_back({sector, std::vector<Rational>(table.models.size(), Rational(0))});

    for (const auto& [institution, cells] : table.cells) {
        const std::set<Sector>* sectors = registry.sectors_of(institution);
        if (!sectors) {
            result.unknown_institutions.push_back(institution);
            continue;
        }
        for (std::size_t s = 0; s < kAllSectors.size(); ++s) {
            if (!sectors->contains(kAllSectors[s])) continue;
            for (std::size_t m = 0; m < cells.size(); ++m)
                result.rows[s].totals[m] += cells[m];
        }
    }
    return result;
}

std::string_view role_token(AuthorRole role) {
    return role == AuthorRole::First ? "first" : "reprint";
}

RoleShareReport author_role_shares(const std::vector<Publication>& corpus,
                                   const SectorRegistry& registry, AuthorRole role,
                                   std::size_t min_pubs) {
    struct Tally {
        std::size_t pubs = 0;
        std::size_t hits = 0;
    };
    std::map<InstitutionId, Tally> tallies;

    for (const Publication& pub : corpus) {
        std::set<InstitutionId> present;
        for (const InstitutionId& institution : pub.institutions())
            if (registry.contains(institution)) present.insert(institution);

        std::set<InstitutionId> hosting;
        const auto collect = [&](const AuthorRecord& author) {
            for (const Affiliation& aff : author.affiliations)
                if (registry.contains(aff.institution)) hosting.insert(aff.institution);
        };
        if (role == AuthorRole::First) {
            collect(pub.first_author());
        } else {
            for (const AuthorRecord& author : pub.authors)
                if (author.is_reprint) collect(author);
        }

        for (const InstitutionId& institution : present) ++tallies[institution].pubs;
        for (const InstitutionId& institution : hosting) ++tallies[institution].hits;
    }

    RoleShareReport report;
    report.role = role;
    report.min_pubs = min_pubs;
    Rational total(0);
    for (const auto& [institution, tally] : tallies) {
        if (tally.pubs <= min_pubs) continue;
        RoleShareRow row{institution, tally.pubs,
                         make_rational(static_cast<long>(tally.hits),
                                       static_cast<long>(tally.pubs))};
        total += row.role_share;
        report.rows.push_back(std::move(row));
    }
    if (!report.rows.empty())
        report.mean = total / Rational(static_cast<long>(report.rows.size()));
    return report;
}

std::vector<CoopDistributionRow> cooperation_distribution(const std::vector<Publication>& corpus,
                                                          const SectorRegistry& registry) {
    std::vector<CooperationType> classified;
    classified.reserve(corpus.size());
    for (const Publication& pub : corpus)
        classified.push_back(classify_cooperation(pub, registry));

    std::vector<CoopDistributionRow> rows;
    const auto add_breakdown = [&](const std::string& name, const std::vector<bool>& member) {
        std::map<CooperationType, std::size_t> counts;
        std::size_t total = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            if (!member[i]) continue;
            ++counts[classified[i]];
            ++total;
        }
        if (total == 0) return;
        for (CooperationType type : kAllCooperationTypes) {
            const std::size_t count = counts.count(type) ? counts.at(type) : 0;
            rows.push_back({name, type, count,
                            Rational(100 * static_cast<long>(count)) /
                                Rational(static_cast<long>(total))});
        }
    };

    add_breakdown("ALL", std::vector<bool>(corpus.size(), true));
    for (Sector sector : kAllSectors) {
        std::vector<bool> member(corpus.size(), false);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            for (const InstitutionId& institution : corpus[i].institutions()) {
                const std::set<Sector>* sectors = registry.sectors_of(institution);
                if (sectors && sectors->contains(sector)) {
                    member[i] = true;
                    break;
                }
            }
        }
        add_breakdown(std::string(sector_label(sector)), member);
    }
    return rows;
}

namespace {

BoxStats box_stats(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    BoxStats stats;
    stats.n = values.size();
    stats.min = values.front();
    stats.max = values.back();
    if (values.size() == 1) {
        stats.q1 = stats.median = stats.q3 = values.front();
        return stats;
    }
    stats.median = median_of_sorted(values);
    const std::size_t half = values.size() / 2;
    std::vector<Rational> lower(values.begin(), values.begin() + half);
    std::vector<Rational> upper(values.end() - half, values.end());
    stats.q1 = median_of_sorted(lower);
    stats.q3 = median_of_sorted(upper);
    return stats;
}

}  // namespace

AuthorCountDistribution author_count_distribution(const std::vector<Publication>& corpus,
                                                  const SectorRegistry& registry) {
    AuthorCountDistribution dist;
    dist.quartile_rule = kQuartileRule;
    for (const Publication& pub : corpus) ++dist.histogram[pub.authors.size()];

    const auto add_group = [&](const std::string& name, const std::vector<Rational>& values) {
        if (!values.empty()) dist.box.emplace_back(name, box_stats(values));
    };

    std::vector<Rational> all;
    all.reserve(corpus.size());
    for (const Publication& pub : corpus)
        all.emplace_back(static_cast<long>(pub.authors.size()));
    add_group("ALL", all);

    for (Sector sector : kAllSectors) {
        std::vector<Rational> values;
        for (const Publication& pub : corpus) {
            bool member = false;
            for (const InstitutionId& institution : pub.institutions()) {
                const std::set<Sector>* sectors = registry.sectors_of(institution);
                if (sectors && sectors->contains(sector)) {
                    member = true;
                    break;
                }
            }
            if (member) values.emplace_back(static_cast<long>(pub.authors.size()));
        }
        add_group(std::string(sector_label(sector)), values);
    }
    return dist;
}

}  // namespace apcshare
