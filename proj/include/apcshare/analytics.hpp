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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apcshare/types.hpp"

namespace apcshare {

// ---------------------------------------------------------------------------
// Publication units

/// Institution x model matrix of summed cost shares. One publication unit is
/// one full publication's worth of cost; for every model the column total
/// equals the number of attributed publications.
struct PublicationUnitsTable {
    std::vector<CostModel> models;  // canonical order 1, 2, 3, 4a, 4b
    std::map<InstitutionId, std::vector<Rational>> cells;  // aligned with `models`
    ParticipantScope scope = ParticipantScope::SectorOnly;
    std::size_t corpus_size = 0;   // publications fed in
    std::size_t attributed = 0;    // publications contributing to every model
    std::vector<std::string> excluded_ids;  // no eligible payer under some model

    bool has_model(CostModel model) const;
    std::size_t model_index(CostModel model) const;  // throws ModelMissing
    Rational cell(const InstitutionId& institution, CostModel model) const;
};

/// Attributes every publication under every requested model. A publication
/// without an eligible payer under ANY requested model is excluded from ALL
/// of them (and listed), keeping the per-model totals comparable.
PublicationUnitsTable compute_publication_units(const std::vector<Publication>& corpus,
                                                const std::set<CostModel>& models,
                                                const SectorRegistry& registry,
                                                ParticipantScope scope);

// ---------------------------------------------------------------------------
// Min/max range per institution

/// pu_min/pu_max/pu_diff are reporting decimals (two places, half-up);
/// pu_diff is exactly pu_max - pu_min of the rounded endpoints. Ties on the
/// extreme models break towards the order 1, 2, 3, 4a, 4b.
struct RangeReportRow {
    InstitutionId institution;
    Rational pu_min;
    Rational pu_max;
    Rational pu_diff;
    CostModel model_min = CostModel::FirstAuthor;
    CostModel model_max = CostModel::FirstAuthor;
};

/// Rows sorted by pu_diff descending, institution ascending on ties.
/// Throws ModelMissing when the table covers fewer than two models.
std::vector<RangeReportRow> range_report(const PublicationUnitsTable& table);

/// Median of the pu_diff column (mean of the middle pair for even counts),
/// rounded half-up to two decimals. Throws EmptyReport.
Rational median_range(const std::vector<RangeReportRow>& report);

/// pu x average APC, rounded half-up to whole euros.
long long estimate_cost(const Rational& publication_units, long long avg_apc_eur);

// ---------------------------------------------------------------------------
// Pairwise model comparison

struct PairwiseRow {
    InstitutionId institution;
    Rational diff;  // cell(lhs) - cell(rhs), two-decimal value
};

struct PairwiseComparison {
    CostModel lhs = CostModel::EqualShares;
    CostModel rhs = CostModel::ReprintAuthor;
    std::vector<PairwiseRow> rows;  // |diff| descending, institution ascending
    Rational mean;
    Rational median;
    Rational max_abs;
};

/// Throws ModelMissing when either model is absent from the table.
PairwiseComparison pairwise_model_comparison(const PublicationUnitsTable& table, CostModel lhs,
                                             CostModel rhs);

// ---------------------------------------------------------------------------
// Sector totals

struct SectorTotalsRow {
    Sector sector = Sector::UNIV;
    std::vector<Rational> totals;  // aligned with `models`
};

struct SectorTotals {
    std::vector<CostModel> models;
    std::vector<SectorTotalsRow> rows;  // fixed sector order
    std::vector<InstitutionId> unknown_institutions;  // in table, not in registry
};

/// An institution belonging to several sectors contributes its full cells to
/// every one of them. Institutions absent from the registry are listed and
/// excluded.
SectorTotals sector_totals(const PublicationUnitsTable& table, const SectorRegistry& registry);

// ---------------------------------------------------------------------------
// Author roles

enum class AuthorRole { First, Reprint };

std::string_view role_token(AuthorRole role);

struct RoleShareRow {
    InstitutionId institution;
    std::size_t n_pubs = 0;
    Rational role_share;  // pubs hosting the role / pubs of the institution
};

struct RoleShareReport {
    AuthorRole role = AuthorRole::First;
    std::size_t min_pubs = 0;
    std::vector<RoleShareRow> rows;  // institution ascending
    Rational mean;                   // unweighted over the reported rows
};

/// Reports registered institutions with strictly more than `min_pubs`
/// publications in the corpus. An institution hosts a role when the
/// role-holding author lists it among their affiliations.
RoleShareReport author_role_shares(const std::vector<Publication>& corpus,
                                   const SectorRegistry& registry, AuthorRole role,
                                   std::size_t min_pubs);

// ---------------------------------------------------------------------------
// Distributions

struct CoopDistributionRow {
    std::string breakdown;  // "ALL" or a sector label
    CooperationType type = CooperationType::K0;
    std::size_t count = 0;
    Rational percent;
};

/// Counts per co-operation type, overall and per sector. A publication
/// involving institutions of several sectors appears in each of those
/// breakdowns. Empty breakdowns are omitted; an empty corpus yields no rows.
std::vector<CoopDistributionRow> cooperation_distribution(const std::vector<Publication>& corpus,
                                                          const SectorRegistry& registry);

struct BoxStats {
    std::size_t n = 0;
    Rational min, q1, median, q3, max;
};

struct AuthorCountDistribution {
    std::map<std::size_t, std::size_t> histogram;  // #authors -> #publications
    std::vector<std::pair<std::string, BoxStats>> box;  // "ALL" + per sector
    std::string quartile_rule;
};

/// Histogram of author counts plus box-plot statistics overall and per
/// sector. Quartiles follow the exclusive median-of-halves rule; the rule is
/// spelled out in the output so downstream plots can state it.
AuthorCountDistribution author_count_distribution(const std::vector<Publication>& corpus,
                                                  const SectorRegistry& registry);

}  // namespace apcshare
