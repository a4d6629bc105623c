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
#include <vector>

#include "apcshare/analytics.hpp"
#include "apcshare/ingest.hpp"

namespace apcshare {

enum class OutputFormat { Csv, Json, Both };

std::optional<OutputFormat> format_from_token(std::string_view token);

/// Everything one CLI invocation may want written. Sections left empty are
/// omitted from the outputs. All emission is deterministic: fixed orderings,
/// fixed rounding (half-up; two decimals for publication units and percents,
/// four for ratios, whole euros for money), no timestamps.
struct ReportBundle {
    std::string command;  // validate | classify | attribute | report
    std::string scope;
    std::string issn_policy;
    FilterAudit audit;

    std::optional<PublicationUnitsTable> pu_table;
    std::vector<RangeReportRow> range_rows;
    std::optional<Rational> median_pu_diff;
    std::vector<PairwiseComparison> pairwise;
    std::optional<SectorTotals> sectors;
    std::optional<RoleShareReport> role_first;
    std::optional<RoleShareReport> role_reprint;
    std::vector<CoopDistributionRow> coop;
    std::optional<AuthorCountDistribution> author_counts;
    std::optional<long long> avg_apc_eur;
};

// CSV renderers. Eurocolumns appear in the range report when an average APC
// is supplied: euro_diff = pu_diff x avg.
std::string render_pu_table_csv(const PublicationUnitsTable& table);
std::string render_range_report_csv(const std::vector<RangeReportRow>& rows,
                                    std::optional<long long> avg_apc_eur);
std::string render_pairwise_csv(const PairwiseComparison& comparison);
std::string render_sector_totals_csv(const SectorTotals& totals);
std::string render_role_shares_csv(const RoleShareReport& report);
std::string render_coop_distribution_csv(const std::vector<CoopDistributionRow>& rows);
std::string render_author_counts_csv(const AuthorCountDistribution& dist);

/// The single JSON document covering every populated section, serialized
/// with stable key order. Decimals are strings to keep the bytes exact.
std::string render_report_json(const ReportBundle& bundle);

/// Writes the populated sections into `out_dir` under the fixed file names
/// (pu_table.csv, range_report.csv, pairwise_<lhs>_<rhs>.csv,
/// sector_totals.csv, role_shares_<role>.csv, coop_distribution.csv,
/// author_counts.csv, report.json). Returns the file names written.
std::vector<std::string> write_reports(const ReportBundle& bundle,
                                       const std::filesystem::path& out_dir,
                                       OutputFormat format);

}  // namespace apcshare
