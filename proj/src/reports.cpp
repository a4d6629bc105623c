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

#include "apcshare/reports.hpp"

#include <fstream>

#include <json.hpp>

#include "apcshare/csv.hpp"
#include "apcshare/errors.hpp"

namespace apcshare {

namespace {

using nlohmann::ordered_json;

void append_line(std::string& out, const std::vector<std::string>& fields) {
    out += csv_line(fields);
    out.push_back('\n');
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileUnreadable("cannot write '" + path.string() + "'");
    out << content;
}

}  // namespace

std::optional<OutputFormat> format_from_token(std::string_view token) {
    if (token == "csv") return OutputFormat::Csv;
    if (token == "json") return OutputFormat::Json;
    if (token == "both") return OutputFormat::Both;
    return std::nullopt;
}

std::string render_pu_table_csv(const PublicationUnitsTable& table) {
    std::string out;
    std::vector<std::string> header{"institution"};
    for (CostModel model : table.models) header.emplace_back(model_token(model));
    append_line(out, header);
    for (const auto& [institution, cells] : table.cells) {
        std::vector<std::string> fields{csv_field(institution.value())};
        for (const Rational& cell : cells) fields.push_back(format_decimal(cell, 2));
        append_line(out, fields);
    }
    return out;
}

std::string render_range_report_csv(const std::vector<RangeReportRow>& rows,
                                    std::optional<long long> avg_apc_eur) {
    std::string out;
    std::vector<std::string> header{"institution", "pu_min",    "pu_max",
                                    "pu_diff",     "model_min", "model_max"};
    if (avg_apc_eur) header.emplace_back("euro_diff");
    append_line(out, header);
    for (const RangeReportRow& row : rows) {
        std::vector<std::string> fields{
            csv_field(row.institution.value()),  format_decimal(row.pu_min, 2),
            format_decimal(row.pu_max, 2),       format_decimal(row.pu_diff, 2),
            std::string(model_code(row.model_min)), std::string(model_code(row.model_max))};
        if (avg_apc_eur)
            fields.push_back(std::to_string(estimate_cost(row.pu_diff, *avg_apc_eur)));
        append_line(out, fields);
    }
    return out;
}

std::string render_pairwise_csv(const PairwiseComparison& comparison) {
    std::string out;
    append_line(out, {"institution", "diff"});
    for (const PairwiseRow& row : comparison.rows)
        append_line(out, {csv_field(row.institution.value()), format_decimal(row.diff, 2)});
    return out;
}

std::string render_sector_totals_csv(const SectorTotals& totals) {
    std::string out;
    std::vector<std::string> header{"sector"};
    for (CostModel model : totals.models) header.emplace_back(model_token(model));
    append_line(out, header);
    for (const SectorTotalsRow& row : totals.rows) {
        std::vector<std::string> fields{std::string(sector_label(row.sector))};
        for (const Rational& total : row.totals) fields.push_back(format_decimal(total, 2));
        append_line(out, fields);
    }
    return out;
}

std::string render_role_shares_csv(const RoleShareReport& report) {
    std::string out;
    append_line(out, {"institution", "n_pubs", "role_share"});
    for (const RoleShareRow& row : report.rows)
        append_line(out, {csv_field(row.institution.value()), std::to_string(row.n_pubs),
                          format_decimal(row.role_share, 4)});
    return out;
}

std::string render_coop_distribution_csv(const std::vector<CoopDistributionRow>& rows) {
    std::string out;
    append_line(out, {"breakdown", "coop_type", "count", "percent"});
    for (const CoopDistributionRow& row : rows)
        append_line(out, {row.breakdown, std::string(coop_label(row.type)),
                          std::to_string(row.count), format_decimal(row.percent, 2)});
    return out;
}

std::string render_author_counts_csv(const AuthorCountDistribution& dist) {
    std::string out;
    append_line(out, {"section", "label", "count", "min", "q1", "median", "q3", "max",
                      "quartile_rule"});
    for (const auto& [authors, count] : dist.histogram)
        append_line(out, {"histogram", std::to_string(authors), std::to_string(count), "", "",
                          "", "", "", ""});
    for (const auto& [group, stats] : dist.box)
        append_line(out, {"boxplot", group, std::to_string(stats.n),
                          format_decimal(stats.min, 2), format_decimal(stats.q1, 2),
                          format_decimal(stats.median, 2), format_decimal(stats.q3, 2),
                          format_decimal(stats.max, 2), csv_field(dist.quartile_rule)});
    return out;
}

namespace {

ordered_json audit_json(const FilterAudit& audit) {
    ordered_json j;
    j["input"] = audit.input;
    ordered_json stages = ordered_json::array();
    for (const FilterStage& stage : audit.stages) {
        ordered_json s;
        s["stage"] = stage.name;
        s["enabled"] = stage.enabled;
        s["remaining"] = stage.remaining;
        stages.push_back(std::move(s));
    }
    j["stages"] = std::move(stages);
    return j;
}

ordered_json pu_table_json(const PublicationUnitsTable& table) {
    ordered_json j;
    ordered_json models = ordered_json::array();
    for (CostModel model : table.models) models.push_back(std::string(model_token(model)));
    j["models"] = std::move(models);
    j["scope"] = std::string(scope_token(table.scope));
    j["corpus_size"] = table.corpus_size;
    j["attributed"] = table.attributed;
    j["excluded_ids"] = table.excluded_ids;
    ordered_json rows = ordered_json::object();
    for (const auto& [institution, cells] : table.cells) {
        ordered_json values = ordered_json::array();
        for (const Rational& cell : cells) values.push_back(format_decimal(cell, 2));
        rows[institution.value()] = std::move(values);
    }
    j["publication_units"] = std::move(rows);
    return j;
}

ordered_json range_json(const std::vector<RangeReportRow>& rows,
                        const std::optional<Rational>& median,
                        std::optional<long long> avg_apc_eur) {
    ordered_json j;
    if (median) j["median_pu_diff"] = format_decimal(*median, 2);
    ordered_json out_rows = ordered_json::array();
    for (const RangeReportRow& row : rows) {
        ordered_json r;
        r["institution"] = row.institution.value();
        r["pu_min"] = format_decimal(row.pu_min, 2);
        r["pu_max"] = format_decimal(row.pu_max, 2);
        r["pu_diff"] = format_decimal(row.pu_diff, 2);
        r["model_min"] = std::string(model_code(row.model_min));
        r["model_max"] = std::string(model_code(row.model_max));
        if (avg_apc_eur) r["euro_diff"] = estimate_cost(row.pu_diff, *avg_apc_eur);
        out_rows.push_back(std::move(r));
    }
    j["rows"] = std::move(out_rows);
    return j;
}

ordered_json pairwise_json(const PairwiseComparison& comparison) {
    ordered_json j;
    j["lhs"] = std::string(model_token(comparison.lhs));
    j["rhs"] = std::string(model_token(comparison.rhs));
    ordered_json rows = ordered_json::array();
    for (const PairwiseRow& row : comparison.rows) {
        ordered_json r;
        r["institution"] = row.institution.value();
        r["diff"] = format_decimal(row.diff, 2);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    ordered_json summary;
    summary["mean"] = format_decimal(comparison.mean, 2);
    summary["median"] = format_decimal(comparison.median, 2);
    summary["max_abs"] = format_decimal(comparison.max_abs, 2);
    j["summary"] = std::move(summary);
    return j;
}

ordered_json sector_totals_json(const SectorTotals& totals) {
    ordered_json j;
    ordered_json models = ordered_json::array();
    for (CostModel model : totals.models) models.push_back(std::string(model_token(model)));
    j["models"] = std::move(models);
    ordered_json rows = ordered_json::array();
    for (const SectorTotalsRow& row : totals.rows) {
        ordered_json r;
        r["sector"] = std::string(sector_label(row.sector));
        ordered_json values = ordered_json::array();
        for (const Rational& total : row.totals) values.push_back(format_decimal(total, 2));
        r["totals"] = std::move(values);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    ordered_json unknown = ordered_json::array();
    for (const InstitutionId& institution : totals.unknown_institutions)
        unknown.push_back(institution.value());
    j["unknown_institutions"] = std::move(unknown);
    return j;
}

ordered_json role_shares_json(const RoleShareReport& report) {
    ordered_json j;
    j["min_pubs"] = report.min_pubs;
    ordered_json rows = ordered_json::array();
    for (const RoleShareRow& row : report.rows) {
        ordered_json r;
        r["institution"] = row.institution.value();
        r["n_pubs"] = row.n_pubs;
        r["role_share"] = format_decimal(row.role_share, 4);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["mean"] = format_decimal(report.mean, 4);
    return j;
}

ordered_json coop_json(const std::vector<CoopDistributionRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const CoopDistributionRow& row : rows) {
        ordered_json r;
        r["breakdown"] = row.breakdown;
        r["coop_type"] = std::string(coop_label(row.type));
        r["count"] = row.count;
        r["percent"] = format_decimal(row.percent, 2);
        out.push_back(std::move(r));
    }
    return out;
}

ordered_json author_counts_json(const AuthorCountDistribution& dist) {
    ordered_json j;
    ordered_json histogram = ordered_json::object();
    for (const auto& [authors, count] : dist.histogram)
        histogram[std::to_string(authors)] = count;
    j["histogram"] = std::move(histogram);
    ordered_json box = ordered_json::array();
    for (const auto& [group, stats] : dist.box) {
        ordered_json b;
        b["group"] = group;
        b["n"] = stats.n;
        b["min"] = format_decimal(stats.min, 2);
        b["q1"] = format_decimal(stats.q1, 2);
        b["median"] = format_decimal(stats.median, 2);
        b["q3"] = format_decimal(stats.q3, 2);
        b["max"] = format_decimal(stats.max, 2);
        box.push_back(std::move(b));
    }
    j["boxplot"] = std::move(box);
    j["quartile_rule"] = dist.quartile_rule;
    return j;
}

}  // namespace

std::string render_report_json(const ReportBundle& bundle) {
    ordered_json j;
    j["tool"] = "apcshare";
    j["command"] = bundle.command;
    if (!bundle.scope.empty()) j["scope"] = bundle.scope;
    if (!bundle.issn_policy.empty()) j["issn_policy"] = bundle.issn_policy;
    if (bundle.avg_apc_eur) j["avg_apc_eur"] = *bundle.avg_apc_eur;
    j["audit"] = audit_json(bundle.audit);
    if (bundle.pu_table) j["pu_table"] = pu_table_json(*bundle.pu_table);
    if (!bundle.range_rows.empty() || bundle.median_pu_diff)
        j["range_report"] = range_json(bundle.range_rows, bundle.median_pu_diff,
                                       bundle.avg_apc_eur);
    if (!bundle.pairwise.empty()) {
        ordered_json pairs = ordered_json::array();
        for (const PairwiseComparison& comparison : bundle.pairwise)
            pairs.push_back(pairwise_json(comparison));
        j["pairwise"] = std::move(pairs);
    }
    if (bundle.sectors) j["sector_totals"] = sector_totals_json(*bundle.sectors);
    if (bundle.role_first || bundle.role_reprint) {
        ordered_json roles;
        if (bundle.role_first) roles["first"] = role_shares_json(*bundle.role_first);
        if (bundle.role_reprint) roles["reprint"] = role_shares_json(*bundle.role_reprint);
        j["role_shares"] = std::move(roles);
    }
    if (!bundle.coop.empty()) j["coop_distribution"] = coop_json(bundle.coop);
    if (bundle.author_counts) j["author_counts"] = author_counts_json(*bundle.author_counts);
    return j.dump(2) + "\n";
}

std::vector<std::string> write_reports(const ReportBundle& bundle,
                                       const std::filesystem::path& out_dir,
                                       OutputFormat format) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> written;
    const bool csv = format != OutputFormat::Json;
    const bool json = format != OutputFormat::Csv;

    const auto emit = [&](const std::string& name, const std::string& content) {
        write_file(out_dir / name, content);
        written.push_back(name);
    };

    if (csv) {
        if (bundle.pu_table) emit("pu_table.csv", render_pu_table_csv(*bundle.pu_table));
        if (!bundle.range_rows.empty())
            emit("range_report.csv",
                 render_range_report_csv(bundle.range_rows, bundle.avg_apc_eur));
        for (const PairwiseComparison& comparison : bundle.pairwise)
            emit("pairwise_" + std::string(model_token(comparison.lhs)) + "_" +
                     std::string(model_token(comparison.rhs)) + ".csv",
                 render_pairwise_csv(comparison));
        if (bundle.sectors) emit("sector_totals.csv", render_sector_totals_csv(*bundle.sectors));
        if (bundle.role_first)
            emit("role_shares_first.csv", render_role_shares_csv(*bundle.role_first));
        if (bundle.role_reprint)
            emit("role_shares_reprint.csv", render_role_shares_csv(*bundle.role_reprint));
        if (!bundle.coop.empty())
            emit("coop_distribution.csv", render_coop_distribution_csv(bundle.coop));
        if (bundle.author_counts)
            emit("author_counts.csv", render_author_counts_csv(*bundle.author_counts));
    }
    if (json) emit("report.json", render_report_json(bundle));
    return written;
}

}  // namespace apcshare
