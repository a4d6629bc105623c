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

// Command-line front end: validate -> classify -> attribute -> report.
// Exit codes: 0 success, 2 structural input/usage error, 3 empty analytical
// selection, 4 payment-filter failure.

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apcshare/analytics.hpp"
#include "apcshare/attribution.hpp"
#include "apcshare/errors.hpp"
#include "apcshare/ingest.hpp"
#include "apcshare/reports.hpp"

namespace {

using namespace apcshare;

constexpr int kExitOk = 0;
constexpr int kExitStructural = 2;
constexpr int kExitEmptySelection = 3;
constexpr int kExitPaymentFilter = 4;

struct Options {
    std::string corpus;
    std::string gold_oa;
    std::string registry;
    std::string payments;
    std::string out = "out";
    std::string years = "2014:2018";
    std::string coop = "k0,kn,knsec";
    std::string scope = "sector";
    std::string models = "first,reprint,equal,frac-pairs,frac-authors";
    std::string pairs = "equal:reprint,equal:first,frac-pairs:frac-authors";
    std::optional<long long> avg_apc;
    unsigned min_pubs = 50;
    bool lax_issn = false;
    bool no_gold_filter = false;
    bool no_doctype_filter = false;
    bool no_sector_role_filter = false;
    std::string format = "both";
    bool coop_given = false;
    bool pairs_given = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, sep))
        if (!token.empty()) out.push_back(token);
    return out;
}

std::pair<int, int> parse_years(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("--years expects A:B, got '" + text + "'");
    try {
        const int a = std::stoi(text.substr(0, colon));
        const int b = std::stoi(text.substr(colon + 1));
        if (a > b) throw Error("--years range is inverted: '" + text + "'");
        return {a, b};
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error("--years expects A:B, got '" + text + "'");
    }
}

std::set<CooperationType> parse_coop(const std::string& text) {
    std::set<CooperationType> out;
    for (const std::string& token : split(text, ',')) {
        const std::optional<CooperationType> type = coop_from_token(token);
        if (!type) throw Error("unknown cooperation type '" + token + "'");
        out.insert(*type);
    }
    if (out.empty()) throw Error("--coop selected no cooperation types");
    return out;
}

std::set<CostModel> parse_models(const std::string& text) {
    std::set<CostModel> out;
    for (const std::string& token : split(text, ',')) {
        const std::optional<CostModel> model = model_from_token(token);
        if (!model) throw Error("unknown cost model '" + token + "'");
        out.insert(*model);
    }
    if (out.empty()) throw Error("--models selected no cost models");
    return out;
}

std::vector<std::pair<CostModel, CostModel>> parse_pairs(const std::string& text) {
    std::vector<std::pair<CostModel, CostModel>> out;
    for (const std::string& token : split(text, ',')) {
        const auto colon = token.find(':');
        if (colon == std::string::npos)
            throw Error("--pairs expects m1:m2 entries, got '" + token + "'");
        const std::optional<CostModel> lhs = model_from_token(token.substr(0, colon));
        const std::optional<CostModel> rhs = model_from_token(token.substr(colon + 1));
        if (!lhs || !rhs) throw Error("unknown cost model in pair '" + token + "'");
        out.emplace_back(*lhs, *rhs);
    }
    return out;
}

struct Inputs {
    CorpusLoadResult corpus;
    GoldOaLoadResult gold;
    RegistryLoadResult registry;
};

IssnPolicy policy_of(const Options& opts) {
    return opts.lax_issn ? IssnPolicy::Lax : IssnPolicy::Strict;
}

Inputs load_inputs(const Options& opts) {
    Inputs in;
    in.corpus = parse_publication_corpus(opts.corpus);
    if (!opts.gold_oa.empty()) in.gold = load_gold_oa_list(opts.gold_oa, policy_of(opts));
    in.registry = load_sector_registry(opts.registry);
    const std::size_t skipped =
        in.corpus.warnings.size() + in.gold.warnings.size() + in.registry.warnings.size();
    if (skipped > 0)
        std::cout << "inputs: " << skipped
                  << " row warning(s); run the validate subcommand for details\n";
    return in;
}

CorpusFilter filter_of(const Options& opts) {
    CorpusFilter filter;
    std::tie(filter.year_min, filter.year_max) = parse_years(opts.years);
    filter.coop_types = parse_coop(opts.coop);
    filter.require_gold_oa = !opts.no_gold_filter;
    filter.require_included_doctype = !opts.no_doctype_filter;
    filter.require_sector_first_and_reprint = !opts.no_sector_role_filter;
    return filter;
}

void print_audit(const FilterAudit& audit) {
    std::cout << "corpus: " << audit.input << " publication(s)\n";
    for (const FilterStage& stage : audit.stages) {
        std::cout << "  " << stage.name;
        if (!stage.enabled)
            std::cout << " (off)";
        std::cout << " -> " << stage.remaining << "\n";
    }
}

void print_year_counts(const std::vector<Publication>& corpus) {
    std::map<int, std::size_t> per_year;
    for (const Publication& pub : corpus) ++per_year[pub.year];
    std::cout << "per year:";
    for (const auto& [year, count] : per_year) std::cout << " " << year << ": " << count;
    std::cout << "\n";
}

OutputFormat format_of(const Options& opts) {
    const std::optional<OutputFormat> format = format_from_token(opts.format);
    if (!format) throw Error("unknown format '" + opts.format + "'");
    return *format;
}

ParticipantScope scope_of(const Options& opts) {
    const std::optional<ParticipantScope> scope = scope_from_token(opts.scope);
    if (!scope) throw Error("unknown scope '" + opts.scope + "'");
    return *scope;
}

void report_written(const std::vector<std::string>& files, const std::string& out) {
    for (const std::string& name : files) std::cout << "wrote " << out << "/" << name << "\n";
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& opts) {
    bool hard_error = false;
    std::size_t warning_count = 0;

    const auto report = [&](const std::string& file, const std::vector<RowWarning>& warnings) {
        for (const RowWarning& warning : warnings) {
            std::cout << file << ":" << warning.line << ": warning: " << warning.message << "\n";
            ++warning_count;
        }
    };

    try {
        const CorpusLoadResult corpus = parse_publication_corpus(opts.corpus);
        report(opts.corpus, corpus.warnings);
        for (const Publication& pub : corpus.publications)
            for (const std::string& type : unknown_doc_types(pub)) {
                std::cout << opts.corpus << ": warning: unknown document type '" << type
                          << "' (publication '" << pub.id << "')\n";
                ++warning_count;
            }
        std::cout << opts.corpus << ": " << corpus.publications.size() << " valid record(s), "
                  << corpus.warnings.size() << " skipped\n";
    } catch (const Error& e) {
        std::cout << "error: " << e.what() << "\n";
        hard_error = true;
    }

    const auto try_load = [&](const std::string& path, auto&& loader, const char* what) {
        if (path.empty()) return;
        try {
            loader(path);
        } catch (const Error& e) {
            std::cout << "error: " << what << ": " << e.what() << "\n";
            hard_error = true;
        }
    };
    try_load(opts.gold_oa, [&](const std::string& path) {
        const GoldOaLoadResult gold = load_gold_oa_list(path, policy_of(opts));
        report(path, gold.warnings);
        std::cout << path << ": " << gold.list.size() << " distinct issn(s), "
                  << gold.warnings.size() << " warning(s)\n";
    }, "gold-oa list");
    try_load(opts.registry, [&](const std::string& path) {
        const RegistryLoadResult registry = load_sector_registry(path);
        report(path, registry.warnings);
        std::cout << path << ": " << registry.registry.size() << " institution(s), "
                  << registry.warnings.size() << " warning(s)\n";
    }, "sector registry");
    try_load(opts.payments, [&](const std::string& path) {
        const PaymentsLoadResult payments = load_apc_payments(path, policy_of(opts));
        report(path, payments.warnings);
        std::cout << path << ": " << payments.records.size() << " payment record(s), "
                  << payments.warnings.size() << " skipped\n";
    }, "payments");

    std::cout << (hard_error ? "validation failed\n" : "0 errors\n");
    if (!hard_error && warning_count > 0)
        std::cout << warning_count << " warning(s)\n";
    return hard_error ? kExitStructural : kExitOk;
}

int cmd_classify(const Options& opts) {
    const Inputs in = load_inputs(opts);

    CorpusFilter filter = filter_of(opts);
    // The co-operation distribution is computed over every type unless the
    // caller narrows it explicitly; the sector-role restriction belongs to
    // the attribution stage, not here.
    if (!opts.coop_given)
        filter.coop_types = {kAllCooperationTypes.begin(), kAllCooperationTypes.end()};
    filter.require_sector_first_and_reprint = false;

    FilterAudit audit;
    const std::vector<Publication> corpus = filter_corpus(
        in.corpus.publications, filter, in.gold.list, in.registry.registry, policy_of(opts),
        &audit);
    print_audit(audit);
    if (corpus.empty()) {
        std::cout << "error: no publications left after filtering\n";
        return kExitEmptySelection;
    }

    ReportBundle bundle;
    bundle.command = "classify";
    bundle.issn_policy = opts.lax_issn ? "lax" : "strict";
    bundle.audit = audit;
    bundle.coop = cooperation_distribution(corpus, in.registry.registry);

    for (const CoopDistributionRow& row : bundle.coop)
        if (row.breakdown == "ALL")
            std::cout << coop_label(row.type) << ": " << row.count << " ("
                      << format_decimal(row.percent, 2) << "%)\n";

    report_written(write_reports(bundle, opts.out, format_of(opts)), opts.out);
    return kExitOk;
}

struct AttributionRun {
    std::vector<Publication> corpus;
    FilterAudit audit;
    PublicationUnitsTable table;
    Inputs inputs;
};

AttributionRun run_attribution(const Options& opts) {
    AttributionRun run;
    run.inputs = load_inputs(opts);
    const CorpusFilter filter = filter_of(opts);
    run.corpus = filter_corpus(run.inputs.corpus.publications, filter, run.inputs.gold.list,
                               run.inputs.registry.registry, policy_of(opts), &run.audit);
    print_audit(run.audit);
    if (run.corpus.empty()) return run;

    print_year_counts(run.corpus);
    run.table = compute_publication_units(run.corpus, parse_models(opts.models),
                                          run.inputs.registry.registry, scope_of(opts));
    std::cout << "attributed " << run.table.attributed << " publication(s) to "
              << run.table.cells.size() << " institution(s)";
    if (!run.table.excluded_ids.empty())
        std::cout << "; excluded " << run.table.excluded_ids.size() << " (no eligible payer)";
    std::cout << "\n";
    return run;
}

int cmd_attribute(const Options& opts) {
    const AttributionRun run = run_attribution(opts);
    if (run.corpus.empty()) {
        std::cout << "error: no publications left after filtering\n";
        return kExitEmptySelection;
    }

    ReportBundle bundle;
    bundle.command = "attribute";
    bundle.scope = opts.scope;
    bundle.issn_policy = opts.lax_issn ? "lax" : "strict";
    bundle.audit = run.audit;
    bundle.pu_table = run.table;
    report_written(write_reports(bundle, opts.out, format_of(opts)), opts.out);
    return kExitOk;
}

int cmd_report(const Options& opts) {
    const AttributionRun run = run_attribution(opts);
    if (run.corpus.empty()) {
        std::cout << "error: no publications left after filtering\n";
        return kExitEmptySelection;
    }

    ReportBundle bundle;
    bundle.command = "report";
    bundle.scope = opts.scope;
    bundle.issn_policy = opts.lax_issn ? "lax" : "strict";
    bundle.audit = run.audit;
    bundle.pu_table = run.table;

    if (opts.avg_apc) {
        if (*opts.avg_apc <= 0) throw Error("--avg-apc must be positive");
        bundle.avg_apc_eur = *opts.avg_apc;
    } else if (!opts.payments.empty()) {
        const PaymentsLoadResult payments = load_apc_payments(opts.payments, policy_of(opts));
        try {
            // Gold-OA economics: hybrid payments stay out of the average.
            bundle.avg_apc_eur = average_apc(payments.records, std::nullopt, false);
        } catch (const EmptySelection& e) {
            std::cout << "error: " << e.what() << "\n";
            return kExitPaymentFilter;
        }
        std::cout << "average apc (non-hybrid): " << *bundle.avg_apc_eur << " eur over "
                  << payments.records.size() << " record(s)\n";
    }

    if (run.table.models.size() >= 2) {
        bundle.range_rows = range_report(run.table);
        bundle.median_pu_diff = median_range(bundle.range_rows);
        std::cout << "median pu_diff: " << format_decimal(*bundle.median_pu_diff, 2) << "\n";
        if (bundle.avg_apc_eur)
            std::cout << "median euro diff: "
                      << estimate_cost(*bundle.median_pu_diff, *bundle.avg_apc_eur) << " eur\n";
    } else {
        std::cout << "note: min/max range needs at least two models; skipped\n";
    }

    for (const auto& [lhs, rhs] : parse_pairs(opts.pairs)) {
        if (!run.table.has_model(lhs) || !run.table.has_model(rhs)) {
            if (opts.pairs_given)
                throw Error("pair " + std::string(model_token(lhs)) + ":" +
                            std::string(model_token(rhs)) + " references a model not computed");
            std::cout << "note: skipping pair " << model_token(lhs) << ":" << model_token(rhs)
                      << " (model not computed)\n";
            continue;
        }
        bundle.pairwise.push_back(pairwise_model_comparison(run.table, lhs, rhs));
    }

    bundle.sectors = sector_totals(run.table, run.inputs.registry.registry);
    bundle.role_first =
        author_role_shares(run.corpus, run.inputs.registry.registry, AuthorRole::First,
                           opts.min_pubs);
    bundle.role_reprint =
        author_role_shares(run.corpus, run.inputs.registry.registry, AuthorRole::Reprint,
                           opts.min_pubs);
    bundle.coop = cooperation_distribution(run.corpus, run.inputs.registry.registry);
    bundle.author_counts = author_count_distribution(run.corpus, run.inputs.registry.registry);

    report_written(write_reports(bundle, opts.out, format_of(opts)), opts.out);
    return kExitOk;
}

void add_common_options(CLI::App* cmd, Options& opts, bool needs_corpus) {
    auto* corpus = cmd->add_option("--corpus", opts.corpus, "Publication corpus (JSON Lines)");
    if (needs_corpus) corpus->required();
    cmd->add_option("--gold-oa", opts.gold_oa, "Gold-OA journal list (CSV with issn column)");
    cmd->add_option("--registry", opts.registry, "Sector registry (CSV)");
    cmd->add_option("--payments", opts.payments, "APC payments (OpenAPC-compatible CSV)");
    cmd->add_option("--out", opts.out, "Output directory")->capture_default_str();
    cmd->add_option("--years", opts.years, "Publication year range A:B")->capture_default_str();
    cmd->add_option("--coop", opts.coop,
                    "Cooperation types to keep (k0,knsec,kn,ki,kisec,out)")
        ->capture_default_str()
        ->each([&opts](const std::string&) { opts.coop_given = true; });
    cmd->add_option("--scope", opts.scope, "Cost-bearing participants: all|german|sector")
        ->capture_default_str();
    cmd->add_option("--models", opts.models,
                    "Cost models (first,reprint,equal,frac-pairs,frac-authors)")
        ->capture_default_str();
    cmd->add_option("--avg-apc", opts.avg_apc, "Average APC in whole euros for cost estimates");
    cmd->add_option("--pairs", opts.pairs, "Model pairs m1:m2 for pairwise comparisons")
        ->capture_default_str()
        ->each([&opts](const std::string&) { opts.pairs_given = true; });
    cmd->add_option("--min-pubs", opts.min_pubs,
                    "Role shares only for institutions with more publications than this")
        ->capture_default_str();
    cmd->add_flag("--lax-issn", opts.lax_issn,
                  "Keep ISSNs with a failing check digit (warned, not skipped)");
    cmd->add_flag("--no-gold-oa-filter", opts.no_gold_filter, "Disable the gold-OA filter");
    cmd->add_flag("--no-doctype-filter", opts.no_doctype_filter,
                  "Disable the document-type filter");
    cmd->add_flag("--no-sector-role-filter", opts.no_sector_role_filter,
                  "Disable the first/reprint-author sector requirement");
    cmd->add_option("--format", opts.format, "Report formats: csv|json|both")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "apcshare: attributes APC costs of gold open-access publications to institutions\n"
        "under five cost-sharing models and compares the outcomes.\n"
        "Defaults reproduce the reference configuration: years 2014:2018, cooperation\n"
        "types k0,kn,knsec, gold-OA / document-type / sector-role filters on, scope\n"
        "sector, all five models."};
    app.require_subcommand(1);

    Options opts;
    CLI::App* validate =
        app.add_subcommand("validate", "Check inputs; report row problems with line numbers");
    CLI::App* classify =
        app.add_subcommand("classify", "Distribution of co-operation types (all types unless "
                                       "--coop is given; sector-role filter off)");
    CLI::App* attribute =
        app.add_subcommand("attribute", "Compute the institution x model publication-unit table");
    CLI::App* report =
        app.add_subcommand("report", "Attribute and emit every comparative report");
    for (CLI::App* cmd : {validate, classify, attribute, report})
        add_common_options(cmd, opts, /*needs_corpus=*/true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitStructural;
    }

    try {
        if (validate->parsed()) return cmd_validate(opts);
        if (classify->parsed()) {
            if (opts.gold_oa.empty() && !opts.no_gold_filter)
                throw Error("--gold-oa is required (or pass --no-gold-oa-filter)");
            if (opts.registry.empty()) throw Error("--registry is required");
            return cmd_classify(opts);
        }
        if (opts.gold_oa.empty() && !opts.no_gold_filter)
            throw Error("--gold-oa is required (or pass --no-gold-oa-filter)");
        if (opts.registry.empty()) throw Error("--registry is required");
        if (attribute->parsed()) return cmd_attribute(opts);
        return cmd_report(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStructural;
    }
}
