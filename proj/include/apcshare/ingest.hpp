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
#include <set>
#include <string>
#include <vector>

#include "apcshare/issn.hpp"
#include "apcshare/types.hpp"

namespace apcshare {

// Row-level problems are collected, not thrown: a bad line is reported with
// its line number and skipped. Hard failures (unreadable file, duplicate
// publication ids) throw.

struct RowWarning {
    std::size_t line = 0;
    std::string message;
};

// ---------------------------------------------------------------------------
// Gold-OA journal list

using GoldOaIssnList = std::set<std::string>;  // normalized ISSNs

struct GoldOaLoadResult {
    GoldOaIssnList list;
    std::vector<RowWarning> warnings;
    std::size_t valid_rows = 0;  // rows accepted (before set dedup)
    std::size_t data_rows = 0;
};

/// CSV with a header naming an `issn` column. Invalid rows are skipped with
/// a warning; under IssnPolicy::Lax a failing check digit is warned about
/// but the ISSN is kept. Throws EmptyList when nothing usable remains.
GoldOaLoadResult load_gold_oa_list(const std::filesystem::path& path,
                                   IssnPolicy policy = IssnPolicy::Strict);

/// True iff any of the publication's ISSNs normalizes into the list.
bool is_gold_oa(const Publication& pub, const GoldOaIssnList& list,
                IssnPolicy policy = IssnPolicy::Strict);

// ---------------------------------------------------------------------------
// Publication corpus (JSON Lines)

struct CorpusLoadResult {
    std::vector<Publication> publications;  // in file order
    std::vector<RowWarning> warnings;
};

/// One JSON object per line:
///   {"id": str, "year": int, "doc_types": [str], "issns": [str],
///    "authors": [{"position": int, "is_reprint": bool,
///                 "affiliations": [{"institution_id": str, "country": str}]}]}
/// Authors are reordered by position; duplicate affiliations of one author
/// are collapsed. Throws FileUnreadable and DuplicateId.
CorpusLoadResult parse_publication_corpus(const std::filesystem::path& path);

/// Inverse of parse_publication_corpus; parsing the output reproduces the
/// input publications field by field.
void write_publication_corpus(const std::filesystem::path& path,
                              const std::vector<Publication>& publications);

// ---------------------------------------------------------------------------
// APC payments (OpenAPC-compatible CSV)

struct ApcPaymentRecord {
    std::string institution;
    int period = 0;                     // calendar year
    long long euro_cents = 0;           // exact; always > 0
    bool is_hybrid = false;
    std::optional<std::string> issn;    // normalized
    std::optional<std::string> doi;
};

struct PaymentsLoadResult {
    std::vector<ApcPaymentRecord> records;
    std::vector<RowWarning> warnings;
};

/// Columns institution, period, euro, is_hybrid are required; issn and doi
/// are optional. Decimal point ".", at most two fraction digits, no
/// thousands separators. Throws FileUnreadable when required columns are
/// missing.
PaymentsLoadResult load_apc_payments(const std::filesystem::path& path,
                                     IssnPolicy policy = IssnPolicy::Strict);

/// Mean euro amount over the records matching the optional filters,
/// rounded half-up to whole euros. Throws EmptySelection.
long long average_apc(const std::vector<ApcPaymentRecord>& records,
                      std::optional<int> period = std::nullopt,
                      std::optional<bool> hybrid = std::nullopt);

// ---------------------------------------------------------------------------
// Sector registry

struct RegistryLoadResult {
    SectorRegistry registry;
    std::vector<RowWarning> warnings;
};

/// CSV with columns institution_id, name, sectors; sectors is a
/// semicolon-separated subset of UNIV;MPG;HGF;WGL;FHG. Duplicate ids merge
/// their sector sets (with a warning). Throws EmptyList when no valid rows
/// remain.
RegistryLoadResult load_sector_registry(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Corpus filter

struct CorpusFilter {
    int year_min = 2014;
    int year_max = 2018;
    std::set<CooperationType> coop_types = {CooperationType::K0, CooperationType::KN,
                                            CooperationType::KNSec};
    bool require_gold_oa = true;
    bool require_included_doctype = true;
    /// Keep only publications whose position-1 author and at least one
    /// reprint author are each affiliated with a registered institution.
    bool require_sector_first_and_reprint = true;
};

/// A filter that keeps everything.
CorpusFilter identity_filter();

struct FilterStage {
    std::string name;
    bool enabled = false;
    std::size_t remaining = 0;
};

struct FilterAudit {
    std::size_t input = 0;
    std::vector<FilterStage> stages;
};

/// Applies the enabled predicates in the order year, cooperation type,
/// gold-OA, document type, sector roles; input order is preserved. When
/// `audit` is given it receives the per-stage corpus sizes.
std::vector<Publication> filter_corpus(const std::vector<Publication>& corpus,
                                       const CorpusFilter& filter, const GoldOaIssnList& list,
                                       const SectorRegistry& registry,
                                       IssnPolicy policy = IssnPolicy::Strict,
                                       FilterAudit* audit = nullptr);

}  // namespace apcshare
