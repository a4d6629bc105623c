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

#include <array>
#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "apcshare/rational.hpp"

namespace apcshare {

/// Disambiguated institution key. Opaque; equality is exact string equality.
class InstitutionId {
public:
    explicit InstitutionId(std::string value);

    const std::string& value() const noexcept { return value_; }

    auto operator<=>(const InstitutionId&) const = default;

private:
    std::string value_;
};

std::ostream& operator<<(std::ostream& os, const InstitutionId& id);

/// One (institution, country) pair on an author byline.
struct Affiliation {
    InstitutionId institution;
    std::string country;  // ISO 3166-1 alpha-2, uppercase

    bool is_german() const { return country == "DE"; }

    friend bool operator==(const Affiliation&, const Affiliation&) = default;
};

struct AuthorRecord {
    int position = 0;  // 1-based byline position
    bool is_reprint = false;
    std::vector<Affiliation> affiliations;  // non-empty, no duplicate institutions

    friend bool operator==(const AuthorRecord&, const AuthorRecord&) = default;
};

struct Publication {
    std::string id;
    int year = 0;
    std::set<std::string> doc_types;
    std::set<std::string> issns;  // raw strings; normalized at matching time
    std::vector<AuthorRecord> authors;  // sorted by position, positions 1..n

    const AuthorRecord& first_author() const { return authors.front(); }

    /// Distinct institutions across all authors.
    std::set<InstitutionId> institutions() const;

    friend bool operator==(const Publication&, const Publication&) = default;
};

/// Invariant check; returns one message per violation, empty when valid.
/// Checked invariants: non-empty id, at least one doc type, at least one
/// author, positions contiguous from 1 in stored order, non-empty
/// deduplicated affiliation lists, two-uppercase-letter country codes.
std::vector<std::string> validate_publication(const Publication& pub);

// ---------------------------------------------------------------------------
// Cost models

enum class CostModel {
    FirstAuthor,                 // 1
    ReprintAuthor,               // 2
    EqualShares,                 // 3
    AuthorInstitutionPairs,      // 4a
    FractionalAuthorship,        // 4b
};

inline constexpr std::array<CostModel, 5> kAllCostModels = {
    CostModel::FirstAuthor,     CostModel::ReprintAuthor,
    CostModel::EqualShares,     CostModel::AuthorInstitutionPairs,
    CostModel::FractionalAuthorship,
};

/// Short numeric code: "1", "2", "3", "4a", "4b".
std::string_view model_code(CostModel model);
/// CLI/report token: first, reprint, equal, frac-pairs, frac-authors.
std::string_view model_token(CostModel model);
std::optional<CostModel> model_from_token(std::string_view token);

// ---------------------------------------------------------------------------
// Co-operation taxonomy

enum class CooperationType { K0, KNSec, KN, KI, KISec, OutOfScope };

inline constexpr std::array<CooperationType, 6> kAllCooperationTypes = {
    CooperationType::K0, CooperationType::KNSec, CooperationType::KN,
    CooperationType::KI, CooperationType::KISec, CooperationType::OutOfScope,
};

std::string_view coop_label(CooperationType type);
std::optional<CooperationType> coop_from_token(std::string_view token);

// ---------------------------------------------------------------------------
// Sectors

enum class Sector { UNIV, MPG, HGF, WGL, FHG };

inline constexpr std::array<Sector, 5> kAllSectors = {
    Sector::UNIV, Sector::MPG, Sector::HGF, Sector::WGL, Sector::FHG,
};

std::string_view sector_label(Sector sector);
std::optional<Sector> sector_from_token(std::string_view token);

/// Institutions of the publicly funded research sectors. Multi-membership is
/// allowed (an institution may belong to several sectors at once).
class SectorRegistry {
public:
    struct Entry {
        std::set<Sector> sectors;
        std::string name;
    };

    void add(InstitutionId id, std::set<Sector> sectors, std::string name = "");

    bool contains(const InstitutionId& id) const;
    /// Null when the institution is not registered.
    const std::set<Sector>* sectors_of(const InstitutionId& id) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::map<InstitutionId, Entry>& entries() const { return entries_; }

private:
    std::map<InstitutionId, Entry> entries_;
};

// ---------------------------------------------------------------------------
// Scope and shares

/// Which affiliated institutions count as cost-bearing participants.
enum class ParticipantScope { AllInstitutions, GermanOnly, SectorOnly };

std::string_view scope_token(ParticipantScope scope);
std::optional<ParticipantScope> scope_from_token(std::string_view token);

/// Exact cost shares of one publication. Only nonzero entries are stored;
/// a non-empty vector produced by an attribution sums to exactly 1.
class ShareVector {
public:
    ShareVector() = default;

    /// Accumulates `amount` onto `institution`. Zero amounts are dropped,
    /// negative amounts are a logic error.
    void add(const InstitutionId& institution, const Rational& amount);

    const std::map<InstitutionId, Rational>& entries() const { return entries_; }
    Rational share_of(const InstitutionId& institution) const;
    Rational sum() const;
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    /// Rescales so the entries sum to exactly 1. No-op on an empty vector.
    void normalize();

    friend bool operator==(const ShareVector&, const ShareVector&) = default;

private:
    std::map<InstitutionId, Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const ShareVector& shares);

}  // namespace apcshare
