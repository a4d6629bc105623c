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

#include "apcshare/types.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace apcshare {

namespace {

std::string lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

InstitutionId::InstitutionId(std::string value) : value_(std::move(value)) {
    if (value_.empty())
        throw std::invalid_argument("institution id must be non-empty");
}

std::ostream& operator<<(std::ostream& os, const InstitutionId& id) {
    return os << id.value();
}

std::set<InstitutionId> Publication::institutions() const {
    std::set<InstitutionId> out;
    for (const AuthorRecord& author : authors)
        for (const Affiliation& aff : author.affiliations) out.insert(aff.institution);
    return out;
}

std::vector<std::string> validate_publication(const Publication& pub) {
    std::vector<std::string> problems;
    if (pub.id.empty()) problems.push_back("publication id is empty");
    if (pub.doc_types.empty()) problems.push_back("publication has no document type");
    for (const std::string& t : pub.doc_types)
        if (t.empty()) problems.push_back("empty document type string");
    if (pub.authors.empty()) {
        problems.push_back("publication has no authors");
        return problems;
    }
    for (std::size_t i = 0; i < pub.authors.size(); ++i) {
        const AuthorRecord& author = pub.authors[i];
        if (author.position != static_cast<int>(i) + 1)
            problems.push_back("author positions are not contiguous from 1");
        if (author.affiliations.empty())
            problems.push_back("author at position " + std::to_string(author.position) +
                               " has no affiliations");
        std::set<InstitutionId> seen;
        for (const Affiliation& aff : author.affiliations) {
            if (!seen.insert(aff.institution).second)
                problems.push_back("author at position " + std::to_string(author.position) +
                                   " lists institution '" + aff.institution.value() + "' twice");
            if (aff.country.size() != 2 ||
                !std::isupper(static_cast<unsigned char>(aff.country[0])) ||
                !std::isupper(static_cast<unsigned char>(aff.country[1])))
                problems.push_back("invalid country code '" + aff.country + "'");
        }
    }
    return problems;
}

std::string_view model_code(CostModel model) {
    switch (model) {
        case CostModel::FirstAuthor: return "1";
        case CostModel::ReprintAuthor: return "2";
        case CostModel::EqualShares: return "3";
        case CostModel::AuthorInstitutionPairs: return "4a";
        case CostModel::FractionalAuthorship: return "4b";
    }
    return "?";
}

std::string_view model_token(CostModel model) {
    switch (model) {
        case CostModel::FirstAuthor: return "first";
        case CostModel::ReprintAuthor: return "reprint";
        case CostModel::EqualShares: return "equal";
        case CostModel::AuthorInstitutionPairs: return "frac-pairs";
        case CostModel::FractionalAuthorship: return "frac-authors";
    }
    return "?";
}

std::optional<CostModel> model_from_token(std::string_view token) {
    const std::string t = lower(token);
    for (CostModel m : kAllCostModels)
        if (t == model_token(m) || t == model_code(m)) return m;
    return std::nullopt;
}

std::string_view coop_label(CooperationType type) {
    switch (type) {
        case CooperationType::K0: return "K0";
        case CooperationType::KNSec: return "KNSec";
        case CooperationType::KN: return "KN";
        case CooperationType::KI: return "KI";
        case CooperationType::KISec: return "KISec";
        case CooperationType::OutOfScope: return "OutOfScope";
    }
    return "?";
}

std::optional<CooperationType> coop_from_token(std::string_view token) {
    const std::string t = lower(token);
    for (CooperationType type : kAllCooperationTypes)
        if (t == lower(coop_label(type))) return type;
    if (t == "out" || t == "out-of-scope") return CooperationType::OutOfScope;
    return std::nullopt;
}

std::string_view sector_label(Sector sector) {
    switch (sector) {
        case Sector::UNIV: return "UNIV";
        case Sector::MPG: return "MPG";
        case Sector::HGF: return "HGF";
        case Sector::WGL: return "WGL";
        case Sector::FHG: return "FHG";
    }
    return "?";
}

std::optional<Sector> sector_from_token(std::string_view token) {
    const std::string t = lower(token);
    for (Sector s : kAllSectors)
        if (t == lower(sector_label(s))) return s;
    return std::nullopt;
}

void SectorRegistry::add(InstitutionId id, std::set<Sector> sectors, std::string name) {
    Entry& entry = entries_[std::move(id)];
    entry.sectors.merge(sectors);
    if (!name.empty()) entry.name = std::move(name);
}

bool SectorRegistry::contains(const InstitutionId& id) const {
    return entries_.contains(id);
}

const std::set<Sector>* SectorRegistry::sectors_of(const InstitutionId& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second.sectors;
}

std::string_view scope_token(ParticipantScope scope) {
    switch (scope) {
        case ParticipantScope::AllInstitutions: return "all";
        case ParticipantScope::GermanOnly: return "german";
        case ParticipantScope::SectorOnly: return "sector";
    }
    return "?";
}

std::optional<ParticipantScope> scope_from_token(std::string_view token) {
    const std::string t = lower(token);
    if (t == "all") return ParticipantScope::AllInstitutions;
    if (t == "german") return ParticipantScope::GermanOnly;
    if (t == "sector") return ParticipantScope::SectorOnly;
    return std::nullopt;
}

void ShareVector::add(const InstitutionId& institution, const Rational& amount) {
    const int sign = sgn(amount);
    if (sign < 0) throw std::logic_error("negative cost share");
    if (sign == 0) return;
    entries_[institution] += amount;
}

Rational ShareVector::share_of(const InstitutionId& institution) const {
    auto it = entries_.find(institution);
    return it == entries_.end() ? Rational(0) : it->second;
}

Rational ShareVector::sum() const {
    Rational total(0);
    for (const auto& [inst, share] : entries_) total += share;
    return total;
}

void ShareVector::normalize() {
    if (entries_.empty()) return;
    const Rational total = sum();
    for (auto& [inst, share] : entries_) share /= total;
}

std::ostream& operator<<(std::ostream& os, const ShareVector& shares) {
    os << "{";
    bool first = true;
    for (const auto& [inst, share] : shares.entries()) {
        if (!first) os << ", ";
        os << inst.value() << ": " << format_rational(share);
        first = false;
    }
    return os << "}";
}

}  // namespace apcshare
