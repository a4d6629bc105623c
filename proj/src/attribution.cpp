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

#include "apcshare/attribution.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "apcshare/errors.hpp"

namespace apcshare {

namespace {

std::string canon_doc_type(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

// Document types an article processing charge is paid for.
const std::set<std::string>& included_doc_types() {
    static const std::set<std::string> types = {
        "article",       "review",        "editorial material",
        "editorial",     "letter",        "data paper",
        "correction",    "unspecified",   "book review",
        "database review", "software review", "news",
        "retracted publication", "news item", "retraction",
    };
    return types;
}

// Types known to fall outside the fee-based publishing workflow. They never
// grant inclusion, but a publication carrying one of them alongside an
// included type stays in.
const std::set<std::string>& excluded_doc_types() {
    static const std::set<std::string> types = {
        "meeting", "proceedings paper", "book", "book chapter", "abstract", "meeting abstract",
    };
    return types;
}

}  // namespace

std::set<InstitutionId> participants(const Publication& pub, const SectorRegistry& registry,
                                     ParticipantScope scope) {
    std::set<InstitutionId> out;
    for (const AuthorRecord& author : pub.authors) {
        for (const Affiliation& aff : author.affiliations) {
            switch (scope) {
                case ParticipantScope::AllInstitutions:
                    out.insert(aff.institution);
                    break;
                case ParticipantScope::GermanOnly:
                    if (aff.is_german()) out.insert(aff.institution);
                    break;
                case ParticipantScope::SectorOnly:
                    if (aff.is_german() && registry.contains(aff.institution))
                        out.insert(aff.institution);
                    break;
            }
        }
    }
    return out;
}

ShareVector shares_first_author(const Publication& pub,
                                const std::set<InstitutionId>& participants) {
    std::set<InstitutionId> payers;
    for (const Affiliation& aff : pub.first_author().affiliations)
        if (participants.contains(aff.institution)) payers.insert(aff.institution);
    if (payers.empty())
        throw NoEligiblePayer("publication '" + pub.id +
                              "': first author has no participating affiliation");

    const Rational part = make_rational(1, static_cast<long>(payers.size()));
    ShareVector shares;
    for (const InstitutionId& inst : payers) shares.add(inst, part);
    return shares;
}

ShareVector shares_reprint_author(const Publication& pub,
                                  const std::set<InstitutionId>& participants) {
    std::set<InstitutionId> payers;
    for (const AuthorRecord& author : pub.authors) {
        if (!author.is_reprint) continue;
        for (const Affiliation& aff : author.affiliations)
            if (participants.contains(aff.institution)) payers.insert(aff.institution);
    }
    if (payers.empty())
        throw NoEligiblePayer("publication '" + pub.id +
                              "': no reprint author with a participating affiliation");

    const Rational part = make_rational(1, static_cast<long>(payers.size()));
    ShareVector shares;
    for (const InstitutionId& inst : payers) shares.add(inst, part);
    return shares;
}

ShareVector shares_equal(const Publication& pub, const std::set<InstitutionId>& participants) {
    if (participants.empty())
        throw NoEligiblePayer("publication '" + pub.id + "': no participating institution");

    const Rational part = make_rational(1, static_cast<long>(participants.size()));
    ShareVector shares;
    for (const InstitutionId& inst : participants) shares.add(inst, part);
    return shares;
}

ShareVector shares_by_author_institution_pairs(const Publication& pub,
                                               const std::set<InstitutionId>& participants) {
    std::map<InstitutionId, long> pair_counts;
    long total_pairs = 0;
    for (const AuthorRecord& author : pub.authors) {
        for (const Affiliation& aff : author.affiliations) {
            if (!participants.contains(aff.institution)) continue;
            ++pair_counts[aff.institution];
            ++total_pairs;
        }
    }
    if (total_pairs == 0)
        throw NoEligiblePayer("publication '" + pub.id +
                              "': no author-institution pair among participants");

    ShareVector shares;
    for (const auto& [inst, count] : pair_counts)
        shares.add(inst, make_rational(count, total_pairs));
    return shares;
}

ShareVector shares_by_fractional_authorship(const Publication& pub,
                                            const std::set<InstitutionId>& participants) {
    const long author_count = static_cast<long>(pub.authors.size());
    ShareVector shares;
    for (const AuthorRecord& author : pub.authors) {
        // The author's weight is split over ALL of their institutions; only
        // the participant portions are kept.
        const Rational per_institution =
            make_rational(1, static_cast<long>(author.affiliations.size())) /
            Rational(author_count);
        for (const Affiliation& aff : author.affiliations)
            if (participants.contains(aff.institution))
                shares.add(aff.institution, per_institution);
    }
    if (shares.empty())
        throw NoEligiblePayer("publication '" + pub.id + "': no author touches the participants");
    shares.normalize();
    return shares;
}

ShareVector attribute(const Publication& pub, CostModel model, const SectorRegistry& registry,
                      ParticipantScope scope) {
    const std::set<InstitutionId> payers = participants(pub, registry, scope);
    switch (model) {
        case CostModel::FirstAuthor: return shares_first_author(pub, payers);
        case CostModel::ReprintAuthor: return shares_reprint_author(pub, payers);
        case CostModel::EqualShares: return shares_equal(pub, payers);
        case CostModel::AuthorInstitutionPairs:
            return shares_by_author_institution_pairs(pub, payers);
        case CostModel::FractionalAuthorship:
            return shares_by_fractional_authorship(pub, payers);
    }
    throw std::logic_error("unknown cost model");
}

CooperationType classify_cooperation(const Publication& pub, const SectorRegistry& registry) {
    std::set<InstitutionId> german;
    std::set<InstitutionId> sector;
    bool foreign = false;
    for (const AuthorRecord& author : pub.authors) {
        for (const Affiliation& aff : author.affiliations) {
            if (aff.is_german()) {
                german.insert(aff.institution);
                if (registry.contains(aff.institution)) sector.insert(aff.institution);
            } else {
                foreign = true;
            }
        }
    }

    if (sector.empty()) return CooperationType::OutOfScope;
    if (foreign)
        return sector.size() >= 2 ? CooperationType::KISec : CooperationType::KI;
    if (sector.size() >= 2) return CooperationType::KNSec;
    return german.size() == 1 ? CooperationType::K0 : CooperationType::KN;
}

bool is_included_document(const Publication& pub) {
    for (const std::string& type : pub.doc_types)
        if (included_doc_types().contains(canon_doc_type(type))) return true;
    return false;
}

std::vector<std::string> unknown_doc_types(const Publication& pub) {
    std::vector<std::string> unknown;
    for (const std::string& type : pub.doc_types) {
        const std::string canon = canon_doc_type(type);
        if (!included_doc_types().contains(canon) && !excluded_doc_types().contains(canon))
            unknown.push_back(type);
    }
    return unknown;
}

}  // namespace apcshare
