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

// Brute-force reference computations, kept deliberately separate from the
// library's attribution code paths.

#pragma once

#include <set>
#include <utility>
#include <vector>

#include "apcshare/types.hpp"

namespace apcshare::testing {

/// Pair counting, spelled out: enumerate every (author, institution) pair,
/// drop pairs outside the participant set, divide per-institution tallies by
/// the grand total.
inline ShareVector oracle_pair_shares(const Publication& pub,
                                      const std::set<InstitutionId>& participants) {
    std::vector<InstitutionId> pairs;
    for (const AuthorRecord& author : pub.authors)
        for (const Affiliation& aff : author.affiliations)
            if (participants.contains(aff.institution)) pairs.push_back(aff.institution);

    ShareVector shares;
    for (const InstitutionId& institution : std::set<InstitutionId>(pairs.begin(), pairs.end())) {
        long count = 0;
        for (const InstitutionId& p : pairs)
            if (p == institution) ++count;
        shares.add(institution, make_rational(count, static_cast<long>(pairs.size())));
    }
    return shares;
}

/// Per-author weighting with every institution participating: author a
/// contributes exactly 1/#authors, split evenly across a's institutions.
inline ShareVector oracle_fractional_shares(const Publication& pub) {
    ShareVector shares;
    const Rational author_weight = make_rational(1, static_cast<long>(pub.authors.size()));
    for (const AuthorRecord& author : pub.authors) {
        const Rational slice =
            author_weight / Rational(static_cast<long>(author.affiliations.size()));
        for (const Affiliation& aff : author.affiliations) shares.add(aff.institution, slice);
    }
    return shares;
}

/// Distinct-institution reprint split: list reprint-author institutions,
/// deduplicate, give each an equal part.
inline ShareVector oracle_reprint_shares(const Publication& pub,
                                         const std::set<InstitutionId>& participants) {
    std::set<InstitutionId> institutions;
    for (const AuthorRecord& author : pub.authors)
        if (author.is_reprint)
            for (const Affiliation& aff : author.affiliations)
                if (participants.contains(aff.institution)) institutions.insert(aff.institution);

    ShareVector shares;
    for (const InstitutionId& institution : institutions)
        shares.add(institution, make_rational(1, static_cast<long>(institutions.size())));
    return shares;
}

/// Sorted-list quartiles, computed the long way for comparison.
struct OracleBox {
    Rational min, q1, median, q3, max;
};

inline Rational oracle_median(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return (values[n / 2 - 1] + values[n / 2]) / 2;
}

inline OracleBox oracle_box(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    OracleBox box;
    box.min = values.front();
    box.max = values.back();
    box.median = oracle_median(values);
    if (values.size() == 1) {
        box.q1 = box.q3 = values.front();
        return box;
    }
    const std::size_t half = values.size() / 2;
    box.q1 = oracle_median({values.begin(), values.begin() + half});
    box.q3 = oracle_median({values.end() - half, values.end()});
    return box;
}

}  // namespace apcshare::testing
