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

#include <set>
#include <string>
#include <vector>

#include "apcshare/types.hpp"

namespace apcshare {

// Five ways of splitting one publication's APC across institutions. Every
// share function takes the set of cost-bearing participants and returns an
// exact vector summing to 1, or throws NoEligiblePayer when nobody in the
// participant set can carry the cost. All functions are pure.

/// Cost-bearing institutions of a publication under the given scope:
/// every distinct affiliated institution, only the German ones, or only
/// German institutions registered in one of the sectors.
std::set<InstitutionId> participants(const Publication& pub, const SectorRegistry& registry,
                                     ParticipantScope scope);

/// Model 1: the position-1 author's institutions split the whole fee.
ShareVector shares_first_author(const Publication& pub,
                                const std::set<InstitutionId>& participants);

/// Model 2: the fee is split equally over the distinct institutions that
/// host at least one reprint author. An institution with two reprint
/// authors still receives a single equal part.
ShareVector shares_reprint_author(const Publication& pub,
                                  const std::set<InstitutionId>& participants);

/// Model 3: every participating institution pays the same share.
ShareVector shares_equal(const Publication& pub, const std::set<InstitutionId>& participants);

/// Model 4a: shares proportional to the number of (author, institution)
/// pairs per institution. Pairs with non-participant institutions are
/// excluded from numerator and denominator alike.
ShareVector shares_by_author_institution_pairs(const Publication& pub,
                                               const std::set<InstitutionId>& participants);

/// Model 4b: each author carries weight 1/#authors, split equally over all
/// of that author's institutions. Portions landing outside the participant
/// set are dropped and the remainder is rescaled to sum to 1.
ShareVector shares_by_fractional_authorship(const Publication& pub,
                                            const std::set<InstitutionId>& participants);

/// Dispatches to the share function of `model` with participants derived
/// from `registry` and `scope`.
ShareVector attribute(const Publication& pub, CostModel model, const SectorRegistry& registry,
                      ParticipantScope scope);

/// Assigns the single co-operation type of a publication. With G the
/// distinct German institutions, S the registered (sector) subset of G and
/// F the presence of any non-German affiliation:
///   S empty                        -> OutOfScope
///   F present, |S| == 1            -> KI
///   F present, |S| >= 2            -> KISec
///   F absent,  |S| >= 2            -> KNSec
///   F absent,  |G| == 1            -> K0
///   F absent,  |G| >= 2, |S| == 1  -> KN
CooperationType classify_cooperation(const Publication& pub, const SectorRegistry& registry);

/// True iff at least one of the publication's document types belongs to the
/// set of types APC are paid for. Types known to fall outside that set never
/// veto; unknown types grant nothing.
bool is_included_document(const Publication& pub);

/// Document types of `pub` that are neither in the inclusion nor the
/// exclusion set. Worth a warning upstream, never an error.
std::vector<std::string> unknown_doc_types(const Publication& pub);

}  // namespace apcshare
