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

// Deterministic synthetic-corpus generator. Every publication is built from
// explicit construction parameters (co-operation archetype, year, journal
// list membership, document types, author roles), and the manifest records
// the expected default-filter outcome straight from those parameters. The
// manifest is therefore an independent check on the filtering pipeline, not
// a replay of it.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apcshare/csv.hpp"
#include "apcshare/ingest.hpp"
#include "apcshare/issn.hpp"
#include "apcshare/types.hpp"

namespace {

using namespace apcshare;

struct InstitutionSpec {
    std::string id;
    std::string name;
    std::string country;
    std::string sectors;  // semicolon-separated; empty = not registered
    bool in_registry() const { return !sectors.empty(); }
};

const std::vector<InstitutionSpec>& sector_pool() {
    static const std::vector<InstitutionSpec> pool = {
        {"uni-aachen", "Aachen University", "DE", "UNIV"},
        {"uni-bonn", "University of Bonn", "DE", "UNIV"},
        {"uni-koeln", "University of Cologne", "DE", "UNIV"},
        {"uni-leipzig", "Leipzig University", "DE", "UNIV"},
        {"mpi-alpha", "MPI Alpha", "DE", "MPG"},
        {"mpi-beta", "MPI Beta", "DE", "MPG"},
        {"hzg-gamma", "Helmholtz Centre Gamma", "DE", "HGF"},
        {"dkz-delta", "Research Centre Delta", "DE", "HGF"},
        {"wgl-epsilon", "Leibniz Institute Epsilon", "DE", "WGL"},
        {"wgl-zeta", "Leibniz Institute Zeta", "DE", "WGL"},
        {"fhg-eta", "Fraunhofer Institute Eta", "DE", "FHG"},
        {"kit-theta", "Institute of Technology Theta", "DE", "UNIV;HGF"},
    };
    return pool;
}

const std::vector<InstitutionSpec>& nonsector_pool() {
    static const std::vector<InstitutionSpec> pool = {
        {"klinikum-sued", "Klinikum Sued", "DE", ""},
        {"fh-rheintal", "FH Rheintal", "DE", ""},
        {"labor-hansa", "Labor Hansa", "DE", ""},
        {"stiftung-nord", "Stiftung Nord", "DE", ""},
    };
    return pool;
}

const std::vector<InstitutionSpec>& foreign_pool() {
    static const std::vector<InstitutionSpec> pool = {
        {"eth-zuerich", "ETH Zuerich", "CH", ""},
        {"cnrs-paris", "CNRS Paris", "FR", ""},
        {"mit-boston", "MIT", "US", ""},
        {"oxford-clarendon", "Clarendon Laboratory", "GB", ""},
        {"tokyo-soken", "Soken Institute Tokyo", "JP", ""},
        {"tu-delft", "TU Delft", "NL", ""},
    };
    return pool;
}

const std::vector<std::string>& gold_issns() {
    static const std::vector<std::string> issns = {
        "2041-1723", "1932-6203", "2045-2322", "1748-7188",
        "2050-084X", "1367-2630", "2046-1402", "1474-9718",
    };
    return issns;
}

const std::vector<std::string>& nongold_issns() {
    static const std::vector<std::string> issns = {"0028-0836", "1550-7998", "1234-5679"};
    return issns;
}

enum class Archetype { K0, KNSec, KN, KI, KISec, NoSector };

struct DocTypeChoice {
    std::set<std::string> types;
    bool included;
};

const std::vector<std::pair<DocTypeChoice, int>>& doc_type_choices() {
    // (choice, weight); inclusion is fixed by construction here.
    static const std::vector<std::pair<DocTypeChoice, int>> choices = {
        {{{"Article"}, true}, 66},
        {{{"Review"}, true}, 6},
        {{{"Article", "Proceedings Paper"}, true}, 5},
        {{{"Meeting"}, false}, 4},
        {{{"Meeting Abstract"}, false}, 2},
        {{{"Editorial Material"}, true}, 4},
        {{{"Letter"}, true}, 3},
        {{{"Film Review"}, false}, 2},
        {{{"Article", "Film Review"}, true}, 2},
        {{{"Book"}, false}, 2},
    };
    return choices;
}

struct GeneratedPub {
    Publication pub;
    bool year_ok = false;
    bool coop_ok = false;
    bool gold_ok = false;
    bool doctype_ok = false;
    bool roles_ok = false;

    bool included() const { return year_ok && coop_ok && gold_ok && doctype_ok && roles_ok; }
    std::string reason() const {
        if (!year_ok) return "year";
        if (!coop_ok) return "cooperation";
        if (!gold_ok) return "gold-oa";
        if (!doctype_ok) return "doc-type";
        if (!roles_ok) return "sector-roles";
        return "included";
    }
};

class Generator {
public:
    explicit Generator(unsigned seed) : rng_(seed) {}

    GeneratedPub make(std::size_t index, Archetype archetype) {
        GeneratedPub g;
        char id[32];
        std::snprintf(id, sizeof id, "pub-%04zu", index + 1);
        g.pub.id = id;

        g.pub.year = pick_year();
        g.year_ok = g.pub.year >= 2014 && g.pub.year <= 2018;

        g.coop_ok = archetype == Archetype::K0 || archetype == Archetype::KN ||
                    archetype == Archetype::KNSec;

        assign_issns(g);
        assign_doc_types(g);
        build_authors(g, archetype);
        return g;
    }

private:
    int pick_year() {
        const int r = uniform(0, 19);
        if (r == 0) return 2012;
        if (r == 1) return 2013;
        if (r == 18) return 2019;
        if (r == 19) return 2020;
        return 2014 + (r - 2) % 5;
    }

    void assign_issns(GeneratedPub& g) {
        const int r = uniform(0, 99);
        if (r < 75) {
            g.pub.issns.insert(pick(gold_issns()));
            if (uniform(0, 3) == 0) g.pub.issns.insert(pick(nongold_issns()));
            g.gold_ok = true;
        } else if (r < 90) {
            g.pub.issns.insert(pick(nongold_issns()));
        } else if (r < 95) {
            g.pub.issns.insert("9999-9999");  // failing check digit
        }  // else: no ISSN at all
    }

    void assign_doc_types(GeneratedPub& g) {
        int total = 0;
        for (const auto& [choice, weight] : doc_type_choices()) total += weight;
        int r = uniform(0, total - 1);
        for (const auto& [choice, weight] : doc_type_choices()) {
            if (r < weight) {
                g.pub.doc_types = choice.types;
                g.doctype_ok = choice.included;
                return;
            }
            r -= weight;
        }
    }

    void build_authors(GeneratedPub& g, Archetype archetype) {
        std::vector<const InstitutionSpec*> slate = build_slate(archetype);

        // First-author target: usually at a registered institution when the
        // slate has one; a tail of violations exercises the role filter.
        const bool want_first_at_sector = uniform(0, 99) < 85;
        std::stable_partition(slate.begin(), slate.end(),
                              [&](const InstitutionSpec* spec) {
                                  return spec->in_registry() == want_first_at_sector;
                              });

        const int n_authors =
            std::max<int>(uniform(1, 12), static_cast<int>(slate.size()));
        std::vector<std::vector<const InstitutionSpec*>> affiliations(n_authors);
        for (std::size_t i = 0; i < slate.size(); ++i)
            affiliations[i % affiliations.size()].push_back(slate[i]);
        for (int i = 0; i < n_authors; ++i) {
            if (affiliations[i].empty())
                affiliations[i].push_back(slate[uniform(0, static_cast<int>(slate.size()) - 1)]);
            // occasional second membership; the first author keeps the
            // targeted placement untouched
            if (i > 0 && slate.size() >= 2 && uniform(0, 3) == 0) {
                const InstitutionSpec* extra =
                    slate[uniform(0, static_cast<int>(slate.size()) - 1)];
                if (std::find(affiliations[i].begin(), affiliations[i].end(), extra) ==
                    affiliations[i].end())
                    affiliations[i].push_back(extra);
            }
        }

        // Reprint authors: mostly one, sometimes two, rarely none.
        const int reprint_roll = uniform(0, 99);
        int reprint_count = reprint_roll < 5 ? 0 : reprint_roll < 85 ? 1 : 2;
        std::set<int> reprint_authors;
        if (reprint_count > 0) {
            const bool want_reprint_at_sector = uniform(0, 99) < 85;
            std::vector<int> candidates;
            for (int i = 0; i < n_authors; ++i) {
                const bool has_sector =
                    std::any_of(affiliations[i].begin(), affiliations[i].end(),
                                [](const InstitutionSpec* s) { return s->in_registry(); });
                if (has_sector == want_reprint_at_sector) candidates.push_back(i);
            }
            if (candidates.empty())
                for (int i = 0; i < n_authors; ++i) candidates.push_back(i);
            while (static_cast<int>(reprint_authors.size()) < reprint_count) {
                reprint_authors.insert(
                    candidates[uniform(0, static_cast<int>(candidates.size()) - 1)]);
                if (reprint_authors.size() == candidates.size()) break;
            }
        }

        for (int i = 0; i < n_authors; ++i) {
            AuthorRecord author;
            author.position = i + 1;
            author.is_reprint = reprint_authors.contains(i);
            for (const InstitutionSpec* spec : affiliations[i])
                author.affiliations.push_back({InstitutionId(spec->id), spec->country});
            g.pub.authors.push_back(std::move(author));
        }

        const auto at_sector = [&](int i) {
            return std::any_of(affiliations[i].begin(), affiliations[i].end(),
                               [](const InstitutionSpec* s) { return s->in_registry(); });
        };
        const bool first_ok = at_sector(0);
        bool reprint_ok = false;
        for (int i : reprint_authors) reprint_ok = reprint_ok || at_sector(i);
        g.roles_ok = first_ok && reprint_ok;
    }

    std::vector<const InstitutionSpec*> build_slate(Archetype archetype) {
        std::vector<const InstitutionSpec*> slate;
        const auto take = [&](const std::vector<InstitutionSpec>& pool, int count) {
            std::set<int> chosen;
            while (static_cast<int>(chosen.size()) < count) {
                const int i = uniform(0, static_cast<int>(pool.size()) - 1);
                if (chosen.insert(i).second) slate.push_back(&pool[i]);
            }
        };
        switch (archetype) {
            case Archetype::K0:
                take(sector_pool(), 1);
                break;
            case Archetype::KNSec:
                take(sector_pool(), uniform(2, 3));
                if (uniform(0, 9) < 3) take(nonsector_pool(), 1);
                break;
            case Archetype::KN:
                take(sector_pool(), 1);
                take(nonsector_pool(), uniform(1, 2));
                break;
            case Archetype::KI:
                take(sector_pool(), 1);
                take(foreign_pool(), uniform(1, 2));
                if (uniform(0, 9) < 3) take(nonsector_pool(), 1);
                break;
            case Archetype::KISec:
                take(sector_pool(), uniform(2, 3));
                take(foreign_pool(), uniform(1, 2));
                break;
            case Archetype::NoSector:
                switch (uniform(0, 2)) {
                    case 0: take(nonsector_pool(), uniform(1, 2)); break;
                    case 1: take(foreign_pool(), uniform(1, 2)); break;
                    default:
                        take(nonsector_pool(), 1);
                        take(foreign_pool(), 1);
                }
                break;
        }
        return slate;
    }

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    template <typename T>
    const T& pick(const std::vector<T>& pool) {
        return pool[uniform(0, static_cast<int>(pool.size()) - 1)];
    }

    std::mt19937 rng_;
};

void write_gold_list(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    out << "issn\n";
    for (const std::string& issn : gold_issns()) out << issn << "\n";
    // same journal, hyphen-free spelling; collapses on normalization
    out << "20411723\n";
}

void write_registry(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    out << "institution_id,name,sectors\n";
    for (const InstitutionSpec& spec : sector_pool())
        out << csv_line({csv_field(spec.id), csv_field(spec.name), csv_field(spec.sectors)})
            << "\n";
}

void write_payments(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    out << "institution,period,euro,is_hybrid,issn,doi\n";
    // Eight pairs symmetric around 1540.00: the non-hybrid mean is exactly
    // 1540 euros.
    const std::vector<std::pair<std::string, std::string>> non_hybrid = {
        {"1040.00", "2040.00"}, {"1140.00", "1940.00"}, {"1240.00", "1840.00"},
        {"1340.00", "1740.00"}, {"1440.00", "1640.00"}, {"1490.00", "1590.00"},
        {"1515.50", "1564.50"}, {"1540.00", "1540.00"},
    };
    std::size_t i = 0;
    for (const auto& [low, high] : non_hybrid) {
        const InstitutionSpec& a = sector_pool()[i % sector_pool().size()];
        const InstitutionSpec& b = sector_pool()[(i + 5) % sector_pool().size()];
        const std::string issn = gold_issns()[i % gold_issns().size()];
        out << csv_line({csv_field(a.name), std::to_string(2014 + static_cast<int>(i % 5)), low,
                         "FALSE", issn, ""})
            << "\n";
        out << csv_line({csv_field(b.name), std::to_string(2018), high, "FALSE", "",
                         "10.5555/apc." + std::to_string(i)})
            << "\n";
        ++i;
    }
    const std::vector<std::string> hybrid = {"2150.00", "2380.00", "2590.00", "2260.00",
                                             "2720.00", "2475.00", "2840.00", "2905.00"};
    for (std::size_t h = 0; h < hybrid.size(); ++h) {
        const InstitutionSpec& spec = sector_pool()[(h + 3) % sector_pool().size()];
        out << csv_line({csv_field(spec.name), std::to_string(2015 + static_cast<int>(h % 4)),
                         hybrid[h], "TRUE", "", ""})
            << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generates the bundled synthetic corpus, registry, journal list, payments\n"
                 "and the expected-outcome manifest for the default filter configuration."};
    std::string out_dir = "data";
    std::size_t n_pubs = 200;
    unsigned seed = 20260809;
    app.add_option("--out", out_dir, "Output directory")->capture_default_str();
    app.add_option("--pubs", n_pubs, "Number of publications")->capture_default_str();
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);

    std::vector<Archetype> plan;
    const auto extend = [&](Archetype archetype, double fraction) {
        const auto count = static_cast<std::size_t>(fraction * static_cast<double>(n_pubs));
        plan.insert(plan.end(), count, archetype);
    };
    extend(Archetype::K0, 0.25);
    extend(Archetype::KNSec, 0.225);
    extend(Archetype::KN, 0.175);
    extend(Archetype::KI, 0.15);
    extend(Archetype::KISec, 0.10);
    while (plan.size() < n_pubs) plan.push_back(Archetype::NoSector);

    Generator gen(seed);
    std::shuffle(plan.begin(), plan.end(), std::mt19937(seed ^ 0x5bd1e995u));

    std::vector<Publication> corpus;
    std::ofstream manifest(dir / "manifest.csv", std::ios::binary);
    manifest << "id,expected_included,reason\n";
    std::size_t included = 0;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        GeneratedPub g = gen.make(i, plan[i]);
        manifest << csv_line({g.pub.id, g.included() ? "true" : "false", g.reason()}) << "\n";
        if (g.included()) ++included;
        corpus.push_back(std::move(g.pub));
    }
    write_publication_corpus(dir / "synthetic_corpus.jsonl", corpus);
    write_gold_list(dir / "gold_oa.csv");
    write_registry(dir / "registry.csv");
    write_payments(dir / "payments.csv");

    std::cout << "wrote " << corpus.size() << " publications (" << included
              << " expected to pass the default filter) to " << out_dir << "\n";
    return 0;
}
