#pragma once

#include "dp2/delta.hpp"

#include <map>
#include <string>
#include <vector>

namespace dp2 {

enum class CarrierKind { NegTwo, Line, BlowupA2 };
enum class Rel { Eq, Le };

struct LemmaPieceSpec {
    Rat lo, hi;
    Poly Psq, PdotC;
    std::vector<std::pair<Poly, int>> ncoeffs;  // negative-part coefficient multiset
};

// One S(W;P) statement of a lemma. Generic checks the generic stratum,
// OnCoeff the strata at curves whose N-coefficient in the given piece equals
// `coeff`, MaxExcl the maximum over all strata except those at curves whose
// coefficient matches an entry of `excl`.
struct StratumCheck {
    enum class Sel { Generic, OnCoeff, MaxExcl } sel = Sel::Generic;
    int piece = 0;
    Poly coeff;
    std::vector<std::pair<int, Poly>> excl;
    Rel rel = Rel::Eq;
    Rat value;
};

struct LemmaSpec {
    std::string id;
    char subcase = 0;
    std::string surface_type;  // a table surface realizing the configuration
    int surface_lines = 0;
    CarrierKind kind = CarrierKind::NegTwo;
    Rat tau;
    std::vector<LemmaPieceSpec> pieces;
    Rat S;                     // stated S_S of the carrier
    std::vector<StratumCheck> checks;
    Rat delta_value;           // the lemma's delta_P claim
    bool delta_exact = true;   // equality vs lower bound
    bool axiom = false;        // imported without computation
    std::string note;          // corrections applied to the stated data, if any

    std::string key() const { return subcase ? id + "." + subcase : id; }
};

const std::vector<LemmaSpec>& lemma_catalog();
std::vector<const LemmaSpec*> find_lemmas(const std::string& id);

struct LemmaResult {
    const LemmaSpec* spec = nullptr;
    bool pass = false;
    int matched_carriers = 0;
    std::vector<std::string> notes;
};

LemmaResult verify_lemma(const LemmaSpec& spec);

// expected lemma usage per table surface, as in the per-type sections
const std::map<std::pair<std::string, int>, std::vector<std::string>>& section_lemma_map();

// fill CertStratum::lemma by matching carrier families against the catalog
void annotate_certificate(DeltaCertificate& cert, const SurfaceModel& m);

}  // namespace dp2
