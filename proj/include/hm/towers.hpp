#pragma once

#include "hm/hochschild.hpp"

namespace hm {

// Nested full subcategories of a finite ambient category, presented by
// growing object lists. No infinite category is ever materialized; towers
// report window-certified stabilization evidence only.
struct FilteredFamily {
    std::shared_ptr<const KCategory> full;
    std::vector<std::vector<std::string>> stages;  // nested object lists
    std::string family;                            // metadata label
};

// stages nested and strictly increasing; all objects exist in the ambient
ValidationReport validate_family(const FilteredFamily& fam);
FilteredFamily family_from_corpus(Family f, const CorpusParams& p, FieldSpec field);

// Per-stage cohomology of the regular bimodule, with transition matrices
// induced by restricting normalized cocycle representatives to the smaller
// stage. trans[i][n] has one column per H^n(stage i+1) representative,
// expressed in the H^n(stage i) representative basis.
struct Tower {
    int nmax = 0;
    FieldSpec field;
    std::vector<std::vector<long>> dims;                // [stage][degree]
    std::vector<std::vector<std::vector<Vec>>> trans;   // [stage][degree][column]
};

Tower build_hh_tower(const FilteredFamily& fam, int nmax, int stages,
                     long budget = kDefaultBudget);

struct MLStage {
    int stage = 0;
    std::vector<long> image_dims;  // dim Im(H^n(stage j) -> H^n(stage)) for j >= stage
    bool stabilized = false;
    int stable_at = -1;  // first j from which the image dims are constant
};
struct MLReport {
    std::vector<MLStage> stages;
    bool all_stabilized() const;
};

// Mittag-Leffler detection in one degree over the window
MLReport ml_check(const Tower& t, int n);

struct LimReport {
    long lim = 0;        // stable image dimension into the first stage
    long lim1 = 0;       // cokernel of the shift-difference map on the window
    bool certified = false;  // trailing image dims constant (window evidence)
};

// trailing = number of trailing stable stages required for the certificate
LimReport truncated_lim_and_lim1(const Tower& t, int n, int trailing = 3);

struct SesRow {
    int degree = 0;
    long lim1_prev = 0;  // lim^1 of the degree-(n-1) tower
    long lim = 0;        // lim of the degree-n tower
    long inferred = 0;   // = lim1_prev + lim when certified
    bool certified = false;
};
struct SesReport {
    Tower tower;
    std::vector<SesRow> rows;
};

// Renders the short exact sequences 0 -> lim^1 H^{n-1} -> H^n -> lim H^n -> 0
// over the window; degrees without certificates are flagged, not inferred.
SesReport ses_report(const FilteredFamily& fam, int nmax, int stages,
                     long budget = kDefaultBudget, int trailing = 3);

}  // namespace hm
