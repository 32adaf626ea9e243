#pragma once

#include <cstdint>
#include <optional>

#include "lbp/errors.hpp"
#include "lbp/f2.hpp"
#include "lbp/truth_table.hpp"

namespace lbp {

// Partial assignment: `domain` marks the assigned variables, `values`
// holds their bits (zero outside the domain).
struct PartialAssignment {
    Word domain = 0;
    Word values = 0;

    bool consistent_with(Word x) const { return ((x ^ values) & domain) == 0; }
};

// Witness that f is not d-mixed: two assignments on the same domain whose
// restrictions coincide.
struct CollapseWitness {
    Word domain;
    Word sigma;
    Word tau;
};

// Witness for the translate form: no point consistent with sigma is
// flipped by adding c.
struct TranslateWitness {
    Word domain;
    Word sigma;
    Word c;
};

struct AffineTranslateWitness {
    AffineSubspace space;
    Word c;
};

struct MixedReport {
    bool mixed = true;
    std::optional<CollapseWitness> collapse;
    std::optional<TranslateWitness> translate;
    std::optional<AffineTranslateWitness> affine;
};

// For every I with |I| <= n-d, all 2^|I| restrictions of f onto I are
// pairwise distinct. Exhaustive; n <= 12.
MixedReport is_d_mixed(const TruthTable& f, int d, std::uint64_t budget = kDefaultBudget);

// Equivalent formulation: for every sigma with |dom| <= n-d and every
// nonzero c supported inside dom, some x consistent with sigma has
// f(x) != f(x+c).
MixedReport is_d_mixed_alt(const TruthTable& f, int d, std::uint64_t budget = kDefaultBudget);

// For every affine S with dim >= d and every c outside S's supporting
// space, some x in S has f(x) != f(x+c). Exhaustive; n <= 10.
MixedReport is_d_affine_mixed(const TruthTable& f, int d, std::uint64_t budget = kDefaultBudget);

}  // namespace lbp
