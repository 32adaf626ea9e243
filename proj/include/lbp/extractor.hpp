#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lbp/errors.hpp"
#include "lbp/f2.hpp"
#include "lbp/rational.hpp"
#include "lbp/rng.hpp"
#include "lbp/truth_table.hpp"

namespace lbp {

struct CheckOptions {
    bool sampled = false;
    std::uint64_t trials = 0;   // sampled mode only
    std::uint64_t seed = 0;     // sampled mode only
    std::uint64_t budget = kDefaultBudget;
    int jobs = 1;
    bool all_dims_geq = false;  // scan dimensions d..n instead of exactly d
};

// Outcome of an extractor/disperser scan. In exhaustive mode worst_bias is
// the true maximum over the whole (direction x subspace) grid and the
// witness is the first grid point attaining it; in sampled mode both refer
// to the sampled trials only.
struct ExtractorReport {
    bool exhaustive = true;
    bool pass = false;
    Rational worst_bias{0, 1};
    std::optional<BitVec> direction;   // engaged only for directional checks
    std::optional<AffineSubspace> witness;
    std::uint64_t trials = 0;          // (direction, subspace) pairs evaluated
    std::uint64_t ops = 0;             // point evaluations performed
};

// Bias of f at most eps on every affine subspace of dimension d
// (or every dimension >= d with all_dims_geq).
ExtractorReport check_affine_extractor(const TruthTable& f, int d, const Rational& eps,
                                       const CheckOptions& opts = {});

// f non-constant on every affine subspace of dimension d.
ExtractorReport check_affine_disperser(const TruthTable& f, int d, const CheckOptions& opts = {});

// Every derivative D_a f, a != 0, passes the corresponding plain check.
ExtractorReport check_directional_affine_extractor(const TruthTable& f, int d, const Rational& eps,
                                                   const CheckOptions& opts = {});
ExtractorReport check_directional_affine_disperser(const TruthTable& f, int d,
                                                   const CheckOptions& opts = {});

// Uniformly random affine subspace of dimension exactly d (uniform basis
// draw with rejection until full rank; shift uniform).
AffineSubspace sample_affine(Rng& rng, int n, int d);

namespace ref {

// Single-threaded reference scan: walks the same enumeration order but
// recomputes every point of every subspace from scratch. Kept as the
// comparison baseline for the parallel kernels.
struct WorstBias {
    Rational bias{0, 1};
    std::uint64_t index = 0;  // global enumeration index of the witness
};
WorstBias worst_restricted_bias(const TruthTable& f, int d);
WorstBias worst_directional_bias(const TruthTable& f, int d);

}  // namespace ref

}  // namespace lbp
