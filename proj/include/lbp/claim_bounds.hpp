#pragma once

#include <cstdint>
#include <vector>

#include "lbp/linear_bp.hpp"
#include "lbp/rational.hpp"
#include "lbp/truth_table.hpp"

namespace lbp {

struct ClaimNodeReport {
    int node = -1;
    std::uint64_t meeting_paths = 0;  // k: paths from the source into the node
    std::uint64_t wrong_inputs = 0;   // inputs through the node with f != bp
    bool bound_ok = false;            // wrong >= (k 2^d / 2)(1 - sqrt(eps + 1/k))
};

struct ClaimReport {
    bool pass = false;
    int depth = 0;  // n - d
    std::vector<ClaimNodeReport> nodes;
    std::uint64_t path_sum = 0;       // sum of k over the depth-(n-d) cut
    std::uint64_t expected_path_sum = 0;  // 2^(n-d)
    bool sum_ok = false;
};

// Verifies, for a full strongly read-once function program and a function
// f assumed to be a directional affine extractor for dimension d with
// bias eps, that every node on the depth-(n-d) cut is passed by at least
// (k 2^d / 2)(1 - sqrt(eps + 1/k)) wrong inputs, where k counts the paths
// meeting there. Leaves shallower than n-d are first extended by chains of
// ignored queries. The bound is decided in exact integer arithmetic:
// wrong >= bound  <=>  K - 2 wrong <= 0  or  (K - 2 wrong)^2 q k <= K^2 (p k + q)
// with K = k 2^d and eps = p/q.
ClaimReport check_wrong_input_bound(const LinearBP& bp, const TruthTable& f, int d,
                                    const Rational& eps, int jobs = 1);

}  // namespace lbp
