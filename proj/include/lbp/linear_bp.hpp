#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lbp/cnf.hpp"
#include "lbp/f2.hpp"
#include "lbp/truth_table.hpp"

namespace lbp {

enum class BpMode { kFunction, kSearch };

// Sink payload: an output bit in function mode, a 0-based CNF clause index
// in search mode.
struct SinkLabel {
    bool is_clause = false;
    int value = 0;
    friend bool operator==(const SinkLabel&, const SinkLabel&) = default;
};

struct BpNode {
    bool is_sink = false;
    LinearForm query;              // inner nodes only
    std::array<int, 2> next{-1, -1};
    SinkLabel label;               // sinks only
};

// Linear branching program: a DAG with one source where every inner node
// queries a linear form and branches on its value. Both out-edges of an
// inner node may target the same successor (the answer is then ignored);
// chains of such nodes are the multipaths used by the fullness transform.
struct LinearBP {
    int n = 0;
    BpMode mode = BpMode::kFunction;
    int source = -1;
    std::vector<BpNode> nodes;

    int size() const { return static_cast<int>(nodes.size()); }
    int inner_count() const {
        int c = 0;
        for (const auto& nd : nodes) c += !nd.is_sink;
        return c;
    }
};

// Structural checks: single source, acyclic, out-degree 2 on inner nodes,
// function sinks labeled 0/1 without duplicates. Throws on violation.
void validate(const LinearBP& bp);

// Parents before children; deterministic (smallest ready id first).
std::vector<int> topo_order(const LinearBP& bp);

struct EvalResult {
    std::vector<int> path;  // node ids visited, sink last
    SinkLabel label;
};
EvalResult evaluate(const LinearBP& bp, const BitVec& x);
SinkLabel evaluate_label(const LinearBP& bp, Word x);

// pre: span of all queries on any source->v path, excluding v's own query.
// post: span of all queries in the subprogram rooted at v.
struct NodeSpaces {
    Subspace pre;
    Subspace post;
};
std::vector<NodeSpaces> compute_spaces(const LinearBP& bp);
NodeSpaces node_spaces(const LinearBP& bp, int v);

struct RoCheck {
    bool ok = true;
    int witness = -1;  // violating node when !ok
};
// No node queries a form inside its pre space.
RoCheck is_weakly_read_once(const LinearBP& bp);
// pre and post intersect trivially at every inner node.
RoCheck is_strongly_read_once(const LinearBP& bp);

// One traversed edge: the inner node and the answer taken at it.
struct PathStep {
    int node = -1;
    int bit = 0;
};

// Solution set of the path's query/answer system, shifted so that every
// form in the post space of the end node vanishes on the shift.
AffineSubspace canonical_path_subspace(const LinearBP& bp, const std::vector<PathStep>& steps);

struct FullCheck {
    bool ok = true;
    int witness = -1;
};
// Every path into a node spans the same query space. Checked for sinks as
// well as inner nodes; the proof translation needs well-defined spaces at
// the leaves.
FullCheck is_full(const LinearBP& bp);

// Equivalent full program, read-once status preserved, size <= 3ns.
// Requires the input to be weakly read-once.
LinearBP make_full(const LinearBP& bp);

// Maximum antichain under the descendant order, via minimum chain cover
// on the transitive closure.
int max_antichain(const LinearBP& bp);

struct SearchCheck {
    bool ok = true;
    Word counterexample = 0;
};
// Every input reaches a sink whose clause it falsifies.
SearchCheck solves_search(const LinearBP& bp, const Cnf& f, int jobs = 1);

// Truth table computed by a function-mode program.
TruthTable bp_function(const LinearBP& bp, int jobs = 1);

// JSON file format.
LinearBP bp_from_json(const std::string& text);
LinearBP bp_from_json_file(const std::string& path);
std::string bp_to_json(const LinearBP& bp);

}  // namespace lbp
