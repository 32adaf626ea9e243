#include <algorithm>
#include <map>
#include <stdexcept>

#include "lbp/errors.hpp"
#include "lbp/reslin.hpp"

namespace lbp {

LinearBP proof_to_bp(const Cnf& f, const Proof& proof) {
    auto check = check_proof(f, proof, /*refutation=*/true);
    if (!check.ok)
        throw std::invalid_argument("proof_to_bp: input is not a checked refutation (line " +
                                    std::to_string(check.line) + ": " + check.reason + ")");

    // Contract weakening chains: each line's representative is the first
    // non-weakening ancestor.
    const int count = static_cast<int>(proof.lines.size());
    std::vector<int> root(count);
    for (int i = 0; i < count; ++i) {
        const auto& ln = proof.lines[i];
        root[i] = ln.rule == ProofLine::Rule::kWeaken ? root[ln.arg0] : i;
    }

    // Walk the reversed proof DAG from the final line's representative.
    // A resolution line becomes a query node; the edge taken on answer b
    // leads to the premise holding (pivot = b+1). Axiom lines become sinks.
    LinearBP bp;
    bp.n = f.n;
    bp.mode = BpMode::kSearch;
    std::map<int, int> id_of;

    auto build = [&](auto&& self, int line) -> int {
        auto it = id_of.find(line);
        if (it != id_of.end()) return it->second;
        const auto& ln = proof.lines[line];
        int id = static_cast<int>(bp.nodes.size());
        bp.nodes.emplace_back();
        id_of.emplace(line, id);
        if (ln.rule == ProofLine::Rule::kAxiom) {
            bp.nodes[id].is_sink = true;
            bp.nodes[id].label = {true, ln.arg0};
        } else {
            bp.nodes[id].query = ln.pivot;
            int on_one = self(self, root[ln.arg0]);   // premise with (pivot = 0)
            int on_zero = self(self, root[ln.arg1]);  // premise with (pivot = 1)
            bp.nodes[id].next = {on_zero, on_one};
        }
        return id;
    };
    bp.source = build(build, root[count - 1]);
    validate(bp);
    return bp;
}

namespace {

struct PinnedSide {
    LinearClause rewritten;  // (q = bit+1) ∨ (negated pinned rows)
    bool changed = false;    // differs syntactically from the child clause
};

// Rewrites a child clause so that its negation reads (q = bit) ∧ (rows
// from pre_v with their pinned values). The negation's solution set is
// unchanged up to adding q = bit, which every input surviving toward this
// child satisfies, so the rewrite is a sound weakening.
PinnedSide pin_and_rewrite(const LinearClause& child, const LinearForm& q, bool bit,
                           const Subspace& pre_v) {
    const int n = child.n;
    LinearSystem target = child.negation();
    target.add(q, bit);
    auto x_star = solve(target);
    if (!x_star)
        throw std::logic_error("bp_to_proof: child clause negation inconsistent with its branch");

    std::vector<Word> rows;
    for (const auto& e : child.eqs) rows.push_back(e.form.coeffs);
    rows.push_back(q.coeffs);
    Subspace pinned = intersect(rref(n, rows), pre_v);

    std::vector<LinearEquation> eqs;
    eqs.push_back({q, !bit});
    for (Word row : pinned.basis) {
        LinearForm rf(n, row);
        eqs.push_back({rf, !rf.eval_bits(x_star->shift)});
    }
    PinnedSide side;
    side.rewritten = LinearClause::make(n, std::move(eqs));
    side.changed = !(side.rewritten == child);
    return side;
}

bool rows_inside(const LinearClause& c, const Subspace& space) {
    for (const auto& e : c.eqs)
        if (!space.contains(e.form.coeffs)) return false;
    return true;
}

void debug_check_invariants(const LinearBP& full, const Cnf& f,
                            const std::vector<NodeSpaces>& sp, const std::vector<int>& line_of,
                            const Proof& proof) {
    if (full.n > 10)
        throw BudgetError("bp2proof debug invariants are capped at n <= 10");
    // Invariant 1: every input reaching v falsifies C_v. Invariant 2: the
    // forms of C_v lie inside pre(v).
    for (int v = 0; v < full.size(); ++v) {
        const auto& cl = proof.lines[line_of[v]].clause;
        if (cl.tautology) throw std::logic_error("debug invariants: tautological node clause");
        if (!rows_inside(cl, sp[v].pre))
            throw std::logic_error("debug invariants: clause forms escape pre at node " +
                                   std::to_string(v));
    }
    for (Word x = 0; x < (Word{1} << full.n); ++x) {
        int v = full.source;
        for (;;) {
            const auto& cl = proof.lines[line_of[v]].clause;
            if (cl.satisfied_by(x))
                throw std::logic_error("debug invariants: input " + std::to_string(x) +
                                       " fails to falsify the clause at node " + std::to_string(v));
            const auto& nd = full.nodes[v];
            if (nd.is_sink) break;
            v = nd.next[nd.query.eval_bits(x) ? 1 : 0];
        }
    }
    (void)f;
}

}  // namespace

Proof bp_to_proof(const Cnf& f, const LinearBP& bp, const BpToProofOptions& opts) {
    validate(bp);
    if (bp.mode != BpMode::kSearch)
        throw std::invalid_argument("bp_to_proof: program must be in search mode");
    if (bp.n != f.n) throw std::invalid_argument("bp_to_proof: variable count mismatch");
    if (auto ro = is_weakly_read_once(bp); !ro.ok)
        throw std::invalid_argument("bp_to_proof: program is not weakly read-once (node " +
                                    std::to_string(ro.witness) + ")");
    if (auto sc = solves_search(bp, f, opts.jobs); !sc.ok)
        throw std::invalid_argument("bp_to_proof: program does not solve the search problem "
                                    "(counterexample input " +
                                    std::to_string(sc.counterexample) + ")");

    const LinearBP full = make_full(bp);
    const auto sp = compute_spaces(full);
    const auto order = topo_order(full);

    Proof proof;
    proof.n = f.n;
    std::vector<int> line_of(full.nodes.size(), -1);
    std::map<int, int> axiom_line;  // CNF clause -> line

    auto emit = [&](ProofLine ln) {
        proof.lines.push_back(std::move(ln));
        return static_cast<int>(proof.lines.size()) - 1;
    };

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        const auto& nd = full.nodes[v];
        if (nd.is_sink) {
            auto [ax, inserted] = axiom_line.emplace(nd.label.value, -1);
            if (inserted) {
                ProofLine ln;
                ln.rule = ProofLine::Rule::kAxiom;
                ln.arg0 = nd.label.value;
                ln.clause = clause_from_cnf(f, nd.label.value);
                ax->second = emit(std::move(ln));
            }
            line_of[v] = ax->second;
            continue;
        }

        const int u = nd.next[0], w = nd.next[1];
        const LinearClause& cu = proof.lines[line_of[u]].clause;
        const LinearClause& cw = proof.lines[line_of[w]].clause;

        // When one child clause already lives inside pre(v), it falsifies
        // everything reaching v (inputs reaching v via the other branch
        // have a twin on this branch that agrees on all of pre(v)); reuse
        // it. Ignored queries (u == w) always land here.
        if (rows_inside(cu, sp[v].pre)) {
            line_of[v] = line_of[u];
            continue;
        }
        if (rows_inside(cw, sp[v].pre)) {
            line_of[v] = line_of[w];
            continue;
        }

        // General step: pin q on both sides, rewrite each negation over a
        // basis of pre(v), then resolve the rewritten clauses on q.
        PinnedSide side_u = pin_and_rewrite(cu, nd.query, false, sp[v].pre);
        PinnedSide side_w = pin_and_rewrite(cw, nd.query, true, sp[v].pre);

        int line_u = line_of[u];
        if (side_u.changed) {
            ProofLine ln;
            ln.rule = ProofLine::Rule::kWeaken;
            ln.arg0 = line_u;
            ln.clause = side_u.rewritten;
            line_u = emit(std::move(ln));
        }
        int line_w = line_of[w];
        if (side_w.changed) {
            ProofLine ln;
            ln.rule = ProofLine::Rule::kWeaken;
            ln.arg0 = line_w;
            ln.clause = side_w.rewritten;
            line_w = emit(std::move(ln));
        }

        // side_w carries (q = 0), side_u carries (q = 1).
        std::vector<LinearEquation> merged;
        LinearEquation e0{nd.query, false}, e1{nd.query, true};
        for (const auto& e : side_w.rewritten.eqs)
            if (!(e == e0)) merged.push_back(e);
        for (const auto& e : side_u.rewritten.eqs)
            if (!(e == e1)) merged.push_back(e);
        ProofLine ln;
        ln.rule = ProofLine::Rule::kResolve;
        ln.arg0 = line_w;
        ln.arg1 = line_u;
        ln.pivot = nd.query;
        ln.clause = LinearClause::make(f.n, std::move(merged));
        if (ln.clause.tautology)
            throw std::logic_error("bp_to_proof: resolvent became a tautology at node " +
                                   std::to_string(v));
        line_of[v] = emit(std::move(ln));
    }

    // The source clause has no forms left (pre(source) = {0}); a checked
    // search program forces it to be the empty clause.
    const LinearClause& final_clause = proof.lines[line_of[full.source]].clause;
    if (!final_clause.is_empty())
        throw std::logic_error("bp_to_proof: source clause is not empty");
    if (line_of[full.source] != static_cast<int>(proof.lines.size()) - 1) {
        // Re-emit as a weakening so the refutation ends on the empty clause.
        ProofLine ln;
        ln.rule = ProofLine::Rule::kWeaken;
        ln.arg0 = line_of[full.source];
        ln.clause = LinearClause::empty(f.n);
        emit(std::move(ln));
    }

    if (opts.debug_invariants) debug_check_invariants(full, f, sp, line_of, proof);
    return proof;
}

}  // namespace lbp
