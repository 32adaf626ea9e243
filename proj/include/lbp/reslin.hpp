#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lbp/cnf.hpp"
#include "lbp/f2.hpp"
#include "lbp/linear_bp.hpp"

namespace lbp {

// One disjunct of a linear clause: form(x) = rhs.
struct LinearEquation {
    LinearForm form;
    bool rhs = false;

    friend bool operator==(const LinearEquation&, const LinearEquation&) = default;
    friend bool operator<(const LinearEquation& a, const LinearEquation& b) {
        return a.form.coeffs != b.form.coeffs ? a.form.coeffs < b.form.coeffs : a.rhs < b.rhs;
    }
};

// Disjunction of linear equations, stored sorted and deduplicated.
// Equations on the zero form are normalized away: 0=1 disjuncts are
// dropped, a 0=0 disjunct makes the clause a tautology. A clause holding
// both f=0 and f=1 keeps the pair and carries the tautology flag.
struct LinearClause {
    int n = 0;
    std::vector<LinearEquation> eqs;
    bool tautology = false;

    static LinearClause make(int n, std::vector<LinearEquation> raw);
    static LinearClause empty(int n) { return make(n, {}); }

    bool is_empty() const { return eqs.empty() && !tautology; }
    bool has(const LinearEquation& e) const;
    bool satisfied_by(Word x) const;
    LinearSystem negation() const;  // conjunction of f_i = a_i + 1

    friend bool operator==(const LinearClause&, const LinearClause&) = default;
};

// Linear-clause reading of an ordinary CNF clause: x -> (x=1), !x -> (x=0).
LinearClause clause_from_cnf(const Cnf& f, int idx);

// Semantic implication D |= C, decided by linear algebra: C is implied iff
// for every disjunct (f=a) of D the system !C ∧ (f=a) is inconsistent.
bool implies(const LinearClause& d, const LinearClause& c);

struct RuleCheck {
    bool ok = true;
    std::string reason;
};

// derived must equal (p0 - {pivot=0}) ∨ (p1 - {pivot=1}), with the pivot
// present in each premise with the required sign.
RuleCheck check_resolution(const LinearClause& p0, const LinearClause& p1,
                           const LinearForm& pivot, const LinearClause& derived);

struct ProofLine {
    enum class Rule { kAxiom, kWeaken, kResolve };
    LinearClause clause;
    Rule rule = Rule::kAxiom;
    int arg0 = -1;  // axiom: 0-based CNF clause; weaken/resolve: 0-based line
    int arg1 = -1;  // resolve: second premise line
    LinearForm pivot;
};

struct Proof {
    int n = 0;
    std::vector<ProofLine> lines;
};

struct ProofCheckResult {
    bool ok = true;
    std::size_t line = 0;  // 1-based first failing line when !ok
    std::string reason;
};

// Validates references sequentially, then checks rule applications (in
// parallel over lines); with `refutation` the final clause must be empty.
ProofCheckResult check_proof(const Cnf& f, const Proof& proof, bool refutation, int jobs = 1);

// Reversed proof DAG with resolutions as query nodes and weakening chains
// contracted; solves the search problem for the CNF. Requires a checked
// refutation. Node count never exceeds the line count.
LinearBP proof_to_bp(const Cnf& f, const Proof& proof);

struct BpToProofOptions {
    bool debug_invariants = false;  // per-node clause invariants, n <= 10
    int jobs = 1;
};

// Refutation extracted from a weakly read-once search program that solves
// the search problem for f. Line count is at most 10*n*size + clauses.
Proof bp_to_proof(const Cnf& f, const LinearBP& bp, const BpToProofOptions& opts = {});

// Text format: one line per step, "<id> <eqs> <rule>" where eqs is
// "<hexmask>=<bit>" joined by '|' or "[]" for the empty clause, and rule
// is "ax <i>", "wk <id>" or "res <id> <id> <hexmask>". Ids are 1-based.
Proof parse_proof(std::istream& in, int n);
Proof parse_proof_file(const std::string& path, int n);
std::string proof_to_text(const Proof& proof);

struct ProofStats {
    int n = 0;
    std::size_t lines = 0;
    std::size_t axioms = 0;
    std::size_t weakenings = 0;
    std::size_t resolutions = 0;
    std::size_t max_width = 0;
    bool final_empty = false;
};
ProofStats proof_stats(const Proof& proof);

}  // namespace lbp
