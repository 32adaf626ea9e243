#include "lbp/reslin.hpp"

#include <algorithm>
#include <stdexcept>

namespace lbp {

LinearClause LinearClause::make(int n, std::vector<LinearEquation> raw) {
    check_dim(n);
    LinearClause c;
    c.n = n;
    for (auto& e : raw) {
        if (e.form.n != n) throw std::invalid_argument("clause: equation dimension mismatch");
        if (e.form.is_zero()) {
            // 0=0 is trivially true (the clause becomes a tautology),
            // 0=1 trivially false (the disjunct disappears).
            if (!e.rhs) c.tautology = true;
            continue;
        }
        c.eqs.push_back(e);
    }
    std::sort(c.eqs.begin(), c.eqs.end());
    c.eqs.erase(std::unique(c.eqs.begin(), c.eqs.end()), c.eqs.end());
    for (std::size_t i = 1; i < c.eqs.size(); ++i)
        if (c.eqs[i].form == c.eqs[i - 1].form) c.tautology = true;
    return c;
}

bool LinearClause::has(const LinearEquation& e) const {
    return std::binary_search(eqs.begin(), eqs.end(), e);
}

bool LinearClause::satisfied_by(Word x) const {
    if (tautology) return true;
    for (const auto& e : eqs)
        if (e.form.eval_bits(x) == e.rhs) return true;
    return false;
}

LinearSystem LinearClause::negation() const {
    LinearSystem sys(n);
    for (const auto& e : eqs) sys.add(e.form, !e.rhs);
    return sys;
}

LinearClause clause_from_cnf(const Cnf& f, int idx) {
    std::vector<LinearEquation> eqs;
    for (int lit : f.clauses.at(idx)) {
        int v = (lit > 0 ? lit : -lit) - 1;
        eqs.push_back({LinearForm(f.n, Word{1} << v), lit > 0});
    }
    return LinearClause::make(f.n, std::move(eqs));
}

namespace {

bool system_consistent(const LinearSystem& sys) {
    return solve(sys).has_value();
}

}  // namespace

bool implies(const LinearClause& d, const LinearClause& c) {
    if (d.n != c.n) throw std::invalid_argument("implies: dimension mismatch");
    if (c.tautology) return true;
    if (d.tautology) return false;  // a tautology implies only tautologies
    LinearSystem neg = c.negation();
    for (const auto& e : d.eqs) {
        LinearSystem sys = neg;
        sys.add(e.form, e.rhs);
        if (system_consistent(sys)) return false;
    }
    return true;
}

namespace {

// A tautology flag is syntactic only when a complementary pair is stored;
// clauses flagged through a dropped 0=0 disjunct cannot participate in
// resolution soundly and are rejected.
bool flag_without_pair(const LinearClause& c) {
    if (!c.tautology) return false;
    for (std::size_t i = 1; i < c.eqs.size(); ++i)
        if (c.eqs[i].form == c.eqs[i - 1].form) return false;
    return true;
}

}  // namespace

RuleCheck check_resolution(const LinearClause& p0, const LinearClause& p1,
                           const LinearForm& pivot, const LinearClause& derived) {
    if (pivot.is_zero()) return {false, "pivot is the zero form"};
    if (flag_without_pair(p0) || flag_without_pair(p1))
        return {false, "premise tautology flag has no syntactic witness"};
    LinearEquation e0{pivot, false}, e1{pivot, true};
    if (!p0.has(e0)) return {false, "first premise lacks (pivot = 0)"};
    if (!p1.has(e1)) return {false, "second premise lacks (pivot = 1)"};

    std::vector<LinearEquation> merged;
    for (const auto& e : p0.eqs)
        if (!(e == e0)) merged.push_back(e);
    for (const auto& e : p1.eqs)
        if (!(e == e1)) merged.push_back(e);
    LinearClause expected = LinearClause::make(p0.n, std::move(merged));
    if (!(expected == derived)) return {false, "derived clause is not the normalized resolvent"};
    return {};
}

ProofCheckResult check_proof(const Cnf& f, const Proof& proof, bool refutation, int jobs) {
    if (proof.n != f.n) return {false, 0, "proof and CNF variable counts differ"};
    const std::size_t count = proof.lines.size();

    // Reference validity first: all premises must point backwards.
    for (std::size_t i = 0; i < count; ++i) {
        const auto& ln = proof.lines[i];
        switch (ln.rule) {
            case ProofLine::Rule::kAxiom:
                if (ln.arg0 < 0 || ln.arg0 >= f.num_clauses())
                    return {false, i + 1, "axiom index out of range"};
                break;
            case ProofLine::Rule::kWeaken:
                if (ln.arg0 < 0 || ln.arg0 >= static_cast<int>(i))
                    return {false, i + 1, "weakening premise must be an earlier line"};
                break;
            case ProofLine::Rule::kResolve:
                if (ln.arg0 < 0 || ln.arg0 >= static_cast<int>(i) || ln.arg1 < 0 ||
                    ln.arg1 >= static_cast<int>(i))
                    return {false, i + 1, "resolution premises must be earlier lines"};
                break;
        }
        if (ln.clause.n != f.n) return {false, i + 1, "clause dimension mismatch"};
    }

    // Rule applications are independent once references are known valid.
    std::int64_t first_bad = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(jobs)
    {
        std::int64_t local = static_cast<std::int64_t>(count);
#pragma omp for schedule(static) nowait
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
            const auto& ln = proof.lines[i];
            bool ok = true;
            switch (ln.rule) {
                case ProofLine::Rule::kAxiom:
                    ok = ln.clause == clause_from_cnf(f, ln.arg0);
                    break;
                case ProofLine::Rule::kWeaken:
                    ok = implies(proof.lines[ln.arg0].clause, ln.clause);
                    break;
                case ProofLine::Rule::kResolve:
                    ok = check_resolution(proof.lines[ln.arg0].clause, proof.lines[ln.arg1].clause,
                                          ln.pivot, ln.clause)
                             .ok;
                    break;
            }
            if (!ok) local = std::min(local, i);
        }
#pragma omp critical
        first_bad = std::min(first_bad, local);
    }

    if (first_bad < static_cast<std::int64_t>(count)) {
        const auto& ln = proof.lines[first_bad];
        std::string reason;
        switch (ln.rule) {
            case ProofLine::Rule::kAxiom:
                reason = "clause does not match the CNF clause";
                break;
            case ProofLine::Rule::kWeaken:
                reason = "clause is not implied by its premise";
                break;
            case ProofLine::Rule::kResolve:
                reason = check_resolution(proof.lines[ln.arg0].clause, proof.lines[ln.arg1].clause,
                                          ln.pivot, ln.clause)
                             .reason;
                break;
        }
        return {false, static_cast<std::size_t>(first_bad) + 1, reason};
    }

    if (refutation) {
        if (count == 0) return {false, 0, "empty proof cannot be a refutation"};
        if (!proof.lines.back().clause.is_empty())
            return {false, count, "final clause is not the empty clause"};
    }
    return {};
}

ProofStats proof_stats(const Proof& proof) {
    ProofStats st;
    st.n = proof.n;
    st.lines = proof.lines.size();
    for (const auto& ln : proof.lines) {
        switch (ln.rule) {
            case ProofLine::Rule::kAxiom: ++st.axioms; break;
            case ProofLine::Rule::kWeaken: ++st.weakenings; break;
            case ProofLine::Rule::kResolve: ++st.resolutions; break;
        }
        st.max_width = std::max(st.max_width, ln.clause.eqs.size());
    }
    st.final_empty = !proof.lines.empty() && proof.lines.back().clause.is_empty();
    return st;
}

}  // namespace lbp
