#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lbp/reslin.hpp"

namespace lbp {

namespace {

std::string eq_text(const LinearEquation& e) {
    return e.form.hex() + "=" + (e.rhs ? "1" : "0");
}

LinearEquation parse_eq(const std::string& tok, int n) {
    auto pos = tok.find('=');
    if (pos == std::string::npos || pos + 2 != tok.size())
        throw std::invalid_argument("proof: bad equation \"" + tok + "\"");
    char b = tok[pos + 1];
    if (b != '0' && b != '1') throw std::invalid_argument("proof: equation bit must be 0 or 1");
    LinearForm f = LinearForm::parse(tok.substr(0, pos), n);
    if (f.is_zero())
        throw std::invalid_argument("proof: zero form is not allowed in the text format");
    return {f, b == '1'};
}

}  // namespace

Proof parse_proof(std::istream& in, int n) {
    check_dim(n);
    Proof proof;
    proof.n = n;
    std::string line;
    std::size_t lineno = 0;
    int expected_id = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        auto fail = [&](const std::string& why) {
            throw std::invalid_argument("proof line " + std::to_string(lineno) + ": " + why);
        };

        int id;
        if (!(ls >> id)) fail("missing step id");
        if (id != expected_id) fail("step ids must be 1,2,3,...");
        ++expected_id;

        std::string clause_tok;
        if (!(ls >> clause_tok)) fail("missing clause");
        std::vector<LinearEquation> eqs;
        if (clause_tok != "[]") {
            std::istringstream cs(clause_tok);
            std::string eq;
            while (std::getline(cs, eq, '|')) eqs.push_back(parse_eq(eq, n));
            if (eqs.empty()) fail("empty clause must be written []");
        }

        ProofLine pl;
        pl.clause = LinearClause::make(n, std::move(eqs));
        std::string rule;
        if (!(ls >> rule)) fail("missing rule");
        if (rule == "ax") {
            int idx;
            if (!(ls >> idx) || idx < 1) fail("ax needs a 1-based clause index");
            pl.rule = ProofLine::Rule::kAxiom;
            pl.arg0 = idx - 1;
        } else if (rule == "wk") {
            int ref;
            if (!(ls >> ref) || ref < 1 || ref >= id) fail("wk needs an earlier step id");
            pl.rule = ProofLine::Rule::kWeaken;
            pl.arg0 = ref - 1;
        } else if (rule == "res") {
            int r0, r1;
            std::string piv;
            if (!(ls >> r0 >> r1 >> piv) || r0 < 1 || r1 < 1 || r0 >= id || r1 >= id)
                fail("res needs two earlier step ids and a pivot");
            pl.rule = ProofLine::Rule::kResolve;
            pl.arg0 = r0 - 1;
            pl.arg1 = r1 - 1;
            pl.pivot = LinearForm::parse(piv, n);
            if (pl.pivot.is_zero()) fail("pivot must be a nonzero form");
        } else {
            fail("unknown rule \"" + rule + "\"");
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
        proof.lines.push_back(std::move(pl));
    }
    return proof;
}

Proof parse_proof_file(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open proof file: " + path);
    return parse_proof(in, n);
}

std::string proof_to_text(const Proof& proof) {
    std::ostringstream out;
    for (std::size_t i = 0; i < proof.lines.size(); ++i) {
        const auto& ln = proof.lines[i];
        out << (i + 1) << ' ';
        if (ln.clause.eqs.empty()) {
            out << "[]";
        } else {
            for (std::size_t e = 0; e < ln.clause.eqs.size(); ++e) {
                if (e) out << '|';
                out << eq_text(ln.clause.eqs[e]);
            }
        }
        switch (ln.rule) {
            case ProofLine::Rule::kAxiom:
                out << " ax " << (ln.arg0 + 1);
                break;
            case ProofLine::Rule::kWeaken:
                out << " wk " << (ln.arg0 + 1);
                break;
            case ProofLine::Rule::kResolve:
                out << " res " << (ln.arg0 + 1) << ' ' << (ln.arg1 + 1) << ' ' << ln.pivot.hex();
                break;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace lbp
