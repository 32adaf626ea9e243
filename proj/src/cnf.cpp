#include "lbp/cnf.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lbp {

bool Cnf::clause_falsified(int idx, Word x) const {
    for (int lit : clauses.at(idx)) {
        int v = (lit > 0 ? lit : -lit) - 1;
        bool val = (x >> v) & 1;
        if (val == (lit > 0)) return false;
    }
    return true;
}

int Cnf::falsified_clause(Word x) const {
    for (int i = 0; i < num_clauses(); ++i)
        if (clause_falsified(i, x)) return i;
    return -1;
}

bool Cnf::satisfiable_brute_force() const {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        if (falsified_clause(static_cast<Word>(x)) < 0) return true;
    return false;
}

Cnf parse_dimacs(std::istream& in) {
    Cnf f;
    int expected_clauses = -1;
    std::string line;
    std::vector<int> current;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream hs(line);
            std::string p, fmt;
            hs >> p >> fmt >> f.n >> expected_clauses;
            if (fmt != "cnf" || !hs || f.n < 1 || f.n > kMaxVars || expected_clauses < 0)
                throw std::invalid_argument("bad DIMACS header: " + line);
            have_header = true;
            continue;
        }
        if (!have_header) throw std::invalid_argument("DIMACS clause before header");
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                int v = lit > 0 ? lit : -lit;
                if (v > f.n) throw std::invalid_argument("DIMACS literal out of range");
                current.push_back(lit);
            }
        }
    }
    if (!have_header) throw std::invalid_argument("missing DIMACS header");
    if (!current.empty()) throw std::invalid_argument("DIMACS clause missing terminating 0");
    if (expected_clauses >= 0 && f.num_clauses() != expected_clauses)
        throw std::invalid_argument("DIMACS clause count mismatch");
    return f;
}

Cnf parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open CNF file: " + path);
    return parse_dimacs(in);
}

std::string to_dimacs(const Cnf& f) {
    std::ostringstream out;
    out << "p cnf " << f.n << " " << f.num_clauses() << "\n";
    for (const auto& cl : f.clauses) {
        for (int lit : cl) out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

}  // namespace lbp
