#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lbp/bitvec.hpp"

namespace lbp {

// Ordinary CNF over x_1..x_n in DIMACS conventions: a clause is a list of
// nonzero literals, positive for x_i, negative for its negation.
struct Cnf {
    int n = 0;
    std::vector<std::vector<int>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    bool clause_falsified(int idx, Word x) const;
    // First clause index falsified by x, or -1 when x satisfies the formula.
    int falsified_clause(Word x) const;
    bool satisfiable_brute_force() const;  // n <= 24 scan
};

Cnf parse_dimacs(std::istream& in);
Cnf parse_dimacs_file(const std::string& path);
std::string to_dimacs(const Cnf& f);

}  // namespace lbp
