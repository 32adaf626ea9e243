#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbp/bitvec.hpp"
#include "lbp/f2.hpp"
#include "lbp/gf2k.hpp"
#include "lbp/rational.hpp"

namespace lbp {

// Boolean function on n <= 24 variables as a packed 2^n-bit table.
// Bit at index x is f(x) with x read as a BitVec word.
struct TruthTable {
    int n = 0;
    std::vector<std::uint64_t> words;

    TruthTable() = default;
    explicit TruthTable(int n_) : n(n_) {
        check_dim(n_);
        words.assign(word_count(n_), 0);
    }

    static std::size_t word_count(int n) {
        return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
    }
    std::uint64_t size() const { return std::uint64_t{1} << n; }

    bool get(std::uint32_t x) const { return (words[x >> 6] >> (x & 63)) & 1; }
    void set(std::uint32_t x, bool v) {
        std::uint64_t m = std::uint64_t{1} << (x & 63);
        if (v) words[x >> 6] |= m;
        else words[x >> 6] &= ~m;
    }

    std::uint64_t ones() const;

    friend bool operator==(const TruthTable& a, const TruthTable& b) = default;

    std::string hex() const;
    static TruthTable parse(const std::string& hex, int n);

    static TruthTable from_form(const LinearForm& f);
};

// |#zeros - #ones| / 2^n.
Rational bias(const TruthTable& f);

// Bias of f averaged over the points of a non-empty affine subspace.
Rational restrict_bias(const TruthTable& f, const AffineSubspace& s);

// D_a f(x) = f(x + a) + f(x), a != 0.
TruthTable directional_derivative(const TruthTable& f, const BitVec& a);

// Fraction of inputs where f and g disagree.
Rational distance(const TruthTable& f, const TruthTable& g);

// Walsh spectrum of the +-1 representation: walsh[alpha] = sum over x of
// (-1)^(f(x) + alpha.x). Fast transform, optionally parallel over jobs.
std::vector<std::int32_t> walsh(const TruthTable& f, int jobs = 1);

// Direct-definition spectrum, O(4^n); reference for the fast transform.
std::vector<std::int32_t> walsh_naive(const TruthTable& f);

// All spectrum magnitudes equal (necessarily 2^(n/2)); n must be even.
bool is_bent(const TruthTable& f, int jobs = 1);

// g(x, y) = Tr(a0 xy + a1 x + a2 y + a3) on 2k variables, a0 != 0.
// Index layout: x in the low k bits, y in the high k bits.
TruthTable make_trace_bilinear(const FieldCtx& ctx, std::uint32_t a0, std::uint32_t a1,
                               std::uint32_t a2, std::uint32_t a3);

// f(x, y, z) = Tr(xyz) on 3k variables; x low bits, z high bits.
TruthTable make_trace_triple(const FieldCtx& ctx);

}  // namespace lbp
