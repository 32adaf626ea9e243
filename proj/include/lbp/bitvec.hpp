#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbp {

// Dimensions are capped so that a point, a linear form and a whole truth
// table all fit in machine words (2^24-bit tables at the top end).
inline constexpr int kMaxVars = 24;

using Word = std::uint32_t;

inline Word word_mask(int n) { return n >= 32 ? ~Word{0} : ((Word{1} << n) - 1); }

inline void check_dim(int n) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("dimension out of range [1,24]");
}

// Hex serialization used by every bitmask-valued quantity: lowercase,
// zero-padded to ceil(bits/4) digits, bit i of the value = coordinate i.
std::string to_hex(Word bits, int nbits);
Word from_hex(const std::string& s, int nbits);

// A point of {0,1}^n. Bit i holds the value of variable x_{i+1}.
struct BitVec {
    int n = 0;
    Word bits = 0;

    BitVec() = default;
    BitVec(int n_, Word bits_) : n(n_), bits(bits_) {
        check_dim(n);
        if (bits & ~word_mask(n)) throw std::invalid_argument("BitVec: bits above dimension");
    }

    bool get(int i) const { return (bits >> i) & 1; }
    int weight() const { return std::popcount(bits); }
    std::vector<int> support() const {
        std::vector<int> s;
        for (Word b = bits; b; b &= b - 1) s.push_back(std::countr_zero(b));
        return s;
    }

    friend BitVec operator^(const BitVec& a, const BitVec& b) {
        if (a.n != b.n) throw std::invalid_argument("BitVec xor: dimension mismatch");
        return BitVec(a.n, a.bits ^ b.bits);
    }
    friend bool operator==(const BitVec& a, const BitVec& b) = default;

    std::string hex() const { return to_hex(bits, n); }
    static BitVec parse(const std::string& s, int n) { return BitVec(n, from_hex(s, n)); }
};

// A linear form on F2^n. Bit i of coeffs = coefficient of x_{i+1};
// evaluation is the parity of the coefficient-wise AND with the point.
struct LinearForm {
    int n = 0;
    Word coeffs = 0;

    LinearForm() = default;
    LinearForm(int n_, Word coeffs_) : n(n_), coeffs(coeffs_) {
        check_dim(n);
        if (coeffs & ~word_mask(n)) throw std::invalid_argument("LinearForm: coeffs above dimension");
    }

    bool is_zero() const { return coeffs == 0; }
    bool eval(const BitVec& x) const {
        if (x.n != n) throw std::invalid_argument("LinearForm eval: dimension mismatch");
        return std::popcount(coeffs & x.bits) & 1;
    }
    bool eval_bits(Word x) const { return std::popcount(coeffs & x) & 1; }

    friend LinearForm operator^(const LinearForm& a, const LinearForm& b) {
        if (a.n != b.n) throw std::invalid_argument("LinearForm xor: dimension mismatch");
        return LinearForm(a.n, a.coeffs ^ b.coeffs);
    }
    friend bool operator==(const LinearForm& a, const LinearForm& b) = default;
    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        return a.n != b.n ? a.n < b.n : a.coeffs < b.coeffs;
    }

    std::string hex() const { return to_hex(coeffs, n); }
    static LinearForm parse(const std::string& s, int n) { return LinearForm(n, from_hex(s, n)); }
};

}  // namespace lbp
