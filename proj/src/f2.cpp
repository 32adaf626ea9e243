#include "lbp/f2.hpp"

#include <algorithm>
#include <stdexcept>

#include "lbp/rational.hpp"

namespace lbp {

std::string to_hex(Word bits, int nbits) {
    int digits = (nbits + 3) / 4;
    std::string out(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (int i = 0; i < digits; ++i)
        out[digits - 1 - i] = kHex[(bits >> (4 * i)) & 0xf];
    return out;
}

Word from_hex(const std::string& s, int nbits) {
    if (s.empty()) throw std::invalid_argument("empty hex string");
    Word v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("bad hex digit in \"" + s + "\"");
        if (v >> 28) throw std::invalid_argument("hex value too wide: " + s);
        v = (v << 4) | static_cast<Word>(d);
    }
    if (v & ~word_mask(nbits))
        throw std::invalid_argument("hex value " + s + " has bits above position " + std::to_string(nbits - 1));
    return v;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s), 1);
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

bool Subspace::insert(Word v) {
    v = reduce(v);
    if (v == 0) return false;
    Word pivot = v & (~v + 1);
    for (Word& row : basis)
        if (row & pivot) row ^= v;
    auto pos = std::lower_bound(basis.begin(), basis.end(), v, [](Word a, Word b) {
        return (a & (~a + 1)) < (b & (~b + 1));
    });
    basis.insert(pos, v);
    return true;
}

Subspace rref(int n, const std::vector<Word>& rows) {
    Subspace s(n);
    for (Word r : rows) {
        if (r & ~word_mask(n)) throw std::invalid_argument("rref: row exceeds dimension");
        s.insert(r);
    }
    return s;
}

Subspace rref_vectors(const std::vector<BitVec>& rows) {
    if (rows.empty()) throw std::invalid_argument("rref_vectors: empty input has no dimension");
    Subspace s(rows.front().n);
    for (const auto& r : rows) {
        if (r.n != s.n) throw std::invalid_argument("rref: mixed dimensions");
        s.insert(r.bits);
    }
    return s;
}

Subspace rref_forms(const std::vector<LinearForm>& rows) {
    if (rows.empty()) throw std::invalid_argument("rref_forms: empty input has no dimension");
    Subspace s(rows.front().n);
    for (const auto& r : rows) {
        if (r.n != s.n) throw std::invalid_argument("rref: mixed dimensions");
        s.insert(r.coeffs);
    }
    return s;
}

Subspace sum(const Subspace& v, const Subspace& w) {
    if (v.n != w.n) throw std::invalid_argument("sum: dimension mismatch");
    Subspace s = v;
    for (Word row : w.basis) s.insert(row);
    return s;
}

Subspace annihilator(const Subspace& v) {
    // Nullspace of the matrix whose rows are the basis. The basis is
    // already in RREF, so back-substitution over the free columns gives
    // one annihilating word per non-pivot column.
    Subspace out(v.n);
    Word pivots = 0;
    for (Word row : v.basis) pivots |= row & (~row + 1);
    for (int j = 0; j < v.n; ++j) {
        if ((pivots >> j) & 1) continue;
        Word w = Word{1} << j;
        for (Word row : v.basis) {
            if ((row >> j) & 1) w |= row & (~row + 1);
        }
        out.insert(w);
    }
    return out;
}

Subspace intersect(const Subspace& v, const Subspace& w) {
    if (v.n != w.n) throw std::invalid_argument("intersect: dimension mismatch");
    // (V cap W)^perp = V^perp + W^perp.
    return annihilator(sum(annihilator(v), annihilator(w)));
}

namespace {

struct Elimination {
    std::vector<Word> lhs;  // RREF rows of the coefficient matrix
    std::vector<bool> rhs;  // matching right-hand sides
    bool inconsistent = false;

    void add(Word q, bool a) {
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            Word pivot = lhs[i] & (~lhs[i] + 1);
            if (q & pivot) {
                q ^= lhs[i];
                a = a ^ rhs[i];
            }
        }
        if (q == 0) {
            if (a) inconsistent = true;
            return;
        }
        Word pivot = q & (~q + 1);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            if (lhs[i] & pivot) {
                lhs[i] ^= q;
                rhs[i] = rhs[i] ^ a;
            }
        }
        std::size_t pos = 0;
        while (pos < lhs.size() && (lhs[pos] & (~lhs[pos] + 1)) < pivot) ++pos;
        lhs.insert(lhs.begin() + pos, q);
        rhs.insert(rhs.begin() + pos, a);
    }

    // Particular solution with free coordinates zero. Row i pins its pivot
    // coordinate: x_pivot = rhs_i + (other coefficients) . x, and all
    // non-pivot coordinates of x are zero.
    Word particular() const {
        Word x = 0;
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (rhs[i]) x |= lhs[i] & (~lhs[i] + 1);
        return x;
    }
};

}  // namespace

std::optional<AffineSubspace> solve(const LinearSystem& sys) {
    Elimination el;
    for (const auto& [q, a] : sys.rows) el.add(q.coeffs, a);
    if (el.inconsistent) return std::nullopt;
    Subspace forms(sys.n);
    forms.basis = el.lhs;
    return AffineSubspace(annihilator(forms), el.particular());
}

BitVec canonical_shift(const LinearSystem& sys, const Subspace& post) {
    if (sys.n != post.n) throw std::invalid_argument("canonical_shift: dimension mismatch");
    Subspace sys_span(sys.n);
    for (const auto& [q, a] : sys.rows) sys_span.insert(q.coeffs);
    if (intersect(sys_span, post).dim() != 0)
        throw std::invalid_argument("canonical_shift: system forms not independent from post space");

    Elimination el;
    for (Word q : post.basis) el.add(q, false);
    for (const auto& [q, a] : sys.rows) el.add(q.coeffs, a);
    if (el.inconsistent) throw std::invalid_argument("canonical_shift: inconsistent system");
    return BitVec(sys.n, el.particular());
}

std::uint64_t gaussian_binomial(int n, int d) {
    if (d < 0 || d > n) return 0;
    // G(n,d) = G(n-1,d-1) + 2^d G(n-1,d), saturating at uint64 max.
    std::vector<std::uint64_t> g(static_cast<std::size_t>(d) + 1, 0);
    g[0] = 1;
    const std::uint64_t inf = ~std::uint64_t{0};
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, d); j >= 1; --j) {
            unsigned __int128 v = g[j - 1];
            if (j < 64) v += (static_cast<unsigned __int128>(g[j]) << j);
            else v = inf;
            g[j] = v > inf ? inf : static_cast<std::uint64_t>(v);
        }
    }
    return g[d];
}

}  // namespace lbp
