#include "lbp/truth_table.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace lbp {

std::uint64_t TruthTable::ones() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words) c += std::popcount(w);
    return c;
}

std::string TruthTable::hex() const {
    const std::uint64_t bits = size();
    const std::uint64_t digits = (bits + 3) / 4;
    std::string out(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (std::uint64_t i = 0; i < digits; ++i) {
        unsigned nib = (words[i / 16] >> (4 * (i % 16))) & 0xf;
        out[digits - 1 - i] = kHex[nib];
    }
    return out;
}

TruthTable TruthTable::parse(const std::string& hex, int n) {
    TruthTable t(n);
    const std::uint64_t bits = t.size();
    const std::uint64_t digits = (bits + 3) / 4;
    if (hex.size() != digits)
        throw std::invalid_argument("truth table hex: expected " + std::to_string(digits) +
                                    " digits for n=" + std::to_string(n) + ", got " +
                                    std::to_string(hex.size()));
    for (std::uint64_t i = 0; i < digits; ++i) {
        char c = hex[digits - 1 - i];
        unsigned d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("bad hex digit in truth table");
        t.words[i / 16] |= static_cast<std::uint64_t>(d) << (4 * (i % 16));
    }
    if (bits < 4 && (t.words[0] >> bits))
        throw std::invalid_argument("truth table hex has bits beyond 2^n");
    return t;
}

TruthTable TruthTable::from_form(const LinearForm& f) {
    TruthTable t(f.n);
    for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, f.eval_bits(x));
    return t;
}

Rational bias(const TruthTable& f) {
    std::int64_t total = static_cast<std::int64_t>(f.size());
    std::int64_t diff = total - 2 * static_cast<std::int64_t>(f.ones());
    return Rational(diff < 0 ? -diff : diff, total);
}

Rational restrict_bias(const TruthTable& f, const AffineSubspace& s) {
    if (s.empty) throw std::invalid_argument("restrict_bias: empty affine subspace");
    if (s.n() != f.n) throw std::invalid_argument("restrict_bias: dimension mismatch");
    std::int64_t ones = 0;
    for_each_point(s, [&](Word x) { ones += f.get(x); });
    std::int64_t total = std::int64_t{1} << s.dim();
    std::int64_t diff = total - 2 * ones;
    return Rational(diff < 0 ? -diff : diff, total);
}

TruthTable directional_derivative(const TruthTable& f, const BitVec& a) {
    if (a.n != f.n) throw std::invalid_argument("directional_derivative: dimension mismatch");
    if (a.bits == 0) throw std::invalid_argument("directional_derivative: zero direction");
    TruthTable g(f.n);
    for (std::uint32_t x = 0; x < f.size(); ++x) g.set(x, f.get(x) ^ f.get(x ^ a.bits));
    return g;
}

Rational distance(const TruthTable& f, const TruthTable& g) {
    if (f.n != g.n) throw std::invalid_argument("distance: size mismatch");
    std::uint64_t diff = 0;
    for (std::size_t i = 0; i < f.words.size(); ++i)
        diff += std::popcount(f.words[i] ^ g.words[i]);
    return Rational(static_cast<std::int64_t>(diff), static_cast<std::int64_t>(f.size()));
}

std::vector<std::int32_t> walsh(const TruthTable& f, int jobs) {
    const std::uint32_t size = static_cast<std::uint32_t>(f.size());
    std::vector<std::int32_t> w(size);
    for (std::uint32_t x = 0; x < size; ++x) w[x] = f.get(x) ? -1 : 1;
    for (std::uint32_t half = 1; half < size; half <<= 1) {
        const std::uint32_t block = half << 1;
#pragma omp parallel for num_threads(jobs) schedule(static) if (jobs > 1 && size >= (1u << 12))
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(size / block); ++b) {
            std::uint32_t base = static_cast<std::uint32_t>(b) * block;
            for (std::uint32_t i = base; i < base + half; ++i) {
                std::int32_t lo = w[i], hi = w[i + half];
                w[i] = lo + hi;
                w[i + half] = lo - hi;
            }
        }
    }
    return w;
}

std::vector<std::int32_t> walsh_naive(const TruthTable& f) {
    if (f.n > 13) throw std::invalid_argument("walsh_naive: n too large for the quadratic method");
    const std::uint32_t size = static_cast<std::uint32_t>(f.size());
    std::vector<std::int32_t> w(size);
    for (std::uint32_t a = 0; a < size; ++a) {
        std::int32_t acc = 0;
        for (std::uint32_t x = 0; x < size; ++x) {
            bool e = f.get(x) ^ (std::popcount(a & x) & 1);
            acc += e ? -1 : 1;
        }
        w[a] = acc;
    }
    return w;
}

bool is_bent(const TruthTable& f, int jobs) {
    if (f.n % 2 != 0) throw std::invalid_argument("is_bent: odd number of variables");
    auto w = walsh(f, jobs);
    const std::int32_t target = std::int32_t{1} << (f.n / 2);
    for (std::int32_t c : w)
        if (c != target && c != -target) return false;
    return true;
}

TruthTable make_trace_bilinear(const FieldCtx& ctx, std::uint32_t a0, std::uint32_t a1,
                               std::uint32_t a2, std::uint32_t a3) {
    if (a0 == 0) throw std::invalid_argument("make_trace_bilinear: a0 must be nonzero");
    const int k = ctx.k();
    if (2 * k > kMaxVars) throw std::invalid_argument("make_trace_bilinear: 2k exceeds max variables");
    TruthTable t(2 * k);
    const std::uint32_t km = word_mask(k);
    for (std::uint32_t idx = 0; idx < t.size(); ++idx) {
        std::uint32_t x = idx & km, y = (idx >> k) & km;
        std::uint32_t v = ctx.add(ctx.add(ctx.mul(a0, ctx.mul(x, y)), ctx.mul(a1, x)),
                                  ctx.add(ctx.mul(a2, y), a3));
        t.set(idx, ctx.trace(v));
    }
    return t;
}

TruthTable make_trace_triple(const FieldCtx& ctx) {
    const int k = ctx.k();
    if (3 * k > kMaxVars) throw std::invalid_argument("make_trace_triple: 3k exceeds max variables");
    TruthTable t(3 * k);
    const std::uint32_t km = word_mask(k);
    for (std::uint32_t idx = 0; idx < t.size(); ++idx) {
        std::uint32_t x = idx & km, y = (idx >> k) & km, z = (idx >> (2 * k)) & km;
        t.set(idx, ctx.trace(ctx.mul(ctx.mul(x, y), z)));
    }
    return t;
}

}  // namespace lbp
