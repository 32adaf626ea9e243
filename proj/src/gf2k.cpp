#include "lbp/gf2k.hpp"

#include <bit>
#include <stdexcept>

namespace lbp {

namespace {

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

// Remainder of polynomial division over F2.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    int dm = poly_degree(m);
    while (a && poly_degree(a) >= dm) a ^= m << (poly_degree(a) - dm);
    return a;
}

}  // namespace

bool FieldCtx::is_irreducible(std::uint32_t poly, int degree) {
    if (degree < 1 || poly_degree(poly) != degree) return false;
    // A reducible polynomial of degree k has a factor of degree <= k/2.
    for (std::uint32_t d = 2; poly_degree(d) <= degree / 2; ++d)
        if (poly_mod(poly, d) == 0) return false;
    return true;
}

std::uint32_t FieldCtx::least_irreducible(int k) {
    for (std::uint32_t m = std::uint32_t{1} << k; m < (std::uint32_t{2} << k); ++m)
        if (is_irreducible(m, k)) return m;
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldCtx::FieldCtx(int k) : FieldCtx(k, least_irreducible(k)) {}

FieldCtx::FieldCtx(int k, std::uint32_t modulus) : k_(k), modulus_(modulus) {
    check_dim(k);
    if (!is_irreducible(modulus, k))
        throw std::invalid_argument("FieldCtx: modulus is not an irreducible polynomial of degree k");
    mask_ = word_mask(k);
}

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
    if ((a & ~mask_) || (b & ~mask_)) throw std::invalid_argument("FieldCtx::mul: element out of range");
    // Carry-less multiply then reduce; the product has degree < 2k-1 < 47.
    std::uint64_t prod = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) prod ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return static_cast<std::uint32_t>(poly_mod(prod, modulus_));
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    std::uint32_t base = a & mask_;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
    if ((a & mask_) == 0) throw std::domain_error("FieldCtx::inv: zero has no inverse");
    // a^(2^k - 2); the multiplicative group has order 2^k - 1.
    return pow(a, (std::uint64_t{1} << k_) - 2);
}

bool FieldCtx::trace(std::uint32_t a) const {
    std::uint32_t acc = 0;
    std::uint32_t t = a & mask_;
    for (int i = 0; i < k_; ++i) {
        acc ^= t;
        t = mul(t, t);
    }
    if (acc > 1) throw std::logic_error("trace escaped the prime subfield");
    return acc;
}

LinearForm FieldCtx::form_from_mu(std::uint32_t mu) const {
    Word coeffs = 0;
    for (int i = 0; i < k_; ++i)
        if (trace(mul(mu, std::uint32_t{1} << i))) coeffs |= Word{1} << i;
    return LinearForm(k_, coeffs);
}

std::uint32_t FieldCtx::mu_from_form(const LinearForm& f) const {
    if (f.n != k_) throw std::invalid_argument("mu_from_form: form dimension != k");
    // Invert the linear bijection mu -> coefficient vector. Column i of the
    // k x k matrix over F2 is form_from_mu(e_i); solve M mu = coeffs.
    std::vector<Word> cols(k_);
    for (int i = 0; i < k_; ++i) cols[i] = form_from_mu(std::uint32_t{1} << i).coeffs;

    // Gaussian elimination on rows of [M | rhs] where row j holds the j-th
    // bit of every column.
    std::vector<std::uint64_t> rows(k_);
    for (int j = 0; j < k_; ++j) {
        std::uint64_t r = 0;
        for (int i = 0; i < k_; ++i)
            if ((cols[i] >> j) & 1) r |= std::uint64_t{1} << i;
        r |= static_cast<std::uint64_t>((f.coeffs >> j) & 1) << k_;
        rows[j] = r;
    }
    std::uint32_t mu = 0;
    for (int col = 0; col < k_; ++col) {
        int pivot = -1;
        for (int j = col; j < k_; ++j)
            if ((rows[j] >> col) & 1) { pivot = j; break; }
        if (pivot < 0) throw std::logic_error("mu_from_form: singular trace matrix");
        std::swap(rows[col], rows[pivot]);
        for (int j = 0; j < k_; ++j)
            if (j != col && ((rows[j] >> col) & 1)) rows[j] ^= rows[col];
    }
    for (int j = 0; j < k_; ++j)
        if ((rows[j] >> k_) & 1) mu |= std::uint32_t{1} << j;
    return mu;
}

}  // namespace lbp
