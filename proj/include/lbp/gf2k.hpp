#pragma once

#include <cstdint>
#include <string>

#include "lbp/bitvec.hpp"

namespace lbp {

// GF(2^k) in the polynomial basis, 1 <= k <= 24. Elements are k-bit words
// of coefficients; the identification of bit patterns in {0,1}^k with
// field elements is exactly this coordinate map, fixed once and for all.
// The modulus is the lexicographically least irreducible polynomial of
// degree k (bit i = coefficient of x^i), re-verified by trial division at
// construction.
class FieldCtx {
public:
    explicit FieldCtx(int k);
    FieldCtx(int k, std::uint32_t modulus);  // custom modulus, must be irreducible

    int k() const { return k_; }
    std::uint32_t modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Tr(a) = sum of the k Frobenius conjugates a^(2^i); always 0 or 1.
    bool trace(std::uint32_t a) const;

    // The linear form x -> Tr(mu * x) in coordinates: coefficient of x_{i+1}
    // is Tr(mu * e_i). mu -> form is a bijection onto all 2^k forms.
    LinearForm form_from_mu(std::uint32_t mu) const;
    std::uint32_t mu_from_form(const LinearForm& f) const;

    static std::uint32_t least_irreducible(int k);
    static bool is_irreducible(std::uint32_t poly, int degree);

private:
    int k_;
    std::uint32_t modulus_;
    std::uint32_t mask_;
};

}  // namespace lbp
