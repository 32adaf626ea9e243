#include "lbp/affine_enum.hpp"

#include <algorithm>
#include <stdexcept>

namespace lbp {

AffineEnumerator::AffineEnumerator(int n, int d) : n_(n), d_(d) {
    check_dim(n);
    if (d < 0 || d > n) throw std::invalid_argument("AffineEnumerator: d out of range");

    // Lexicographic combinations of d pivot columns out of n. The free
    // entry count of a pivot set P is sum over pivots p_i of the number of
    // non-pivot columns above p_i.
    std::vector<int> comb(d);
    for (int i = 0; i < d; ++i) comb[i] = i;
    cumulative_.push_back(0);
    bool more = true;
    if (d == 0) {
        pivot_masks_.push_back(0);
        cumulative_.push_back(1);
        more = false;
    }
    while (more) {
        Word mask = 0;
        int free_bits = 0;
        for (int i = 0; i < d; ++i) {
            mask |= Word{1} << comb[i];
            free_bits += (n - 1 - comb[i]) - (d - 1 - i);
        }
        pivot_masks_.push_back(mask);
        if (free_bits >= 64) throw std::overflow_error("AffineEnumerator: count overflow");
        std::uint64_t cnt = std::uint64_t{1} << free_bits;
        if (cumulative_.back() > ~std::uint64_t{0} - cnt)
            throw std::overflow_error("AffineEnumerator: count overflow");
        cumulative_.push_back(cumulative_.back() + cnt);

        int i = d - 1;
        while (i >= 0 && comb[i] == n - d + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }

    std::uint64_t shifts = std::uint64_t{1} << (n - d);
    if (cumulative_.back() > (~std::uint64_t{0}) / shifts)
        throw std::overflow_error("AffineEnumerator: count overflow");
    total_ = cumulative_.back() * shifts;
}

AffineSubspace AffineEnumerator::decode(std::uint64_t g) const {
    if (g >= total_) throw std::out_of_range("AffineEnumerator::decode");
    const int shift_bits = n_ - d_;
    std::uint64_t shift_idx = g & ((std::uint64_t{1} << shift_bits) - 1);
    std::uint64_t sub_idx = g >> shift_bits;

    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), sub_idx);
    std::size_t set_i = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    std::uint64_t rem = sub_idx - cumulative_[set_i];
    Word pmask = pivot_masks_[set_i];

    Subspace space(n_);
    space.basis.reserve(d_);
    for (Word m = pmask; m; m &= m - 1) {
        int p = std::countr_zero(m);
        Word row = Word{1} << p;
        for (int j = p + 1; j < n_; ++j) {
            if ((pmask >> j) & 1) continue;
            if (rem & 1) row |= Word{1} << j;
            rem >>= 1;
        }
        space.basis.push_back(row);
    }

    Word shift = 0;
    for (int j = 0; j < n_; ++j) {
        if ((pmask >> j) & 1) continue;
        if (shift_idx & 1) shift |= Word{1} << j;
        shift_idx >>= 1;
    }
    return AffineSubspace(std::move(space), shift);
}

}  // namespace lbp
