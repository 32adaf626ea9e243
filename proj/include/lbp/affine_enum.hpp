#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbp/f2.hpp"

namespace lbp {

// Enumerates every affine subspace of F2^n of dimension exactly d, each
// one once, as (canonical RREF basis, normalized shift). The enumeration
// is indexable: decode(g) is O(d) for any g < total(), so disjoint
// (start, stride) partitions can be scanned independently and in parallel
// with a deterministic global order.
//
// Order: pivot sets of the basis in lexicographic order, then the free
// entries of the RREF rows, then the 2^(n-d) shifts (innermost).
class AffineEnumerator {
public:
    AffineEnumerator(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    std::uint64_t total() const { return total_; }
    std::uint64_t subspace_count() const { return cumulative_.back(); }

    AffineSubspace decode(std::uint64_t g) const;

    // Sequential view over one partition: yields decode(start), then
    // decode(start + stride), ... Deterministic within the partition.
    class Stream {
    public:
        Stream(const AffineEnumerator& e, std::uint64_t start, std::uint64_t stride)
            : enumr_(e), next_(start), stride_(stride) {}
        std::optional<AffineSubspace> next() {
            if (next_ >= enumr_.total()) return std::nullopt;
            auto s = enumr_.decode(next_);
            next_ += stride_;
            return s;
        }

    private:
        const AffineEnumerator& enumr_;
        std::uint64_t next_;
        std::uint64_t stride_;
    };

    Stream stream(std::uint64_t start = 0, std::uint64_t stride = 1) const {
        if (stride == 0) throw std::invalid_argument("stream: zero stride");
        return Stream(*this, start, stride);
    }

private:
    int n_;
    int d_;
    std::uint64_t total_;
    std::vector<Word> pivot_masks_;           // one per pivot set, lexicographic
    std::vector<std::uint64_t> cumulative_;   // cumulative subspace counts; size = sets + 1
};

}  // namespace lbp
