#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lbp/bitvec.hpp"

namespace lbp {

// Subspace of F2^n held as a row-reduced echelon basis: rows sorted by
// pivot (lowest set bit), each pivot column cleared in every other row.
// The basis is canonical, so subspace equality is plain vector equality.
// The same representation serves spaces of points and spaces of forms;
// both are bit-packed words.
struct Subspace {
    int n = 0;
    std::vector<Word> basis;

    Subspace() = default;
    explicit Subspace(int n_) : n(n_) { check_dim(n_); }

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(Word v) const { return reduce(v) == 0; }

    // Reduces v against the basis; result has zeros in all pivot columns.
    Word reduce(Word v) const {
        for (Word row : basis) {
            Word pivot = row & (~row + 1);
            if (v & pivot) v ^= row;
        }
        return v;
    }

    // Inserts v into the basis if independent; returns false if v was
    // already in the span. Keeps the basis row-reduced.
    bool insert(Word v);

    friend bool operator==(const Subspace& a, const Subspace& b) = default;
};

Subspace rref(int n, const std::vector<Word>& rows);
Subspace rref_vectors(const std::vector<BitVec>& rows);
Subspace rref_forms(const std::vector<LinearForm>& rows);

// Span of the union of two subspaces.
Subspace sum(const Subspace& v, const Subspace& w);

// All words whose dot-product parity with every basis row is zero. Applied
// to a space of points it returns the space of vanishing forms and vice
// versa; dim(V) + dim(result) = n.
Subspace annihilator(const Subspace& v);

Subspace intersect(const Subspace& v, const Subspace& w);

// Affine subspace space + shift. The shift is stored as given (callers
// that pick a particular representative keep it); set equality normalizes
// the shift against the pivot columns of the basis. The empty set is a
// tagged state: intersections produce it legitimately.
struct AffineSubspace {
    Subspace space;
    Word shift = 0;
    bool empty = false;

    AffineSubspace() = default;
    AffineSubspace(Subspace s, Word sh) : space(std::move(s)), shift(sh) {}
    static AffineSubspace empty_set(int n) {
        AffineSubspace a;
        a.space = Subspace(n);
        a.empty = true;
        return a;
    }

    int n() const { return space.n; }
    int dim() const { return space.dim(); }
    Word normalized_shift() const { return space.reduce(shift); }
    bool contains(Word x) const { return !empty && space.contains(x ^ shift); }

    // Set equality: same span, shifts in the same coset.
    bool same_set(const AffineSubspace& o) const {
        if (empty != o.empty) return false;
        if (empty) return space.n == o.space.n;
        return space == o.space && normalized_shift() == o.normalized_shift();
    }
};

// Enumerates the 2^dim points of a non-empty affine subspace in Gray-code
// order starting from the stored shift.
template <class F>
void for_each_point(const AffineSubspace& s, F&& f) {
    Word x = s.shift;
    f(x);
    const auto& rows = s.space.basis;
    const std::uint64_t count = std::uint64_t{1} << rows.size();
    for (std::uint64_t m = 1; m < count; ++m) {
        x ^= rows[std::countr_zero(m)];
        f(x);
    }
}

// Conjunction of linear equations q_i(x) = a_i.
struct LinearSystem {
    int n = 0;
    std::vector<std::pair<LinearForm, bool>> rows;

    LinearSystem() = default;
    explicit LinearSystem(int n_) : n(n_) { check_dim(n_); }
    void add(LinearForm q, bool a) {
        if (q.n != n) throw std::invalid_argument("LinearSystem: dimension mismatch");
        rows.emplace_back(q, a);
    }
    bool satisfied_by(Word x) const {
        for (const auto& [q, a] : rows)
            if (q.eval_bits(x) != a) return false;
        return true;
    }
};

// Solution set of a linear system, or nullopt when elimination derives
// 0 = 1. The returned shift is the particular solution with all free
// coordinates set to zero; the supporting space solves the homogeneous
// system.
std::optional<AffineSubspace> solve(const LinearSystem& sys);

// A point b satisfying sys with every form of `post` vanishing at b.
// Deterministic: post constraints are eliminated first and free
// coordinates default to zero. Throws if sys is inconsistent or if the
// forms of sys are not independent from `post`.
BitVec canonical_shift(const LinearSystem& sys, const Subspace& post);

// Number of d-dimensional subspaces of F2^n; saturates at uint64 max.
std::uint64_t gaussian_binomial(int n, int d);

}  // namespace lbp
