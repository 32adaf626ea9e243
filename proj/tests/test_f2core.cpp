#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lbp/affine_enum.hpp"
#include "lbp/f2.hpp"
#include "lbp/rng.hpp"
#include "testutil.hpp"

using namespace lbp;
using namespace testutil;

TEST_CASE("hex serialization") {
    CHECK(to_hex(bits_of("100001"), 6) == "21");  // x1+x6 on n=6
    CHECK(from_hex("21", 6) == bits_of("100001"));
    CHECK(to_hex(0, 3) == "0");
    CHECK_THROWS(from_hex("8", 3));   // bit above n-1
    CHECK_THROWS(from_hex("zz", 8));
    CHECK(LinearForm::parse("21", 6).hex() == "21");
}

TEST_CASE("rref examples") {
    CHECK(rref(3, {}).dim() == 0);

    auto s = rref_vectors({bv("110"), bv("011"), bv("101")});
    CHECK(s.dim() == 2);  // third row is the sum of the first two
    CHECK(s.contains(bv("101").bits));

    Subspace full = rref(4, {1, 2, 4, 8});
    CHECK(full.dim() == 4);

    CHECK_THROWS(rref_vectors({bv("10"), bv("100")}));  // mixed dimensions
}

TEST_CASE("rref is canonical and idempotent") {
    Rng rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng.below(8));
        std::vector<Word> rows;
        for (int i = 0, e = 1 + rng.below(6); i < e; ++i) rows.push_back(rng.bits(n));
        Subspace s = rref(n, rows);
        CHECK(rref(n, s.basis) == s);
        // every input row is in the span
        for (Word r : rows) CHECK(s.contains(r));
        // basis rows are pivot-sorted with pivots cleared elsewhere
        for (std::size_t i = 1; i < s.basis.size(); ++i) {
            Word p0 = s.basis[i - 1] & (~s.basis[i - 1] + 1);
            Word p1 = s.basis[i] & (~s.basis[i] + 1);
            CHECK(p0 < p1);
        }
    }
}

TEST_CASE("annihilator examples") {
    Subspace zero(3);
    CHECK(annihilator(zero).dim() == 3);

    Subspace full = rref(3, {1, 2, 4});
    CHECK(annihilator(full).dim() == 0);

    auto v = rref_vectors({bv("110")});
    auto a = annihilator(v);
    CHECK(a == rref(3, {bits_of("110"), bits_of("001")}));
}

TEST_CASE("annihilator is an involution") {
    // exhaustive over every subspace of F2^n for n <= 4
    for (int n = 1; n <= 4; ++n) {
        for (Word seed_rows = 0; seed_rows < (Word{1} << (2 * n)); ++seed_rows) {
            std::vector<Word> rows{static_cast<Word>(seed_rows & word_mask(n)),
                                   static_cast<Word>((seed_rows >> n) & word_mask(n))};
            Subspace v = rref(n, rows);
            Subspace vv = annihilator(annihilator(v));
            CHECK(vv == v);
            CHECK(v.dim() + annihilator(v).dim() == n);
        }
    }
    // randomized at full width
    Rng rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        int n = kMaxVars;
        std::vector<Word> rows;
        for (int i = 0, e = 1 + rng.below(n); i < e; ++i) rows.push_back(rng.bits(n));
        Subspace v = rref(n, rows);
        CHECK(annihilator(annihilator(v)) == v);
        CHECK(v.dim() + annihilator(v).dim() == n);
        for (Word f : annihilator(v).basis)
            for (Word b : v.basis) CHECK((std::popcount(f & b) & 1) == 0);
    }
}

TEST_CASE("intersection examples and dimension identity") {
    auto v = rref_vectors({bv("100")});
    auto w = rref_vectors({bv("010")});
    CHECK(intersect(v, v) == v);
    CHECK(intersect(v, w).dim() == 0);

    auto a = rref_vectors({bv("110"), bv("001")});
    auto b = rref_vectors({bv("111")});
    CHECK(intersect(a, b) == b);  // 111 = 110 + 001 lies in a

    Rng rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng.below(10));
        std::vector<Word> r1, r2;
        for (int i = 0, e = rng.below(n + 1); i < e; ++i) r1.push_back(rng.bits(n));
        for (int i = 0, e = rng.below(n + 1); i < e; ++i) r2.push_back(rng.bits(n));
        Subspace x = rref(n, r1), y = rref(n, r2);
        CHECK(intersect(x, y).dim() + sum(x, y).dim() == x.dim() + y.dim());
        for (Word row : intersect(x, y).basis) {
            CHECK(x.contains(row));
            CHECK(y.contains(row));
        }
    }
}

TEST_CASE("solve: examples against brute-force enumeration") {
    {
        LinearSystem sys(2);
        sys.add(lf("10"), true);  // x1 = 1
        auto sol = solve(sys);
        REQUIRE(sol.has_value());
        CHECK(points_of(*sol) == brute_solutions(sys));
        CHECK(sol->dim() == 1);
    }
    {
        LinearSystem sys(2);
        sys.add(lf("10"), false);
        sys.add(lf("10"), true);
        CHECK(!solve(sys).has_value());  // 0 = 1
    }
    {
        // {x1+x2=1, x2+x3=1}: brute force gives {101, 010} as vectors,
        // i.e. the affine line through (1,0,1) with direction 111.
        LinearSystem sys(3);
        sys.add(lf("110"), true);
        sys.add(lf("011"), true);
        auto sol = solve(sys);
        REQUIRE(sol.has_value());
        auto expect = brute_solutions(sys);
        CHECK(expect == std::vector<Word>{bits_of("010"), bits_of("101")});
        CHECK(points_of(*sol) == expect);
        CHECK(sol->dim() == 1);
        CHECK(sol->space.contains(bits_of("111")));
    }

    Rng rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 1 + static_cast<int>(rng.below(6));
        LinearSystem sys(n);
        for (int i = 0, e = rng.below(n + 2); i < e; ++i)
            sys.add(LinearForm(n, rng.bits(n)), rng.flip());
        auto sol = solve(sys);
        auto expect = brute_solutions(sys);
        if (!sol) {
            CHECK(expect.empty());
        } else {
            CHECK(points_of(*sol) == expect);
        }
    }
}

TEST_CASE("canonical_shift examples") {
    {
        LinearSystem sys(2);
        sys.add(lf("10"), true);
        BitVec b = canonical_shift(sys, rref_vectors({bv("01")}));
        CHECK(b == bv("10"));
    }
    {
        LinearSystem sys(3);
        BitVec b = canonical_shift(sys, rref(3, {bits_of("010")}));
        CHECK(b.bits == 0);  // zero satisfies every homogeneous constraint
    }
    {
        LinearSystem sys(3);
        sys.add(lf("110"), true);
        Subspace post = rref(3, {bits_of("001")});
        BitVec b = canonical_shift(sys, post);
        CHECK(b == bv("100"));  // free coordinates forced to zero
        CHECK(lf("110").eval(b) == true);
        CHECK(lf("001").eval(b) == false);
    }
    {
        // forms of sys not independent from post -> error
        LinearSystem sys(3);
        sys.add(lf("110"), true);
        CHECK_THROWS(canonical_shift(sys, rref(3, {bits_of("110")})));
    }
    {
        LinearSystem sys(2);
        sys.add(lf("10"), false);
        sys.add(lf("10"), true);
        CHECK_THROWS(canonical_shift(sys, Subspace(2)));
    }
    // property: output satisfies all defining equations
    Rng rng(19);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng.below(8));
        LinearSystem sys(n);
        Subspace sys_span(n);
        for (int i = 0, e = rng.below(3); i < e; ++i) {
            Word q = rng.bits(n);
            if (q == 0) continue;
            sys.add(LinearForm(n, q), rng.flip());
            sys_span.insert(q);
        }
        if (!solve(sys)) continue;
        std::vector<Word> post_rows;
        for (int i = 0, e = rng.below(3); i < e; ++i) post_rows.push_back(rng.bits(n));
        Subspace post = rref(n, post_rows);
        if (intersect(sys_span, post).dim() != 0) continue;
        BitVec b = canonical_shift(sys, post);
        CHECK(sys.satisfied_by(b.bits));
        for (Word q : post.basis) CHECK((std::popcount(q & b.bits) & 1) == 0);
    }
}

TEST_CASE("affine subspace canonical state") {
    auto s = rref_vectors({bv("110")});
    AffineSubspace a(s, bits_of("010"));
    AffineSubspace b(s, bits_of("100"));
    CHECK(a.same_set(b));  // shifts differ by a basis vector
    CHECK(a.normalized_shift() == b.normalized_shift());
    AffineSubspace e = AffineSubspace::empty_set(3);
    CHECK(e.empty);
    CHECK(!e.contains(0));
}

TEST_CASE("gaussian binomial") {
    CHECK(gaussian_binomial(2, 1) == 3);
    CHECK(gaussian_binomial(6, 5) == 63);
    CHECK(gaussian_binomial(4, 2) == 35);
    for (int n = 0; n <= 12; ++n)
        for (int d = 0; d <= n; ++d)
            CHECK(gaussian_binomial(n, d) == gaussian_binomial_product(n, d));
}

TEST_CASE("affine enumeration: counts, uniqueness, exact dimension") {
    CHECK(AffineEnumerator(2, 1).total() == 6);
    CHECK(AffineEnumerator(6, 5).total() == 126);
    CHECK(AffineEnumerator(3, 3).total() == 1);

    for (int n = 1; n <= 6; ++n) {
        for (int d = 0; d <= n; ++d) {
            AffineEnumerator e(n, d);
            CHECK(e.total() == gaussian_binomial_product(n, d) * (std::uint64_t{1} << (n - d)));
            std::set<std::pair<std::vector<Word>, Word>> seen;
            auto st = e.stream();
            while (auto s = st.next()) {
                CHECK(s->dim() == d);
                CHECK(s->contains(s->shift));
                CHECK(s->normalized_shift() == s->shift);
                bool inserted = seen.emplace(s->space.basis, s->shift).second;
                CHECK(inserted);
            }
            CHECK(seen.size() == e.total());
        }
    }
}

TEST_CASE("affine enumeration matches the tuple-built family") {
    for (int n = 2; n <= 4; ++n) {
        for (int d = 1; d <= std::min(n, 3); ++d) {
            auto expect = brute_affine_masks(n, d);
            std::set<std::uint64_t> got;
            AffineEnumerator e(n, d);
            auto st = e.stream();
            while (auto s = st.next()) got.insert(point_mask(*s));
            CHECK(got == expect);
        }
    }
}

TEST_CASE("affine enumeration partitions compose") {
    AffineEnumerator e(5, 2);
    std::set<std::uint64_t> pieces;
    for (std::uint64_t start = 0; start < 4; ++start) {
        auto part = e.stream(start, 4);
        std::uint64_t at = start;
        while (auto s = part.next()) {
            CHECK(s->same_set(e.decode(at)));
            pieces.insert(at);
            at += 4;
        }
    }
    CHECK(pieces.size() == e.total());
}
