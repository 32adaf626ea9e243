#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lbp/extractor.hpp"
#include "lbp/gf2k.hpp"
#include "lbp/rng.hpp"
#include "lbp/truth_table.hpp"
#include "testutil.hpp"

using namespace lbp;
using namespace testutil;

namespace {

TruthTable table_of(int n, std::initializer_list<int> ones) {
    TruthTable t(n);
    for (int x : ones) t.set(static_cast<std::uint32_t>(x), true);
    return t;
}

TruthTable and2() { return table_of(2, {3}); }

}  // namespace

TEST_CASE("table hex round trip") {
    TruthTable t = table_of(3, {7});
    CHECK(t.hex() == "80");
    CHECK(TruthTable::parse("80", 3) == t);
    CHECK_THROWS(TruthTable::parse("8", 3));  // wrong width

    Rng rng(3);
    for (int n : {1, 2, 5, 6, 7, 10}) {
        TruthTable r = random_table(rng, n);
        CHECK(TruthTable::parse(r.hex(), n) == r);
    }
}

TEST_CASE("bias examples") {
    TruthTable zero(2);
    CHECK(bias(zero) == Rational(1, 1));
    CHECK(bias(TruthTable::from_form(lf("10"))) == Rational(0, 1));
    CHECK(bias(and2()) == Rational(1, 2));  // |3 - 1| / 4
}

TEST_CASE("restricted bias") {
    TruthTable f = TruthTable::from_form(lf("10"));
    {
        // whole space = plain bias
        LinearSystem sys(2);
        auto s = solve(sys);
        CHECK(restrict_bias(f, *s) == bias(f));
    }
    {
        LinearSystem sys(2);
        sys.add(lf("10"), false);  // f constant on {x1 = 0}
        CHECK(restrict_bias(f, *solve(sys)) == Rational(1, 1));
    }
    {
        TruthTable g = TruthTable::from_form(lf("110"));
        LinearSystem sys(3);
        sys.add(lf("001"), true);
        CHECK(restrict_bias(g, *solve(sys)) == Rational(0, 1));
    }
    CHECK_THROWS(restrict_bias(f, AffineSubspace::empty_set(2)));
}

TEST_CASE("directional derivative") {
    // of a linear form: constant l(a)
    TruthTable f = TruthTable::from_form(lf("110"));
    TruthTable d = directional_derivative(f, bv("100"));
    CHECK(bias(d) == Rational(1, 1));
    CHECK(d.get(0) == 1);

    // of AND along direction 11: x1 + x2 + 1, checked point by point
    TruthTable da = directional_derivative(and2(), bv("11"));
    for (std::uint32_t x = 0; x < 4; ++x)
        CHECK(da.get(x) == (and2().get(x) ^ and2().get(x ^ 3)));
    CHECK(da == table_of(2, {0, 3}));

    // AND3 along e3 restricts to AND of the first two
    TruthTable and3 = table_of(3, {7});
    TruthTable d3 = directional_derivative(and3, bv("001"));
    for (std::uint32_t x = 0; x < 8; ++x) CHECK(d3.get(x) == ((x & 3) == 3));

    CHECK_THROWS(directional_derivative(and3, BitVec(3, 0)));

    // symmetry under x -> x + a
    Rng rng(5);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 2 + static_cast<int>(rng.below(5));
        TruthTable g = random_table(rng, n);
        Word a = 0;
        while (a == 0) a = rng.bits(n);
        TruthTable dg = directional_derivative(g, BitVec(n, a));
        for (std::uint32_t x = 0; x < g.size(); ++x) CHECK(dg.get(x) == dg.get(x ^ a));
    }
}

TEST_CASE("walsh transform against the quadratic definition") {
    auto wa = walsh(and2());
    auto wn = walsh_naive(and2());
    CHECK(wa == wn);
    for (std::int32_t c : wa) CHECK((c == 2 || c == -2));
    CHECK(is_bent(and2()));

    TruthTable x1 = TruthTable::from_form(lf("10"));
    CHECK(!is_bent(x1));
    auto w1 = walsh(x1);
    CHECK(w1 == walsh_naive(x1));

    Rng rng(9);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 1 + static_cast<int>(rng.below(8));
        TruthTable t = random_table(rng, n);
        auto fast = walsh(t);
        CHECK(fast == walsh_naive(t));
        CHECK(walsh(t, 4) == fast);  // parallel transform agrees
        std::int64_t parseval = 0;
        for (std::int32_t c : fast) parseval += std::int64_t{c} * c;
        CHECK(parseval == (std::int64_t{1} << (2 * n)));
    }

    CHECK_THROWS(is_bent(table_of(3, {})));  // odd n
}

TEST_CASE("distance") {
    TruthTable f = TruthTable::from_form(lf("10"));
    TruthTable g = TruthTable::from_form(lf("01"));
    CHECK(distance(f, f) == Rational(0, 1));
    TruthTable nf = f;
    for (auto& w : nf.words) w = ~w;
    nf.words[0] &= 0xf;
    CHECK(distance(f, nf) == Rational(1, 1));
    CHECK(distance(f, g) == Rational(1, 2));
    CHECK_THROWS(distance(f, table_of(3, {})));
}

TEST_CASE("trace bilinear construction") {
    FieldCtx f2(1);
    CHECK(make_trace_bilinear(f2, 1, 0, 0, 0) == and2());
    TruthTable nand = make_trace_bilinear(f2, 1, 0, 0, 1);
    for (std::uint32_t x = 0; x < 4; ++x) CHECK(nand.get(x) == !and2().get(x));

    FieldCtx f4(2);
    CHECK(is_bent(make_trace_bilinear(f4, 1, 0, 0, 0)));
    CHECK_THROWS(make_trace_bilinear(f4, 0, 1, 1, 1));  // a0 = 0

    // pointwise match with the defining formula
    Rng rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        int k = 1 + static_cast<int>(rng.below(3));
        FieldCtx f(k);
        std::uint32_t a0 = 0;
        while (a0 == 0) a0 = rng.bits(k);
        std::uint32_t a1 = rng.bits(k), a2 = rng.bits(k), a3 = rng.bits(k);
        TruthTable t = make_trace_bilinear(f, a0, a1, a2, a3);
        for (std::uint32_t x = 0; x < (std::uint32_t{1} << k); ++x)
            for (std::uint32_t y = 0; y < (std::uint32_t{1} << k); ++y) {
                std::uint32_t val = f.add(f.add(f.mul(a0, f.mul(x, y)), f.mul(a1, x)),
                                          f.add(f.mul(a2, y), a3));
                CHECK(t.get(x | (y << k)) == f.trace(val));
            }
    }
}

TEST_CASE("trace triple product construction") {
    FieldCtx f2(1);
    TruthTable t1 = make_trace_triple(f2);
    CHECK(t1.hex() == "80");  // AND of three bits

    FieldCtx f4(2);
    TruthTable t2 = make_trace_triple(f4);
    CHECK(t2.n == 6);
    // zero middle coordinate kills the product
    for (std::uint32_t x = 0; x < 4; ++x)
        for (std::uint32_t z = 0; z < 4; ++z) CHECK(t2.get(x | (z << 4)) == 0);

    // derivative expands through the trilinear form: D_a f(x,y,z) equals
    // Tr(a1 yz + a2 xz + a3 xy + a1a2 z + a1a3 y + a2a3 x + a1a2a3)
    Rng rng(37);
    for (int k : {1, 2}) {
        FieldCtx f(k);
        TruthTable t = make_trace_triple(f);
        const std::uint32_t km = (std::uint32_t{1} << k) - 1;
        for (int iter = 0; iter < 20; ++iter) {
            Word a = 0;
            while (a == 0) a = rng.bits(3 * k);
            std::uint32_t a1 = a & km, a2 = (a >> k) & km, a3 = (a >> (2 * k)) & km;
            TruthTable da = directional_derivative(t, BitVec(3 * k, a));
            for (std::uint32_t idx = 0; idx < t.size(); ++idx) {
                std::uint32_t x = idx & km, y = (idx >> k) & km, z = (idx >> (2 * k)) & km;
                std::uint32_t expect = f.add(
                    f.add(f.mul(a1, f.mul(y, z)), f.mul(a2, f.mul(x, z))),
                    f.add(f.mul(a3, f.mul(x, y)),
                          f.add(f.add(f.mul(f.mul(a1, a2), z), f.mul(f.mul(a1, a3), y)),
                                f.add(f.mul(f.mul(a2, a3), x), f.mul(f.mul(a1, a2), a3)))));
                CHECK(da.get(idx) == f.trace(expect));
            }
        }
    }
}

TEST_CASE("coset correlation identity") {
    // |sum over x in V of (-1)^{f(x+ai)} (-1)^{f(x+aj)}| equals
    // bias(D_{ai+aj} f restricted to V + aj) * |V|.
    Rng rng(41);
    for (int iter = 0; iter < 100; ++iter) {
        int n = 2 + static_cast<int>(rng.below(7));
        TruthTable f = random_table(rng, n);
        int d = static_cast<int>(rng.below(n + 1));
        AffineSubspace sampled = sample_affine(rng, n, d);
        Subspace v = sampled.space;
        Word ai = rng.bits(n), aj = rng.bits(n);
        if (ai == aj) continue;

        std::int64_t corr = 0;
        AffineSubspace v0(v, 0);
        for_each_point(v0, [&](Word x) {
            corr += (f.get(x ^ ai) == f.get(x ^ aj)) ? 1 : -1;
        });
        TruthTable dfa = directional_derivative(f, BitVec(n, ai ^ aj));
        Rational rb = restrict_bias(dfa, AffineSubspace(v, aj));
        std::int64_t expect = rb.num * ((std::int64_t{1} << d) / rb.den);
        CHECK((corr < 0 ? -corr : corr) == expect);
    }
}
