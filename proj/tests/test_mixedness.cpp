#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lbp/errors.hpp"
#include "lbp/gf2k.hpp"
#include "lbp/mixedness.hpp"
#include "testutil.hpp"

using namespace lbp;
using namespace testutil;

namespace {

TruthTable parity(int n) {
    TruthTable t(n);
    for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, std::popcount(x) & 1);
    return t;
}

TruthTable from_word(int n, std::uint64_t word) {
    TruthTable t(n);
    t.words[0] = word;
    return t;
}

}  // namespace

TEST_CASE("projection function x1 is not 1-mixed") {
    TruthTable f = TruthTable::from_form(lf("10"));
    auto rep = is_d_mixed(f, 1);
    CHECK(!rep.mixed);
    REQUIRE(rep.collapse.has_value());
    // the collapsing domain is {x2}: both restrictions equal x1
    CHECK(rep.collapse->domain == bits_of("01"));

    // but x1 is 2-mixed on two variables (only the empty domain qualifies)
    CHECK(is_d_mixed(f, 2).mixed);
}

TEST_CASE("parity is d-mixed only for d >= n-1") {
    for (int n = 2; n <= 4; ++n) {
        TruthTable p = parity(n);
        for (int d = 0; d <= n; ++d) {
            bool expect = d >= n - 1;  // two flips inside the domain collapse
            CHECK(is_d_mixed(p, d).mixed == expect);
            CHECK(is_d_mixed_alt(p, d).mixed == expect);
        }
    }
}

TEST_CASE("the two mixedness definitions agree everywhere (n = 3)") {
    for (std::uint32_t word = 0; word < 256; ++word) {
        TruthTable f = from_word(3, word);
        for (int d = 1; d <= 2; ++d)
            CHECK(is_d_mixed(f, d).mixed == is_d_mixed_alt(f, d).mixed);
    }
}

TEST_CASE("the two mixedness definitions agree on random larger tables") {
    Rng rng(67);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 4 + static_cast<int>(rng.below(2));
        TruthTable f = random_table(rng, n);
        int d = 1 + static_cast<int>(rng.below(n));
        CHECK(is_d_mixed(f, d).mixed == is_d_mixed_alt(f, d).mixed);
    }
}

TEST_CASE("constant functions are never affine mixed") {
    TruthTable c(3);
    for (int d = 0; d <= 3; ++d) CHECK(!is_d_affine_mixed(c, d).mixed);
}

TEST_CASE("affine mixedness implies mixedness (n = 3, all functions)") {
    for (std::uint32_t word = 0; word < 256; ++word) {
        TruthTable f = from_word(3, word);
        for (int d = 1; d <= 3; ++d) {
            if (is_d_affine_mixed(f, d).mixed) CHECK(is_d_mixed(f, d).mixed);
        }
    }
}

TEST_CASE("triple product tables are affine mixed at the disperser dimension") {
    CHECK(is_d_affine_mixed(make_trace_triple(FieldCtx(1)), 3).mixed);
    CHECK(is_d_affine_mixed(make_trace_triple(FieldCtx(2)), 5).mixed);
}

TEST_CASE("witnesses reproduce the failure") {
    Rng rng(71);
    int found = 0;
    for (int iter = 0; iter < 200 && found < 50; ++iter) {
        int n = 3 + static_cast<int>(rng.below(2));
        TruthTable f = random_table(rng, n);
        int d = 1 + static_cast<int>(rng.below(n - 1));
        auto rep = is_d_mixed_alt(f, d);
        if (rep.mixed) continue;
        ++found;
        REQUIRE(rep.translate.has_value());
        const auto& w = *rep.translate;
        CHECK(w.c != 0);
        CHECK((w.c & ~w.domain) == 0);
        // no point consistent with sigma flips f along c
        for (Word x = 0; x < (Word{1} << n); ++x) {
            if ((x & w.domain) != w.sigma) continue;
            CHECK(f.get(x) == f.get(x ^ w.c));
        }
    }
    CHECK(found > 0);
}

TEST_CASE("budget caps raise the budget error") {
    TruthTable big(13);
    CHECK_THROWS_AS(is_d_mixed(big, 1), BudgetError);
    TruthTable mid(11);
    CHECK_THROWS_AS(is_d_affine_mixed(mid, 1), BudgetError);
    TruthTable ok(6);
    CHECK_THROWS_AS(is_d_mixed(ok, 1, /*budget=*/10), BudgetError);
}
