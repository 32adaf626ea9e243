#include "lbp/mixedness.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "lbp/affine_enum.hpp"

namespace lbp {

namespace {

// Scatters the low popcount(mask) bits of `packed` onto the set positions
// of `mask`, lowest position first.
Word scatter(Word packed, Word mask) {
    Word out = 0;
    for (Word m = mask; m; m &= m - 1) {
        if (packed & 1) out |= m & (~m + 1);
        packed >>= 1;
    }
    return out;
}

void check_budget(std::uint64_t cost, std::uint64_t budget, const char* what) {
    if (cost > budget)
        throw BudgetError(std::string(what) + " would cost ~" + std::to_string(cost) +
                          " bit-operations, over the configured budget");
}

std::uint64_t mixed_cost(int n, int d) {
    // For each admissible domain: 2^|I| restrictions of 2^(n-|I|) bits each.
    std::uint64_t cost = 0;
    for (Word domain = 0; domain < (Word{1} << n); ++domain)
        if (std::popcount(domain) <= n - d) cost += std::uint64_t{1} << n;
    return cost;
}

}  // namespace

MixedReport is_d_mixed(const TruthTable& f, int d, std::uint64_t budget) {
    const int n = f.n;
    if (n > 12) throw BudgetError("is_d_mixed: exhaustive check capped at n <= 12");
    if (d < 0 || d > n) throw std::invalid_argument("is_d_mixed: d out of range");
    check_budget(mixed_cost(n, d), budget, "is_d_mixed");

    MixedReport rep;
    std::vector<std::pair<std::vector<std::uint64_t>, Word>> tables;  // (restriction, sigma)
    for (Word domain = 0; domain < (Word{1} << n); ++domain) {
        int isz = std::popcount(domain);
        if (isz > n - d) continue;
        const Word comask = word_mask(n) & ~domain;
        const int free_vars = n - isz;
        tables.clear();
        for (Word packed = 0; packed < (Word{1} << isz); ++packed) {
            Word sigma = scatter(packed, domain);
            std::vector<std::uint64_t> restr(TruthTable::word_count(std::max(free_vars, 1)), 0);
            for (Word z = 0; z < (Word{1} << free_vars); ++z) {
                Word x = sigma | scatter(z, comask);
                if (f.get(x)) restr[z >> 6] |= std::uint64_t{1} << (z & 63);
            }
            tables.emplace_back(std::move(restr), sigma);
        }
        std::sort(tables.begin(), tables.end());
        for (std::size_t i = 1; i < tables.size(); ++i) {
            if (tables[i].first == tables[i - 1].first) {
                rep.mixed = false;
                rep.collapse = CollapseWitness{domain, tables[i - 1].second, tables[i].second};
                return rep;
            }
        }
    }
    return rep;
}

MixedReport is_d_mixed_alt(const TruthTable& f, int d, std::uint64_t budget) {
    const int n = f.n;
    if (n > 12) throw BudgetError("is_d_mixed_alt: exhaustive check capped at n <= 12");
    if (d < 0 || d > n) throw std::invalid_argument("is_d_mixed_alt: d out of range");
    {
        std::uint64_t cost = 0;
        for (Word domain = 0; domain < (Word{1} << n); ++domain) {
            int isz = std::popcount(domain);
            if (isz <= n - d) cost += (std::uint64_t{1} << isz) * (std::uint64_t{1} << n);
        }
        check_budget(cost, budget, "is_d_mixed_alt");
    }

    MixedReport rep;
    for (Word domain = 0; domain < (Word{1} << n); ++domain) {
        int isz = std::popcount(domain);
        if (isz > n - d) continue;
        const Word comask = word_mask(n) & ~domain;
        const int free_vars = n - isz;
        for (Word packed = 0; packed < (Word{1} << isz); ++packed) {
            Word sigma = scatter(packed, domain);
            for (Word cp = 1; cp < (Word{1} << isz); ++cp) {
                Word c = scatter(cp, domain);
                bool found = false;
                for (Word z = 0; z < (Word{1} << free_vars) && !found; ++z) {
                    Word x = sigma | scatter(z, comask);
                    found = f.get(x) != f.get(x ^ c);
                }
                if (!found) {
                    rep.mixed = false;
                    rep.translate = TranslateWitness{domain, sigma, c};
                    return rep;
                }
            }
        }
    }
    return rep;
}

MixedReport is_d_affine_mixed(const TruthTable& f, int d, std::uint64_t budget) {
    const int n = f.n;
    if (n > 10) throw BudgetError("is_d_affine_mixed: exhaustive check capped at n <= 10");
    if (d < 0 || d > n) throw std::invalid_argument("is_d_affine_mixed: d out of range");
    {
        std::uint64_t cost = 0;
        for (int dim = d; dim <= n; ++dim) {
            AffineEnumerator e(n, dim);
            cost += e.total() * (std::uint64_t{1} << n) ;
        }
        check_budget(cost, budget, "is_d_affine_mixed");
    }

    MixedReport rep;
    for (int dim = d; dim <= n; ++dim) {
        AffineEnumerator e(n, dim);
        auto st = e.stream();
        while (auto s = st.next()) {
            for (Word c = 1; c < (Word{1} << n); ++c) {
                if (s->space.contains(c)) continue;
                bool found = false;
                for_each_point(*s, [&](Word x) {
                    if (!found && f.get(x) != f.get(x ^ c)) found = true;
                });
                if (!found) {
                    rep.mixed = false;
                    rep.affine = AffineTranslateWitness{*s, c};
                    return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace lbp
