#include "lbp/extractor.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <vector>

#include "lbp/affine_enum.hpp"

namespace lbp {

namespace {

// Lattice join used by every scan: larger bias wins, ties go to the
// smaller global index. Order-independent, so any loop partition and any
// merge order produce the same result.
struct Best {
    Rational bias{-1, 1};
    std::uint64_t key = ~std::uint64_t{0};
    std::uint64_t ops = 0;

    void consider(const Rational& b, std::uint64_t k) {
        if (bias < b || (b == bias && k < key)) {
            bias = b;
            key = k;
        }
    }
    void merge(const Best& o) {
        consider(o.bias, o.key);
        ops += o.ops;
    }
};

Rational coset_bias(const TruthTable& f, const AffineSubspace& s) {
    std::int64_t ones = 0;
    for_each_point(s, [&](Word x) { ones += f.get(x); });
    std::int64_t total = std::int64_t{1} << s.dim();
    std::int64_t diff = total - 2 * ones;
    return Rational(diff < 0 ? -diff : diff, total);
}

Rational coset_bias_derivative(const TruthTable& f, Word a, const AffineSubspace& s) {
    std::int64_t ones = 0;
    for_each_point(s, [&](Word x) { ones += f.get(x) ^ f.get(x ^ a); });
    std::int64_t total = std::int64_t{1} << s.dim();
    std::int64_t diff = total - 2 * ones;
    return Rational(diff < 0 ? -diff : diff, total);
}

struct DimGrid {
    std::vector<std::unique_ptr<AffineEnumerator>> enums;
    std::vector<std::uint64_t> offsets;  // prefix of totals, size enums+1
    std::uint64_t points = 0;            // sum of total * 2^dim

    DimGrid(int n, int d_lo, int d_hi) {
        offsets.push_back(0);
        for (int d = d_lo; d <= d_hi; ++d) {
            enums.push_back(std::make_unique<AffineEnumerator>(n, d));
            std::uint64_t t = enums.back()->total();
            offsets.push_back(offsets.back() + t);
            points += t << d;
        }
    }
    std::uint64_t total() const { return offsets.back(); }
    AffineSubspace decode(std::uint64_t g) const {
        auto it = std::upper_bound(offsets.begin(), offsets.end(), g);
        std::size_t i = static_cast<std::size_t>(it - offsets.begin()) - 1;
        return enums[i]->decode(g - offsets[i]);
    }
};

void require_sampled_args(const CheckOptions& opts) {
    if (opts.trials == 0) throw std::invalid_argument("sampled mode requires a positive trial count");
}

// Exhaustive scan of restricted biases over the grid, returning the join.
Best scan_plain(const TruthTable& f, const DimGrid& grid, int jobs) {
    const std::int64_t total = static_cast<std::int64_t>(grid.total());
    Best global;
#pragma omp parallel num_threads(jobs)
    {
        Best local;
#pragma omp for schedule(static) nowait
        for (std::int64_t g = 0; g < total; ++g) {
            AffineSubspace s = grid.decode(static_cast<std::uint64_t>(g));
            local.consider(coset_bias(f, s), static_cast<std::uint64_t>(g));
            local.ops += std::uint64_t{1} << s.dim();
        }
#pragma omp critical
        global.merge(local);
    }
    return global;
}

Best scan_directional(const TruthTable& f, const DimGrid& grid, int jobs) {
    const std::int64_t dirs = (std::int64_t{1} << f.n) - 1;
    const std::uint64_t per_dir = grid.total();
    Best global;
#pragma omp parallel num_threads(jobs)
    {
        Best local;
        TruthTable deriv(f.n);
#pragma omp for schedule(static) nowait
        for (std::int64_t ai = 0; ai < dirs; ++ai) {
            const Word a = static_cast<Word>(ai) + 1;
            for (std::uint32_t x = 0; x < f.size(); ++x) deriv.set(x, f.get(x) ^ f.get(x ^ a));
            for (std::uint64_t g = 0; g < per_dir; ++g) {
                AffineSubspace s = grid.decode(g);
                local.consider(coset_bias(deriv, s),
                               static_cast<std::uint64_t>(ai) * per_dir + g);
                local.ops += std::uint64_t{1} << s.dim();
            }
        }
#pragma omp critical
        global.merge(local);
    }
    return global;
}

// Sampled scan; directional when `directional` is set. Witnesses are
// reconstructed afterwards by replaying the winning trial's RNG stream.
struct TrialDraw {
    Word a = 0;
    AffineSubspace s;
};

TrialDraw draw_trial(std::uint64_t seed, std::uint64_t t, int n, int d_lo, int d_hi,
                     bool directional) {
    Rng rng(seed, t);
    TrialDraw out;
    if (directional) {
        out.a = static_cast<Word>(1 + rng.below((std::uint64_t{1} << n) - 1));
    }
    int dim = d_lo + (d_hi > d_lo ? static_cast<int>(rng.below(d_hi - d_lo + 1)) : 0);
    out.s = sample_affine(rng, n, dim);
    return out;
}

Best scan_sampled(const TruthTable& f, int d_lo, int d_hi, bool directional,
                  const CheckOptions& opts) {
    require_sampled_args(opts);
    const std::int64_t trials = static_cast<std::int64_t>(opts.trials);
    Best global;
#pragma omp parallel num_threads(opts.jobs)
    {
        Best local;
#pragma omp for schedule(static) nowait
        for (std::int64_t t = 0; t < trials; ++t) {
            TrialDraw tr = draw_trial(opts.seed, static_cast<std::uint64_t>(t), f.n, d_lo, d_hi,
                                      directional);
            Rational b = directional ? coset_bias_derivative(f, tr.a, tr.s) : coset_bias(f, tr.s);
            local.consider(b, static_cast<std::uint64_t>(t));
            local.ops += std::uint64_t{1} << tr.s.dim();
        }
#pragma omp critical
        global.merge(local);
    }
    return global;
}

ExtractorReport run_check(const TruthTable& f, int d, bool directional, const CheckOptions& opts) {
    if (d < 0 || d > f.n) throw std::invalid_argument("check: dimension d out of range");
    const int d_hi = opts.all_dims_geq ? f.n : d;
    ExtractorReport rep;
    rep.exhaustive = !opts.sampled;

    if (opts.sampled) {
        Best best = scan_sampled(f, d, d_hi, directional, opts);
        rep.worst_bias = best.bias;
        rep.trials = opts.trials;
        rep.ops = best.ops;
        if (opts.trials > 0) {
            TrialDraw tr = draw_trial(opts.seed, best.key, f.n, d, d_hi, directional);
            if (directional) rep.direction = BitVec(f.n, tr.a);
            rep.witness = tr.s;
        }
        return rep;
    }

    DimGrid grid(f.n, d, d_hi);
    const std::uint64_t dirs = directional ? (std::uint64_t{1} << f.n) - 1 : 1;
    if (grid.total() == 0) throw std::logic_error("empty subspace grid");
    if (dirs > opts.budget / grid.points || dirs * grid.points > opts.budget)
        throw BudgetError("exhaustive scan needs ~" + std::to_string(grid.points) + " x " +
                          std::to_string(dirs) +
                          " point evaluations, over budget; rerun with --sample N --seed S");

    Best best = directional ? scan_directional(f, grid, opts.jobs) : scan_plain(f, grid, opts.jobs);
    rep.worst_bias = best.bias;
    rep.trials = dirs * grid.total();
    rep.ops = best.ops;
    if (directional) {
        rep.direction = BitVec(f.n, static_cast<Word>(best.key / grid.total()) + 1);
        rep.witness = grid.decode(best.key % grid.total());
    } else {
        rep.witness = grid.decode(best.key);
    }
    return rep;
}

}  // namespace

AffineSubspace sample_affine(Rng& rng, int n, int d) {
    if (d < 0 || d > n) throw std::invalid_argument("sample_affine: bad dimension");
    Subspace space(n);
    for (;;) {
        space.basis.clear();
        for (int i = 0; i < d; ++i) space.insert(rng.bits(n));
        if (space.dim() == d) break;
    }
    return AffineSubspace(std::move(space), rng.bits(n));
}

ExtractorReport check_affine_extractor(const TruthTable& f, int d, const Rational& eps,
                                       const CheckOptions& opts) {
    ExtractorReport rep = run_check(f, d, false, opts);
    rep.pass = rep.worst_bias <= eps;
    return rep;
}

ExtractorReport check_affine_disperser(const TruthTable& f, int d, const CheckOptions& opts) {
    ExtractorReport rep = run_check(f, d, false, opts);
    rep.pass = rep.worst_bias < Rational(1, 1);
    return rep;
}

ExtractorReport check_directional_affine_extractor(const TruthTable& f, int d, const Rational& eps,
                                                   const CheckOptions& opts) {
    ExtractorReport rep = run_check(f, d, true, opts);
    rep.pass = rep.worst_bias <= eps;
    return rep;
}

ExtractorReport check_directional_affine_disperser(const TruthTable& f, int d,
                                                   const CheckOptions& opts) {
    ExtractorReport rep = run_check(f, d, true, opts);
    rep.pass = rep.worst_bias < Rational(1, 1);
    return rep;
}

namespace ref {

namespace {

// Point m of a subspace without Gray stepping: xor of the basis rows
// selected by m, from scratch each time.
Word nth_point(const AffineSubspace& s, std::uint64_t m) {
    Word x = s.shift;
    const auto& rows = s.space.basis;
    for (std::size_t j = 0; j < rows.size(); ++j)
        if ((m >> j) & 1) x ^= rows[j];
    return x;
}

Rational slow_bias(const TruthTable& f, const AffineSubspace& s, Word a) {
    const std::uint64_t count = std::uint64_t{1} << s.dim();
    std::int64_t ones = 0;
    for (std::uint64_t m = 0; m < count; ++m) {
        Word x = nth_point(s, m);
        bool v = a ? (f.get(x) ^ f.get(x ^ a)) : f.get(x);
        ones += v;
    }
    std::int64_t total = static_cast<std::int64_t>(count);
    std::int64_t diff = total - 2 * ones;
    return Rational(diff < 0 ? -diff : diff, total);
}

}  // namespace

WorstBias worst_restricted_bias(const TruthTable& f, int d) {
    AffineEnumerator e(f.n, d);
    WorstBias out;
    out.bias = Rational(-1, 1);
    auto st = e.stream();
    std::uint64_t g = 0;
    while (auto s = st.next()) {
        Rational b = slow_bias(f, *s, 0);
        if (out.bias < b) {
            out.bias = b;
            out.index = g;
        }
        ++g;
    }
    return out;
}

WorstBias worst_directional_bias(const TruthTable& f, int d) {
    AffineEnumerator e(f.n, d);
    WorstBias out;
    out.bias = Rational(-1, 1);
    std::uint64_t global = 0;
    for (Word a = 1; a < (Word{1} << f.n); ++a) {
        auto st = e.stream();
        while (auto s = st.next()) {
            Rational b = slow_bias(f, *s, a);
            if (out.bias < b) {
                out.bias = b;
                out.index = global;
            }
            ++global;
        }
    }
    return out;
}

}  // namespace ref

}  // namespace lbp
