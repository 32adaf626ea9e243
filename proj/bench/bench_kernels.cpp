// Timing comparison between the serial reference kernels and the
// OpenMP-parallel production kernels. Both sides must agree on the result;
// the table reports wall times and speedups.
//
//   ./lbp_bench [threads]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include <omp.h>

#include "lbp/extractor.hpp"
#include "lbp/gf2k.hpp"
#include "lbp/rng.hpp"
#include "lbp/truth_table.hpp"

using namespace lbp;

namespace {

double time_ms(const std::function<void()>& body, int reps = 3) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-34s %10.2f %10.2f %8.2fx   %s\n", name, serial, parallel,
                serial / parallel, agree ? "results agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    std::printf("threads: %d\n", threads);
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial ms", "par ms", "speedup");

    {
        // exhaustive directional extractor scan, n = 6, d = 5
        TruthTable f = make_trace_triple(FieldCtx(2));
        Rational worst_ref;
        double serial = time_ms([&] { worst_ref = ref::worst_directional_bias(f, 5).bias; });
        CheckOptions opts;
        opts.jobs = threads;
        ExtractorReport rep;
        double par = time_ms([&] { rep = check_directional_affine_extractor(f, 5, Rational(1, 2), opts); });
        row("directional scan n=6 d=5", serial, par, rep.worst_bias == worst_ref);
    }
    {
        // exhaustive directional scan on a random 8-variable table
        Rng rng(1);
        TruthTable f(8);
        for (auto& w : f.words) w = rng.next();
        Rational worst_ref;
        double serial = time_ms([&] { worst_ref = ref::worst_directional_bias(f, 6).bias; }, 1);
        CheckOptions opts;
        opts.jobs = threads;
        ExtractorReport rep;
        double par = time_ms(
            [&] { rep = check_directional_affine_extractor(f, 6, Rational(1, 2), opts); }, 1);
        row("directional scan n=8 d=6", serial, par, rep.worst_bias == worst_ref);
    }
    {
        // sampled directional scan, n = 9, 200k trials
        TruthTable f = make_trace_triple(FieldCtx(3));
        CheckOptions one;
        one.sampled = true;
        one.trials = 200000;
        one.seed = 42;
        one.jobs = 1;
        CheckOptions many = one;
        many.jobs = threads;
        ExtractorReport r1, rn;
        double serial = time_ms([&] { r1 = check_directional_affine_extractor(f, 7, Rational(1, 2), one); });
        double par = time_ms([&] { rn = check_directional_affine_extractor(f, 7, Rational(1, 2), many); });
        row("sampled scan n=9 d=7 (200k)", serial, par,
            r1.worst_bias == rn.worst_bias && r1.witness->same_set(*rn.witness));
    }
    {
        // fast Walsh transform, n = 20
        Rng rng(2);
        TruthTable f(20);
        for (auto& w : f.words) w = rng.next();
        std::vector<std::int32_t> a, b;
        double serial = time_ms([&] { a = walsh(f, 1); });
        double par = time_ms([&] { b = walsh(f, threads); });
        row("walsh transform n=20", serial, par, a == b);
    }
    {
        // quadratic-definition spectrum as the reference, n = 12
        Rng rng(3);
        TruthTable f(12);
        for (auto& w : f.words) w = rng.next();
        std::vector<std::int32_t> a, b;
        double serial = time_ms([&] { a = walsh_naive(f); }, 1);
        double par = time_ms([&] { b = walsh(f, threads); }, 1);
        row("walsh n=12 (naive vs fast)", serial, par, a == b);
    }
    return 0;
}
