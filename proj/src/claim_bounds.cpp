#include "lbp/claim_bounds.hpp"

#include <stdexcept>

#include "lbp/errors.hpp"

namespace lbp {

namespace {

// Extends every leaf whose depth is below `target` by a chain of ignored
// queries, each independent of the path space, so that all paths reach
// depth at least `target`.
LinearBP pad_to_depth(const LinearBP& bp, int target) {
    LinearBP out = bp;
    auto sp = compute_spaces(out);
    const int orig = out.size();
    for (int v = 0; v < orig; ++v) {
        if (!out.nodes[v].is_sink) continue;
        int missing = target - sp[v].pre.dim();
        if (missing <= 0) continue;

        Subspace span = sp[v].pre;
        std::vector<Word> chain;
        for (int j = 0; j < out.n && static_cast<int>(chain.size()) < missing; ++j)
            if (span.insert(Word{1} << j)) chain.push_back(Word{1} << j);
        if (static_cast<int>(chain.size()) < missing)
            throw std::logic_error("pad_to_depth: no completion available");

        // The sink keeps its label at the end of the chain; the old sink
        // node becomes the first ignored query.
        BpNode tail;
        tail.is_sink = true;
        tail.label = out.nodes[v].label;
        out.nodes.push_back(tail);
        int next = out.size() - 1;
        for (std::size_t i = chain.size(); i-- > 1;) {
            BpNode mp;
            mp.query = LinearForm(out.n, chain[i]);
            mp.next = {next, next};
            out.nodes.push_back(mp);
            next = out.size() - 1;
        }
        out.nodes[v].is_sink = false;
        out.nodes[v].query = LinearForm(out.n, chain[0]);
        out.nodes[v].next = {next, next};
    }
    return out;
}

bool bound_holds(std::uint64_t wrong, std::uint64_t k, int d, const Rational& eps) {
    const unsigned __int128 big = static_cast<unsigned __int128>(k) << d;  // K = k 2^d
    if (2 * static_cast<unsigned __int128>(wrong) >= big) return true;
    const unsigned __int128 t = big - 2 * static_cast<unsigned __int128>(wrong);
    const unsigned __int128 p = static_cast<unsigned __int128>(eps.num);
    const unsigned __int128 q = static_cast<unsigned __int128>(eps.den);
    // t^2 q k <= K^2 (p k + q), exact in 128 bits for n <= 24 and q <= 2^32.
    return t * t * q * k <= big * big * (p * k + q);
}

}  // namespace

ClaimReport check_wrong_input_bound(const LinearBP& bp, const TruthTable& f, int d,
                                    const Rational& eps, int jobs) {
    validate(bp);
    if (bp.mode != BpMode::kFunction)
        throw std::invalid_argument("wrong-input bound: program must be in function mode");
    if (f.n != bp.n) throw std::invalid_argument("wrong-input bound: table dimension mismatch");
    if (d < 0 || d > bp.n) throw std::invalid_argument("wrong-input bound: d out of range");
    if (eps.num < 0 || eps.den > (std::int64_t{1} << 32))
        throw std::invalid_argument("wrong-input bound: eps must be nonnegative with denominator <= 2^32");
    if (auto full = is_full(bp); !full.ok)
        throw std::invalid_argument("wrong-input bound: program is not full (node " +
                                    std::to_string(full.witness) + ")");
    if (auto ro = is_strongly_read_once(bp); !ro.ok)
        throw std::invalid_argument("wrong-input bound: program is not strongly read-once (node " +
                                    std::to_string(ro.witness) + ")");

    const int depth = bp.n - d;
    LinearBP padded = pad_to_depth(bp, depth);
    if (auto full = is_full(padded); !full.ok)
        throw std::logic_error("wrong-input bound: padding broke fullness");
    if (auto ro = is_strongly_read_once(padded); !ro.ok)
        throw std::logic_error("wrong-input bound: padding broke the read-once property");

    const auto sp = compute_spaces(padded);
    const auto order = topo_order(padded);

    // Paths from the source, counted per edge.
    std::vector<std::uint64_t> path_count(padded.nodes.size(), 0);
    path_count[padded.source] = 1;
    for (int v : order) {
        const auto& nd = padded.nodes[v];
        if (nd.is_sink) continue;
        path_count[nd.next[0]] += path_count[v];
        path_count[nd.next[1]] += path_count[v];
    }

    ClaimReport rep;
    rep.depth = depth;
    rep.expected_path_sum = std::uint64_t{1} << depth;
    rep.pass = true;

    for (int v = 0; v < padded.size(); ++v) {
        if (sp[v].pre.dim() != depth) continue;
        // In a full read-once program every path into v answers a system
        // over the same query space; its solution cosets partition the
        // inputs through v.
        ClaimNodeReport nr;
        nr.node = v;
        nr.meeting_paths = path_count[v];
        rep.path_sum += path_count[v];

        std::vector<AffineSubspace> cosets;
        std::vector<PathStep> walk;
        // Restrict the walk to ancestors of v to keep the search linear in
        // the number of paths.
        std::vector<bool> reaches(padded.nodes.size(), false);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto& nd = padded.nodes[*it];
            reaches[*it] = (*it == v) ||
                           (!nd.is_sink && (reaches[nd.next[0]] || reaches[nd.next[1]]));
        }
        auto dfs_pruned = [&](auto&& self, int u) -> void {
            if (u == v) {
                LinearSystem sys(padded.n);
                for (const auto& stp : walk)
                    sys.add(padded.nodes[stp.node].query, stp.bit != 0);
                auto sol = solve(sys);
                if (!sol) throw std::logic_error("wrong-input bound: unrealizable path");
                cosets.push_back(*sol);
                return;
            }
            const auto& nd = padded.nodes[u];
            if (nd.is_sink) return;
            for (int b = 0; b < 2; ++b) {
                if (!reaches[nd.next[b]]) continue;
                walk.push_back({u, b});
                self(self, nd.next[b]);
                walk.pop_back();
            }
        };
        dfs_pruned(dfs_pruned, padded.source);

        if (cosets.size() != path_count[v])
            throw std::logic_error("wrong-input bound: path count mismatch");
        for (const auto& c : cosets)
            if (c.dim() != d) throw std::logic_error("wrong-input bound: coset dimension");

        std::uint64_t wrong = 0;
        const std::int64_t csize = static_cast<std::int64_t>(cosets.size());
#pragma omp parallel for num_threads(jobs) schedule(static) reduction(+ : wrong)
        for (std::int64_t i = 0; i < csize; ++i) {
            std::uint64_t local = 0;
            for_each_point(cosets[i], [&](Word x) {
                local += f.get(x) != (evaluate_label(bp, x).value != 0);
            });
            wrong += local;
        }
        nr.wrong_inputs = wrong;
        nr.bound_ok = bound_holds(wrong, nr.meeting_paths, d, eps);
        if (!nr.bound_ok) rep.pass = false;
        rep.nodes.push_back(nr);
    }

    rep.sum_ok = rep.path_sum == rep.expected_path_sum;
    if (!rep.sum_ok) rep.pass = false;
    return rep;
}

}  // namespace lbp
