#include "lbp/linear_bp.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "lbp/errors.hpp"

namespace lbp {

namespace {

std::vector<int> in_degrees(const LinearBP& bp) {
    std::vector<int> deg(bp.nodes.size(), 0);
    for (const auto& nd : bp.nodes) {
        if (nd.is_sink) continue;
        ++deg[nd.next[0]];
        ++deg[nd.next[1]];
    }
    return deg;
}

}  // namespace

void validate(const LinearBP& bp) {
    check_dim(bp.n);
    const int size = bp.size();
    if (size == 0) throw std::invalid_argument("bp: no nodes");
    if (bp.source < 0 || bp.source >= size) throw std::invalid_argument("bp: bad source id");

    int sinks = 0;
    bool seen_label[2] = {false, false};
    for (int v = 0; v < size; ++v) {
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) {
            ++sinks;
            if (bp.mode == BpMode::kFunction) {
                if (nd.label.is_clause || nd.label.value < 0 || nd.label.value > 1)
                    throw std::invalid_argument("bp: function sink must be labeled 0 or 1");
                if (seen_label[nd.label.value])
                    throw std::invalid_argument("bp: duplicate function sink label");
                seen_label[nd.label.value] = true;
            } else {
                if (!nd.label.is_clause || nd.label.value < 0)
                    throw std::invalid_argument("bp: search sink must carry a clause index");
            }
        } else {
            if (nd.query.n != bp.n) throw std::invalid_argument("bp: query dimension mismatch");
            for (int b = 0; b < 2; ++b)
                if (nd.next[b] < 0 || nd.next[b] >= size)
                    throw std::invalid_argument("bp: edge target out of range");
        }
    }
    if (sinks == 0) throw std::invalid_argument("bp: no sinks");

    auto deg = in_degrees(bp);
    int sources = 0;
    for (int v = 0; v < size; ++v)
        if (deg[v] == 0) ++sources;
    if (sources != 1 || deg[bp.source] != 0)
        throw std::invalid_argument("bp: program must have exactly one source");

    if (static_cast<int>(topo_order(bp).size()) != size)
        throw std::invalid_argument("bp: graph has a cycle");
}

std::vector<int> topo_order(const LinearBP& bp) {
    auto deg = in_degrees(bp);
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < bp.size(); ++v)
        if (deg[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(bp.nodes.size());
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) continue;
        for (int b = 0; b < 2; ++b) {
            int w = nd.next[b];
            // A multipath node feeds its child twice.
            if (--deg[w] == 0) ready.push(w);
        }
    }
    return order;
}

EvalResult evaluate(const LinearBP& bp, const BitVec& x) {
    if (x.n != bp.n) throw std::invalid_argument("evaluate: input dimension mismatch");
    EvalResult r;
    int v = bp.source;
    for (;;) {
        r.path.push_back(v);
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) {
            r.label = nd.label;
            return r;
        }
        v = nd.next[nd.query.eval_bits(x.bits) ? 1 : 0];
    }
}

SinkLabel evaluate_label(const LinearBP& bp, Word x) {
    int v = bp.source;
    for (;;) {
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) return nd.label;
        v = nd.next[nd.query.eval_bits(x) ? 1 : 0];
    }
}

std::vector<NodeSpaces> compute_spaces(const LinearBP& bp) {
    const auto order = topo_order(bp);
    std::vector<NodeSpaces> sp(bp.nodes.size(), {Subspace(bp.n), Subspace(bp.n)});
    // Forward pass: pre of a child accumulates every parent's pre plus the
    // parent's own query.
    for (int v : order) {
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) continue;
        for (int b = 0; b < 2; ++b) {
            Subspace& child = sp[nd.next[b]].pre;
            child = sum(child, sp[v].pre);
            child.insert(nd.query.coeffs);
        }
    }
    // Backward pass: post spans the node's query and both children's posts.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto& nd = bp.nodes[*it];
        if (nd.is_sink) continue;
        Subspace& post = sp[*it].post;
        post = sum(sp[nd.next[0]].post, sp[nd.next[1]].post);
        post.insert(nd.query.coeffs);
    }
    return sp;
}

NodeSpaces node_spaces(const LinearBP& bp, int v) {
    if (v < 0 || v >= bp.size()) throw std::invalid_argument("node_spaces: bad node id");
    return compute_spaces(bp)[v];
}

RoCheck is_weakly_read_once(const LinearBP& bp) {
    auto sp = compute_spaces(bp);
    for (int v = 0; v < bp.size(); ++v) {
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) continue;
        if (sp[v].pre.contains(nd.query.coeffs)) return {false, v};
    }
    return {};
}

RoCheck is_strongly_read_once(const LinearBP& bp) {
    auto sp = compute_spaces(bp);
    for (int v = 0; v < bp.size(); ++v) {
        if (bp.nodes[v].is_sink) continue;
        if (intersect(sp[v].pre, sp[v].post).dim() != 0) return {false, v};
    }
    return {};
}

AffineSubspace canonical_path_subspace(const LinearBP& bp, const std::vector<PathStep>& steps) {
    LinearSystem sys(bp.n);
    int at = bp.source;
    for (const auto& st : steps) {
        if (st.node != at) throw std::invalid_argument("path: step does not continue the walk");
        const auto& nd = bp.nodes.at(st.node);
        if (nd.is_sink) throw std::invalid_argument("path: walked past a sink");
        if (st.bit != 0 && st.bit != 1) throw std::invalid_argument("path: bad edge bit");
        sys.add(nd.query, st.bit != 0);
        at = nd.next[st.bit];
    }
    auto sp = compute_spaces(bp);
    BitVec shift = canonical_shift(sys, sp[at].post);

    std::vector<Word> queries;
    for (const auto& [q, a] : sys.rows) queries.push_back(q.coeffs);
    return AffineSubspace(annihilator(rref(bp.n, queries)), shift.bits);
}

FullCheck is_full(const LinearBP& bp) {
    const auto order = topo_order(bp);
    std::vector<Subspace> incoming(bp.nodes.size(), Subspace(bp.n));
    std::vector<bool> seen(bp.nodes.size(), false);
    seen[bp.source] = true;
    for (int v : order) {
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) continue;
        Subspace edge_space = incoming[v];
        edge_space.insert(nd.query.coeffs);
        for (int b = 0; b < 2; ++b) {
            int w = nd.next[b];
            if (!seen[w]) {
                incoming[w] = edge_space;
                seen[w] = true;
            } else if (!(incoming[w] == edge_space)) {
                return {false, w};
            }
        }
    }
    return {};
}

LinearBP make_full(const LinearBP& bp) {
    validate(bp);
    if (auto ro = is_weakly_read_once(bp); !ro.ok)
        throw std::invalid_argument("make_full: input is not read-once (node " +
                                    std::to_string(ro.witness) + " repeats a spanned query)");

    const auto sp = compute_spaces(bp);
    const auto order = topo_order(bp);

    LinearBP out;
    out.n = bp.n;
    out.mode = bp.mode;
    out.source = bp.source;
    out.nodes = bp.nodes;

    // Every path into u already spans pre(u) once u's incoming edges are
    // rebuilt, so the space carried by edge (u, b) is pre(u) + q_u. Insert
    // a chain of ignored queries completing that space to pre(v).
    for (int u : order) {
        const auto& src_node = bp.nodes[u];
        if (src_node.is_sink) continue;
        for (int b = 0; b < 2; ++b) {
            const int v = src_node.next[b];
            Subspace edge_space = sp[u].pre;
            edge_space.insert(src_node.query.coeffs);

            std::vector<Word> completion;
            for (Word row : sp[v].pre.basis)
                if (edge_space.insert(row)) completion.push_back(row);

            int target = v;
            for (auto it = completion.rbegin(); it != completion.rend(); ++it) {
                BpNode mp;
                mp.is_sink = false;
                mp.query = LinearForm(bp.n, *it);
                mp.next = {target, target};
                out.nodes.push_back(mp);
                target = static_cast<int>(out.nodes.size()) - 1;
            }
            out.nodes[u].next[b] = target;
        }
    }

    // Renumber along the topological order so output ids are canonical.
    const auto new_order = topo_order(out);
    if (new_order.size() != out.nodes.size()) throw std::logic_error("make_full: cycle introduced");
    std::vector<int> position(out.nodes.size());
    for (std::size_t i = 0; i < new_order.size(); ++i) position[new_order[i]] = static_cast<int>(i);
    LinearBP renum;
    renum.n = out.n;
    renum.mode = out.mode;
    renum.source = position[out.source];
    renum.nodes.resize(out.nodes.size());
    for (std::size_t v = 0; v < out.nodes.size(); ++v) {
        BpNode nd = out.nodes[v];
        if (!nd.is_sink) {
            nd.next[0] = position[nd.next[0]];
            nd.next[1] = position[nd.next[1]];
        }
        renum.nodes[position[v]] = nd;
    }
    return renum;
}

int max_antichain(const LinearBP& bp) {
    const int size = bp.size();
    if (size > 4096) throw BudgetError("max_antichain: program too large for exact chain cover");
    const auto order = topo_order(bp);

    // Transitive closure as bitsets, children first.
    const int blocks = (size + 63) / 64;
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(size) * blocks, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) continue;
        for (int b = 0; b < 2; ++b) {
            int w = nd.next[b];
            auto* rv = &reach[static_cast<std::size_t>(v) * blocks];
            auto* rw = &reach[static_cast<std::size_t>(w) * blocks];
            rv[w >> 6] |= std::uint64_t{1} << (w & 63);
            for (int i = 0; i < blocks; ++i) rv[i] |= rw[i];
        }
    }

    // Minimum chain cover via bipartite matching on the closure.
    std::vector<int> match_right(size, -1);
    std::vector<int> visited(size, -1);
    int stamp = 0;

    auto try_augment = [&](auto&& self, int u) -> bool {
        const auto* ru = &reach[static_cast<std::size_t>(u) * blocks];
        for (int i = 0; i < blocks; ++i) {
            std::uint64_t bits = ru[i];
            while (bits) {
                int w = (i << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                if (visited[w] == stamp) continue;
                visited[w] = stamp;
                if (match_right[w] < 0 || self(self, match_right[w])) {
                    match_right[w] = u;
                    return true;
                }
            }
        }
        return false;
    };

    int matching = 0;
    for (int u = 0; u < size; ++u) {
        ++stamp;
        if (try_augment(try_augment, u)) ++matching;
    }
    return size - matching;
}

SearchCheck solves_search(const LinearBP& bp, const Cnf& f, int jobs) {
    if (bp.mode != BpMode::kSearch) throw std::invalid_argument("solves_search: program not in search mode");
    if (bp.n != f.n) throw std::invalid_argument("solves_search: variable count mismatch");
    for (const auto& nd : bp.nodes)
        if (nd.is_sink && nd.label.value >= f.num_clauses())
            throw std::invalid_argument("solves_search: sink clause index out of range");

    const std::int64_t total = std::int64_t{1} << bp.n;
    std::uint64_t bad = ~std::uint64_t{0};
#pragma omp parallel num_threads(jobs)
    {
        std::uint64_t local = ~std::uint64_t{0};
#pragma omp for schedule(static) nowait
        for (std::int64_t x = 0; x < total; ++x) {
            SinkLabel lbl = evaluate_label(bp, static_cast<Word>(x));
            if (!f.clause_falsified(lbl.value, static_cast<Word>(x)))
                local = std::min(local, static_cast<std::uint64_t>(x));
        }
#pragma omp critical
        bad = std::min(bad, local);
    }
    if (bad == ~std::uint64_t{0}) return {};
    return {false, static_cast<Word>(bad)};
}

TruthTable bp_function(const LinearBP& bp, int jobs) {
    if (bp.mode != BpMode::kFunction) throw std::invalid_argument("bp_function: program not in function mode");
    TruthTable t(bp.n);
    const std::int64_t total = std::int64_t{1} << bp.n;
#pragma omp parallel for num_threads(jobs) schedule(static)
    for (std::int64_t w = 0; w < static_cast<std::int64_t>(t.words.size()); ++w) {
        std::uint64_t acc = 0;
        const std::int64_t base = w << 6;
        for (std::int64_t i = 0; i < 64 && base + i < total; ++i)
            if (evaluate_label(bp, static_cast<Word>(base + i)).value) acc |= std::uint64_t{1} << i;
        t.words[w] = acc;
    }
    return t;
}

}  // namespace lbp
