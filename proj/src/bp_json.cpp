#include <fstream>
#include <map>
#include <stdexcept>

#include "json.hpp"
#include "lbp/linear_bp.hpp"

namespace lbp {

namespace {

using Json = nlohmann::ordered_json;

SinkLabel parse_label(const std::string& s) {
    if (s == "0") return {false, 0};
    if (s == "1") return {false, 1};
    if (s.rfind("clause:", 0) == 0) {
        int idx = std::stoi(s.substr(7));
        if (idx < 1) throw std::invalid_argument("bp json: clause index must be >= 1");
        return {true, idx - 1};
    }
    throw std::invalid_argument("bp json: bad sink label \"" + s + "\"");
}

std::string label_text(const SinkLabel& l) {
    if (l.is_clause) return "clause:" + std::to_string(l.value + 1);
    return l.value ? "1" : "0";
}

}  // namespace

LinearBP bp_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("bp json: parse error: ") + e.what());
    }

    LinearBP bp;
    bp.n = j.at("n").get<int>();
    check_dim(bp.n);
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "function") bp.mode = BpMode::kFunction;
    else if (mode == "search") bp.mode = BpMode::kSearch;
    else throw std::invalid_argument("bp json: mode must be \"function\" or \"search\"");

    // External ids are arbitrary integers; map them to dense ids in
    // ascending order so loading is canonical.
    std::map<std::int64_t, int> dense;
    for (const auto& nd : j.at("nodes")) dense.emplace(nd.at("id").get<std::int64_t>(), 0);
    for (const auto& sk : j.at("sinks")) {
        auto [it, inserted] = dense.emplace(sk.at("id").get<std::int64_t>(), 0);
        if (!inserted) throw std::invalid_argument("bp json: id used as both node and sink");
    }
    {
        int next = 0;
        for (auto& [id, slot] : dense) slot = next++;
    }
    auto lookup = [&](std::int64_t id) {
        auto it = dense.find(id);
        if (it == dense.end())
            throw std::invalid_argument("bp json: unknown node id " + std::to_string(id));
        return it->second;
    };

    bp.nodes.resize(dense.size());
    std::vector<std::array<bool, 2>> have_edge(dense.size(), {false, false});
    for (const auto& nd : j.at("nodes")) {
        int v = lookup(nd.at("id").get<std::int64_t>());
        bp.nodes[v].is_sink = false;
        bp.nodes[v].query = LinearForm::parse(nd.at("query").get<std::string>(), bp.n);
    }
    for (const auto& sk : j.at("sinks")) {
        int v = lookup(sk.at("id").get<std::int64_t>());
        bp.nodes[v].is_sink = true;
        bp.nodes[v].label = parse_label(sk.at("label").get<std::string>());
    }
    for (const auto& ed : j.at("edges")) {
        int from = lookup(ed.at("from").get<std::int64_t>());
        int bit = ed.at("bit").get<int>();
        int to = lookup(ed.at("to").get<std::int64_t>());
        if (bit != 0 && bit != 1) throw std::invalid_argument("bp json: edge bit must be 0 or 1");
        if (bp.nodes[from].is_sink) throw std::invalid_argument("bp json: edge leaving a sink");
        if (have_edge[from][bit]) throw std::invalid_argument("bp json: duplicate edge");
        have_edge[from][bit] = true;
        bp.nodes[from].next[bit] = to;
    }
    for (std::size_t v = 0; v < bp.nodes.size(); ++v)
        if (!bp.nodes[v].is_sink && (!have_edge[v][0] || !have_edge[v][1]))
            throw std::invalid_argument("bp json: inner node missing an out-edge");

    bp.source = lookup(j.at("source").get<std::int64_t>());
    validate(bp);
    return bp;
}

LinearBP bp_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open bp file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return bp_from_json(text);
}

std::string bp_to_json(const LinearBP& bp) {
    Json j;
    j["n"] = bp.n;
    j["mode"] = bp.mode == BpMode::kFunction ? "function" : "search";
    j["source"] = bp.source;
    Json nodes = Json::array(), edges = Json::array(), sinks = Json::array();
    for (int v = 0; v < bp.size(); ++v) {
        const auto& nd = bp.nodes[v];
        if (nd.is_sink) {
            sinks.push_back(Json{{"id", v}, {"label", label_text(nd.label)}});
        } else {
            nodes.push_back(Json{{"id", v}, {"query", nd.query.hex()}});
            for (int b = 0; b < 2; ++b)
                edges.push_back(Json{{"from", v}, {"bit", b}, {"to", nd.next[b]}});
        }
    }
    j["nodes"] = std::move(nodes);
    j["edges"] = std::move(edges);
    j["sinks"] = std::move(sinks);
    return j.dump(2) + "\n";
}

}  // namespace lbp
