// Command-line front end. Every verb prints a single JSON report on stdout
// and exits 0 on PASS, 1 on FAIL (property violated, witness included) and
// 2 on ERROR (bad input or budget). Reports are byte-identical for fixed
// inputs and seed, independent of --jobs, except for the timing_ms field.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lbp/affine_enum.hpp"
#include "lbp/claim_bounds.hpp"
#include "lbp/errors.hpp"
#include "lbp/extractor.hpp"
#include "lbp/gf2k.hpp"
#include "lbp/linear_bp.hpp"
#include "lbp/mixedness.hpp"
#include "lbp/reslin.hpp"
#include "lbp/truth_table.hpp"

using Json = nlohmann::ordered_json;
using namespace lbp;

namespace {

struct GlobalOpts {
    std::optional<std::uint64_t> seed;
    std::uint64_t budget = kDefaultBudget;
    int jobs = 1;
};

struct Outcome {
    std::string verdict = "PASS";  // PASS | FAIL | ERROR
    Json result = Json::object();
    Json witness = nullptr;
};

std::string command_echo(int argc, char** argv) {
    // --jobs changes scheduling, never results; keep it out of the echo so
    // reports stay byte-identical across parallelism settings.
    std::string cmd;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--jobs") {
            ++i;
            continue;
        }
        if (a.rfind("--jobs=", 0) == 0) continue;
        if (!cmd.empty()) cmd += ' ';
        cmd += a;
    }
    return cmd;
}

Json subspace_json(const AffineSubspace& s) {
    Json basis = Json::array();
    for (Word row : s.space.basis) basis.push_back(to_hex(row, s.n()));
    return Json{{"dim", s.dim()}, {"basis", basis}, {"shift", to_hex(s.shift, s.n())}};
}

Json extractor_json(const ExtractorReport& rep) {
    Json j;
    j["mode"] = rep.exhaustive ? "exhaustive" : "sampled";
    j["worst_bias"] = rep.worst_bias.str();
    j["trials"] = rep.trials;
    j["point_evals"] = rep.ops;
    return j;
}

Json extractor_witness(const ExtractorReport& rep, int n) {
    Json w;
    w["direction"] = rep.direction ? Json(rep.direction->hex()) : Json(nullptr);
    w["subspace"] = rep.witness ? subspace_json(*rep.witness) : Json(nullptr);
    (void)n;
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

std::string strip_ws(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\n' || s[b] == '\r')) ++b;
    return s.substr(b);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

// Shared holder for a truth-table argument given as --table, --table-file
// or built from --k (trace triple product).
struct TableArgs {
    int n = 0;
    int k = 0;
    std::string table;
    std::string table_file;

    void add_flags(CLI::App* cmd, bool with_k) {
        cmd->add_option("--n", n, "number of variables");
        cmd->add_option("--table", table, "truth table as hex (2^n bits)");
        cmd->add_option("--table-file", table_file, "file holding the truth table hex");
        if (with_k)
            cmd->add_option("--k", k, "build Tr(xyz) over GF(2^k) instead of reading a table");
    }

    TruthTable load() const {
        if (k > 0) {
            if (!table.empty() || !table_file.empty() || n > 0)
                throw std::invalid_argument("give either --k or --n with a table, not both");
            return make_trace_triple(FieldCtx(k));
        }
        if (n <= 0) throw std::invalid_argument("--n is required with --table/--table-file");
        std::string hex = table;
        if (!table_file.empty()) {
            if (!hex.empty()) throw std::invalid_argument("give --table or --table-file, not both");
            hex = strip_ws(read_file(table_file));
        }
        if (hex.empty()) throw std::invalid_argument("missing truth table");
        return TruthTable::parse(hex, n);
    }
};

CheckOptions make_check_options(const GlobalOpts& g, std::uint64_t sample) {
    CheckOptions o;
    o.budget = g.budget;
    o.jobs = g.jobs;
    if (sample > 0) {
        if (!g.seed) throw std::invalid_argument("sampled mode requires --seed");
        o.sampled = true;
        o.trials = sample;
        o.seed = *g.seed;
    }
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear branching programs, extractor oracles and linear-clause resolution"};
    app.require_subcommand(1);
    GlobalOpts global;
    app.add_option("--seed", global.seed, "seed for sampled modes");
    app.add_option("--budget", global.budget, "bit-operation ceiling for exhaustive scans");
    app.add_option("--jobs", global.jobs, "worker threads (results are independent of this)")
        ->check(CLI::Range(1, 256));

    std::function<Outcome()> run;

    // ---------------------------------------------------------------- gf2k
    auto* gf = app.add_subcommand("gf2k", "GF(2^k) arithmetic and the trace map");
    gf->require_subcommand(1);
    {
        auto* c = gf->add_subcommand("modulus", "print the field modulus");
        auto k = std::make_shared<int>(0);
        c->add_option("--k", *k, "extension degree")->required();
        c->callback([&run, k] {
            run = [k] {
                FieldCtx ctx(*k);
                Outcome o;
                o.result["k"] = *k;
                o.result["modulus"] = to_hex(ctx.modulus(), *k + 1);
                return o;
            };
        });
    }
    {
        auto* c = gf->add_subcommand("tr", "trace of a field element");
        auto k = std::make_shared<int>(0);
        auto elem = std::make_shared<std::string>();
        c->add_option("--k", *k)->required();
        c->add_option("--elem", *elem, "element as hex")->required();
        c->callback([&run, k, elem] {
            run = [k, elem] {
                FieldCtx ctx(*k);
                Outcome o;
                o.result["trace"] = ctx.trace(from_hex(*elem, *k)) ? 1 : 0;
                return o;
            };
        });
    }
    {
        auto* c = gf->add_subcommand("mul", "product of two field elements");
        auto k = std::make_shared<int>(0);
        auto ab = std::make_shared<std::vector<std::string>>();
        c->add_option("--k", *k)->required();
        c->add_option("elems", *ab, "two elements as hex")->expected(2);
        c->callback([&run, k, ab] {
            run = [k, ab] {
                FieldCtx ctx(*k);
                Outcome o;
                o.result["product"] =
                    to_hex(ctx.mul(from_hex((*ab)[0], *k), from_hex((*ab)[1], *k)), *k);
                return o;
            };
        });
    }

    // -------------------------------------------------------------- boolfn
    auto* bf = app.add_subcommand("boolfn", "truth-table analysis and verification oracles");
    bf->require_subcommand(1);
    {
        auto* c = bf->add_subcommand("gen-daf", "truth table of Tr(xyz) over GF(2^k)");
        auto k = std::make_shared<int>(0);
        auto out = std::make_shared<std::string>();
        c->add_option("--k", *k)->required();
        c->add_option("--out", *out, "write the hex table to a file");
        c->callback([&run, k, out] {
            run = [k, out] {
                TruthTable t = make_trace_triple(FieldCtx(*k));
                Outcome o;
                o.result["n"] = t.n;
                o.result["table"] = t.hex();
                if (!out->empty()) write_file(*out, t.hex() + "\n");
                return o;
            };
        });
    }
    {
        auto* c = bf->add_subcommand("gen-g", "truth table of Tr(a0 xy + a1 x + a2 y + a3)");
        auto k = std::make_shared<int>(0);
        auto a = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"", "", "", ""});
        auto out = std::make_shared<std::string>();
        c->add_option("--k", *k)->required();
        c->add_option("--a0", (*a)[0])->required();
        c->add_option("--a1", (*a)[1])->required();
        c->add_option("--a2", (*a)[2])->required();
        c->add_option("--a3", (*a)[3])->required();
        c->add_option("--out", *out);
        c->callback([&run, k, a, out] {
            run = [k, a, out] {
                FieldCtx ctx(*k);
                TruthTable t = make_trace_bilinear(ctx, from_hex((*a)[0], *k), from_hex((*a)[1], *k),
                                                   from_hex((*a)[2], *k), from_hex((*a)[3], *k));
                Outcome o;
                o.result["n"] = t.n;
                o.result["table"] = t.hex();
                if (!out->empty()) write_file(*out, t.hex() + "\n");
                return o;
            };
        });
    }
    {
        auto* c = bf->add_subcommand("bias", "bias of a Boolean function");
        auto args = std::make_shared<TableArgs>();
        args->add_flags(c, false);
        c->callback([&run, args] {
            run = [args] {
                Outcome o;
                o.result["bias"] = bias(args->load()).str();
                return o;
            };
        });
    }
    {
        auto* c = bf->add_subcommand("dist", "relative distance between two functions");
        auto n = std::make_shared<int>(0);
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        c->add_option("--n", *n)->required();
        c->add_option("--a", *a, "first table hex")->required();
        c->add_option("--b", *b, "second table hex")->required();
        c->callback([&run, n, a, b] {
            run = [n, a, b] {
                Outcome o;
                o.result["distance"] =
                    distance(TruthTable::parse(*a, *n), TruthTable::parse(*b, *n)).str();
                return o;
            };
        });
    }
    {
        auto* c = bf->add_subcommand("walsh", "Walsh spectrum summary");
        auto args = std::make_shared<TableArgs>();
        args->add_flags(c, false);
        c->callback([&run, args, &global] {
            run = [args, &global] {
                TruthTable t = args->load();
                auto w = walsh(t, global.jobs);
                Outcome o;
                std::int64_t parseval = 0;
                std::int32_t max_abs = 0, min_abs = 0x7fffffff;
                for (std::int32_t c2 : w) {
                    std::int32_t a = c2 < 0 ? -c2 : c2;
                    parseval += static_cast<std::int64_t>(c2) * c2;
                    max_abs = std::max(max_abs, a);
                    min_abs = std::min(min_abs, a);
                }
                o.result["n"] = t.n;
                if (t.n <= 8) o.result["spectrum"] = w;
                o.result["max_abs"] = max_abs;
                o.result["min_abs"] = min_abs;
                o.result["parseval_ok"] = parseval == (std::int64_t{1} << (2 * t.n));
                o.result["bent"] = t.n % 2 == 0 ? Json(is_bent(t, global.jobs)) : Json(nullptr);
                return o;
            };
        });
    }
    auto add_ext_check = [&](CLI::App* parent, const char* name, const char* desc, bool directional) {
        auto* c = parent->add_subcommand(name, desc);
        auto args = std::make_shared<TableArgs>();
        args->add_flags(c, directional);
        auto d = std::make_shared<int>(-1);
        auto eps = std::make_shared<std::string>();
        auto disperser = std::make_shared<bool>(false);
        auto all_dims = std::make_shared<bool>(false);
        auto sample = std::make_shared<std::uint64_t>(0);
        c->add_option("--d", *d, "subspace dimension")->required();
        c->add_option("--eps", *eps, "bias bound as P/Q (extractor check)");
        c->add_flag("--disperser", *disperser, "check the disperser property instead");
        c->add_flag("--all-dims-geq", *all_dims, "also scan every dimension above --d");
        c->add_option("--sample", *sample, "sampled mode with this many trials");
        c->callback([&run, &global, args, d, eps, disperser, all_dims, sample, directional] {
            run = [&global, args, d, eps, disperser, all_dims, sample, directional] {
                TruthTable t = args->load();
                CheckOptions opts = make_check_options(global, *sample);
                opts.all_dims_geq = *all_dims;
                ExtractorReport rep;
                if (*disperser) {
                    if (!eps->empty())
                        throw std::invalid_argument("--eps and --disperser are exclusive");
                    rep = directional ? check_directional_affine_disperser(t, *d, opts)
                                      : check_affine_disperser(t, *d, opts);
                } else {
                    if (eps->empty()) throw std::invalid_argument("need --eps P/Q or --disperser");
                    Rational e = parse_rational(*eps);
                    rep = directional ? check_directional_affine_extractor(t, *d, e, opts)
                                      : check_affine_extractor(t, *d, e, opts);
                }
                Outcome o;
                o.result = extractor_json(rep);
                o.result["d"] = *d;
                o.result["property"] = *disperser ? "disperser" : "extractor";
                if (!rep.pass) {
                    o.verdict = "FAIL";
                    o.witness = extractor_witness(rep, t.n);
                } else {
                    o.witness = extractor_witness(rep, t.n);
                }
                return o;
            };
        });
    };
    add_ext_check(bf, "check-ext", "affine extractor / disperser oracle", false);
    add_ext_check(bf, "check-dae", "directional affine extractor / disperser oracle", true);
    {
        auto* c = bf->add_subcommand("check-mixed", "mixedness oracle");
        auto args = std::make_shared<TableArgs>();
        args->add_flags(c, false);
        auto d = std::make_shared<int>(-1);
        auto alt = std::make_shared<bool>(false);
        c->add_option("--d", *d)->required();
        c->add_flag("--alt", *alt, "use the translate formulation");
        c->callback([&run, &global, args, d, alt] {
            run = [&global, args, d, alt] {
                TruthTable t = args->load();
                MixedReport rep = *alt ? is_d_mixed_alt(t, *d, global.budget)
                                       : is_d_mixed(t, *d, global.budget);
                Outcome o;
                o.result["mixed"] = rep.mixed;
                o.result["d"] = *d;
                if (!rep.mixed) {
                    o.verdict = "FAIL";
                    if (rep.collapse)
                        o.witness = Json{{"domain", to_hex(rep.collapse->domain, t.n)},
                                         {"sigma", to_hex(rep.collapse->sigma, t.n)},
                                         {"tau", to_hex(rep.collapse->tau, t.n)}};
                    else if (rep.translate)
                        o.witness = Json{{"domain", to_hex(rep.translate->domain, t.n)},
                                         {"sigma", to_hex(rep.translate->sigma, t.n)},
                                         {"c", to_hex(rep.translate->c, t.n)}};
                }
                return o;
            };
        });
    }
    {
        auto* c = bf->add_subcommand("check-affine-mixed", "affine mixedness oracle");
        auto args = std::make_shared<TableArgs>();
        args->add_flags(c, false);
        auto d = std::make_shared<int>(-1);
        c->add_option("--d", *d)->required();
        c->callback([&run, &global, args, d] {
            run = [&global, args, d] {
                TruthTable t = args->load();
                MixedReport rep = is_d_affine_mixed(t, *d, global.budget);
                Outcome o;
                o.result["mixed"] = rep.mixed;
                o.result["d"] = *d;
                if (!rep.mixed) {
                    o.verdict = "FAIL";
                    o.witness = Json{{"subspace", subspace_json(rep.affine->space)},
                                     {"c", to_hex(rep.affine->c, t.n)}};
                }
                return o;
            };
        });
    }

    // ------------------------------------------------------------------ bp
    auto* bp_cmd = app.add_subcommand("bp", "linear branching programs");
    bp_cmd->require_subcommand(1);
    {
        auto* c = bp_cmd->add_subcommand("validate", "structural validity of a program file");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->callback([&run, file] {
            run = [file] {
                Outcome o;
                std::string text = read_file(*file);  // unreadable file -> ERROR
                try {
                    LinearBP bp = bp_from_json(text);
                    o.result["n"] = bp.n;
                    o.result["nodes"] = bp.size();
                    o.result["mode"] = bp.mode == BpMode::kFunction ? "function" : "search";
                } catch (const std::invalid_argument& e) {
                    o.verdict = "FAIL";
                    o.witness = Json{{"reason", e.what()}};
                }
                return o;
            };
        });
    }
    {
        auto* c = bp_cmd->add_subcommand("eval", "follow the path of one input");
        auto file = std::make_shared<std::string>();
        auto x = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("--x", *x, "input as hex")->required();
        c->callback([&run, file, x] {
            run = [file, x] {
                LinearBP bp = bp_from_json_file(*file);
                EvalResult r = evaluate(bp, BitVec::parse(*x, bp.n));
                Outcome o;
                o.result["path"] = r.path;
                o.result["label"] = r.label.is_clause ? "clause:" + std::to_string(r.label.value + 1)
                                                      : std::to_string(r.label.value);
                return o;
            };
        });
    }
    {
        auto* c = bp_cmd->add_subcommand("check-ro", "read-once property check");
        auto file = std::make_shared<std::string>();
        auto weak = std::make_shared<bool>(false);
        auto strong = std::make_shared<bool>(false);
        c->add_option("file", *file)->required();
        c->add_flag("--weak", *weak);
        c->add_flag("--strong", *strong);
        c->callback([&run, file, weak, strong] {
            run = [file, weak, strong] {
                if (*weak == *strong)
                    throw std::invalid_argument("choose exactly one of --weak / --strong");
                LinearBP bp = bp_from_json_file(*file);
                RoCheck rc = *weak ? is_weakly_read_once(bp) : is_strongly_read_once(bp);
                Outcome o;
                o.result["property"] = *weak ? "weakly-read-once" : "strongly-read-once";
                o.result["holds"] = rc.ok;
                if (!rc.ok) {
                    o.verdict = "FAIL";
                    o.witness = Json{{"node", rc.witness}};
                }
                return o;
            };
        });
    }
    {
        auto* c = bp_cmd->add_subcommand("make-full", "equivalent full program");
        auto file = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("--out", *out);
        c->callback([&run, file, out] {
            run = [file, out] {
                LinearBP bp = bp_from_json_file(*file);
                LinearBP full = make_full(bp);
                std::string text = bp_to_json(full);
                Outcome o;
                o.result["size_before"] = bp.size();
                o.result["size_after"] = full.size();
                o.result["bp"] = Json::parse(text);
                if (!out->empty()) write_file(*out, text);
                return o;
            };
        });
    }
    {
        auto* c = bp_cmd->add_subcommand("antichain", "maximum antichain size");
        auto file = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->callback([&run, file] {
            run = [file] {
                LinearBP bp = bp_from_json_file(*file);
                Outcome o;
                o.result["max_antichain"] = max_antichain(bp);
                o.result["size"] = bp.size();
                return o;
            };
        });
    }
    {
        auto* c = bp_cmd->add_subcommand("solves", "search-program correctness against a CNF");
        auto file = std::make_shared<std::string>();
        auto cnf = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("--cnf", *cnf)->required();
        c->callback([&run, &global, file, cnf] {
            run = [&global, file, cnf] {
                LinearBP bp = bp_from_json_file(*file);
                Cnf f = parse_dimacs_file(*cnf);
                SearchCheck sc = solves_search(bp, f, global.jobs);
                Outcome o;
                o.result["solves"] = sc.ok;
                if (!sc.ok) {
                    o.verdict = "FAIL";
                    o.witness = Json{{"input", to_hex(sc.counterexample, bp.n)}};
                }
                return o;
            };
        });
    }
    {
        auto* c = bp_cmd->add_subcommand("claim1",
                                         "wrong-input lower bound on the depth-(n-d) cut");
        auto file = std::make_shared<std::string>();
        auto args = std::make_shared<TableArgs>();
        args->add_flags(c, true);
        auto d = std::make_shared<int>(-1);
        auto eps = std::make_shared<std::string>();
        c->add_option("file", *file)->required();
        c->add_option("--d", *d)->required();
        c->add_option("--eps", *eps, "assumed extractor bias P/Q")->required();
        c->callback([&run, &global, file, args, d, eps] {
            run = [&global, file, args, d, eps] {
                LinearBP bp = bp_from_json_file(*file);
                TruthTable f = args->load();
                ClaimReport rep =
                    check_wrong_input_bound(bp, f, *d, parse_rational(*eps), global.jobs);
                Outcome o;
                o.result["depth"] = rep.depth;
                o.result["path_sum"] = rep.path_sum;
                o.result["expected_path_sum"] = rep.expected_path_sum;
                Json nodes = Json::array();
                int first_bad = -1;
                for (const auto& nr : rep.nodes) {
                    nodes.push_back(Json{{"node", nr.node},
                                         {"k", nr.meeting_paths},
                                         {"wrong", nr.wrong_inputs},
                                         {"ok", nr.bound_ok}});
                    if (!nr.bound_ok && first_bad < 0) first_bad = nr.node;
                }
                o.result["nodes"] = nodes;
                if (!rep.pass) {
                    o.verdict = "FAIL";
                    o.witness = first_bad >= 0 ? Json{{"node", first_bad}}
                                               : Json{{"reason", "path sum mismatch"}};
                }
                return o;
            };
        });
    }

    // -------------------------------------------------------------- reslin
    auto* rl = app.add_subcommand("reslin", "linear-clause resolution proofs");
    rl->require_subcommand(1);
    {
        auto* c = rl->add_subcommand("check", "verify a proof against a CNF");
        auto cnf = std::make_shared<std::string>();
        auto prf = std::make_shared<std::string>();
        auto refutation = std::make_shared<bool>(false);
        c->add_option("--cnf", *cnf)->required();
        c->add_option("--proof", *prf)->required();
        c->add_flag("--refutation", *refutation, "require the final line to be the empty clause");
        c->callback([&run, &global, cnf, prf, refutation] {
            run = [&global, cnf, prf, refutation] {
                Cnf f = parse_dimacs_file(*cnf);
                Proof proof = parse_proof_file(*prf, f.n);
                ProofCheckResult res = check_proof(f, proof, *refutation, global.jobs);
                Outcome o;
                o.result["lines"] = proof.lines.size();
                o.result["ok"] = res.ok;
                if (!res.ok) {
                    o.verdict = "FAIL";
                    o.witness = Json{{"line", res.line}, {"reason", res.reason}};
                }
                return o;
            };
        });
    }
    {
        auto* c = rl->add_subcommand("bp2proof", "extract a refutation from a search program");
        auto cnf = std::make_shared<std::string>();
        auto bpf = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        auto debug = std::make_shared<bool>(false);
        c->add_option("--cnf", *cnf)->required();
        c->add_option("--bp", *bpf)->required();
        c->add_option("--out", *out);
        c->add_flag("--debug-invariants", *debug, "check per-node clause invariants (n <= 10)");
        c->callback([&run, &global, cnf, bpf, out, debug] {
            run = [&global, cnf, bpf, out, debug] {
                Cnf f = parse_dimacs_file(*cnf);
                LinearBP bp = bp_from_json_file(*bpf);
                BpToProofOptions po;
                po.debug_invariants = *debug;
                po.jobs = global.jobs;
                Proof proof = bp_to_proof(f, bp, po);
                auto chk = check_proof(f, proof, true, global.jobs);
                if (!chk.ok) throw std::logic_error("generated proof failed its own check");
                std::string text = proof_to_text(proof);
                Outcome o;
                o.result["lines"] = proof.lines.size();
                o.result["bp_size"] = bp.size();
                o.result["proof"] = text;
                if (!out->empty()) write_file(*out, text);
                return o;
            };
        });
    }
    {
        auto* c = rl->add_subcommand("proof2bp", "search program from a refutation");
        auto cnf = std::make_shared<std::string>();
        auto prf = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        c->add_option("--cnf", *cnf)->required();
        c->add_option("--proof", *prf)->required();
        c->add_option("--out", *out);
        c->callback([&run, &global, cnf, prf, out] {
            run = [&global, cnf, prf, out] {
                Cnf f = parse_dimacs_file(*cnf);
                Proof proof = parse_proof_file(*prf, f.n);
                LinearBP bp = proof_to_bp(f, proof);
                auto sc = solves_search(bp, f, global.jobs);
                if (!sc.ok) throw std::logic_error("translated program fails the search problem");
                std::string text = bp_to_json(bp);
                Outcome o;
                o.result["nodes"] = bp.size();
                o.result["lines"] = proof.lines.size();
                o.result["bp"] = Json::parse(text);
                if (!out->empty()) write_file(*out, text);
                return o;
            };
        });
    }
    {
        auto* c = rl->add_subcommand("stats", "proof statistics");
        auto prf = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto cnf = std::make_shared<std::string>();
        c->add_option("--proof", *prf)->required();
        c->add_option("--n", *n, "variable count (or give --cnf)");
        c->add_option("--cnf", *cnf);
        c->callback([&run, prf, n, cnf] {
            run = [prf, n, cnf] {
                int vars = *n;
                if (!cnf->empty()) vars = parse_dimacs_file(*cnf).n;
                if (vars <= 0) throw std::invalid_argument("need --n or --cnf");
                Proof p = parse_proof_file(*prf, vars);
                ProofStats st = proof_stats(p);
                Outcome o;
                o.result["lines"] = st.lines;
                o.result["axioms"] = st.axioms;
                o.result["weakenings"] = st.weakenings;
                o.result["resolutions"] = st.resolutions;
                o.result["max_width"] = st.max_width;
                o.result["final_empty"] = st.final_empty;
                return o;
            };
        });
    }

    // Let --seed/--budget/--jobs appear anywhere on the command line.
    auto enable_fallthrough = [](auto&& self, CLI::App* a) -> void {
        a->fallthrough(true);
        for (CLI::App* sub : a->get_subcommands({})) self(self, sub);
    };
    enable_fallthrough(enable_fallthrough, &app);

    auto started = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints usage/help
        return rc == 0 ? 0 : 2;
    }

    Json report;
    report["command"] = command_echo(argc, argv);
    int exit_code = 0;
    try {
        if (!run) throw std::invalid_argument("no verb selected");
        Outcome o = run();
        report["verdict"] = o.verdict;
        report["result"] = o.result;
        report["witness"] = o.witness;
        exit_code = o.verdict == "PASS" ? 0 : 1;
    } catch (const BudgetError& e) {
        report["verdict"] = "ERROR";
        report["result"] = Json{{"error", e.what()}};
        report["witness"] = nullptr;
        exit_code = 2;
    } catch (const std::exception& e) {
        report["verdict"] = "ERROR";
        report["result"] = Json{{"error", e.what()}};
        report["witness"] = nullptr;
        exit_code = 2;
    }
    report["seed"] = global.seed ? Json(*global.seed) : Json(nullptr);
    report["budget"] = global.budget;
    auto elapsed = std::chrono::steady_clock::now() - started;
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::cout << report.dump(2) << std::endl;
    return exit_code;
}
