// ckfree: generate the Moon-Moser and extremal C_k-free graphs, certify
// them, and tabulate the edge bounds.
//
// Exit codes:
//   0  success (for verify: conclusive and C_k-free)
//   1  verify found a C_k, or lemma-check saw a mismatch
//   2  usage or domain error
//   3  parse error in an input file
//   4  search budget exhausted before a conclusive answer
//   5  any other failure (I/O, resource limits, internal checks)

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ckfree/ckfree.hpp"

using namespace ckfree;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerdictFalse = 1, kUsage = 2, kParse = 3, kInconclusive = 4, kOther = 5 };

struct IoError : Error {
    using Error::Error;
};

SearchBudget default_budget() {
    SearchBudget b;
    if (const char* s = std::getenv("CKFREE_BUDGET_NODES")) b.node_limit = std::stoull(s);
    if (const char* s = std::getenv("CKFREE_BUDGET_SECONDS")) b.time_limit = std::stod(s);
    return b;
}

// Writes to `path`, or stdout when it is empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    fn(out);
    if (!out) throw IoError("write to " + path + " failed");
}

std::string resolve_format(const std::string& requested, const std::string& path) {
    if (requested != "auto") return requested;
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) return "g6";
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".dot") == 0) return "dot";
    return "planar";
}

void emit(const EmbeddedGraph& g, const LabelSet& labels, const std::string& format, const std::string& name,
          std::ostream& out) {
    if (format == "g6")
        write_graph6(g.abstract(), out);
    else if (format == "dot")
        write_dot(g.abstract(), labels, out, name);
    else
        write_planar(g, labels, out);
}

struct LoadedGraph {
    Graph graph;
    LabelSet labels;
};

LoadedGraph load(const std::string& path, const std::string& requested) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    const std::string format = resolve_format(requested, path);
    if (format == "g6") return {read_graph6(in), {}};
    if (format == "planar") {
        auto rec = read_planar(in);
        return {rec.graph.abstract(), std::move(rec.labels)};
    }
    throw DomainError("cannot read format '" + format + "'");
}

std::string join(const std::vector<VertexId>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
}

json report_json(const FreenessReport& r) {
    json j{{"mode", to_string(r.mode)},
           {"k", r.k},
           {"circumference", r.circumference},
           {"verdict", r.verdict},
           {"conclusive", r.conclusive},
           {"lemma_backed", r.lemma_backed},
           {"nodes", r.nodes}};
    j["witness"] = r.witness ? json(r.witness->vertices) : json(nullptr);
    if (r.mode == CertifyMode::structural) {
        j["blocks"] = r.blocks;
        j["two_block_length"] = r.two_block_length;
        json groups = json::array();
        for (const auto& g : r.groups)
            groups.push_back({{"first_block", g.first_block},
                              {"multiplicity", g.multiplicity},
                              {"order", g.order},
                              {"circumference", g.circumference},
                              {"xy_path", g.xy_path ? json(*g.xy_path) : json(nullptr)},
                              {"exhaustive", g.exhaustive},
                              {"lemma_backed", g.lemma_backed}});
        j["groups"] = groups;
    }
    return j;
}

void print_report(const FreenessReport& r, std::ostream& out) {
    out << "mode: " << to_string(r.mode) << '\n';
    if (r.mode == CertifyMode::structural) {
        out << "blocks: " << r.blocks << " (" << r.groups.size() << " distinct)\n";
        for (const auto& g : r.groups)
            out << "  block " << g.first_block + 1 << " x" << g.multiplicity << ": order " << g.order
                << ", circumference " << g.circumference << ", x-y path "
                << (g.xy_path ? std::to_string(*g.xy_path) : "-") << (g.lemma_backed ? " (lemma)" : "")
                << (g.exhaustive ? "" : " (budget exhausted)") << '\n';
        out << "two-block cycle: " << r.two_block_length << '\n';
    }
    out << "circumference: " << r.circumference << '\n';
    if (r.witness) out << "witness: " << join(r.witness->vertices) << '\n';
    out << "k: " << r.k << '\n';
    out << "verdict: " << (r.conclusive ? (r.verdict ? "C_k-free" : "contains C_k") : "inconclusive") << '\n';
    out << "nodes: " << r.nodes << '\n';
}

int verdict_code(const FreenessReport& r) {
    if (!r.conclusive) return kInconclusive;
    return r.verdict ? kOk : kVerdictFalse;
}

json plan_json(const BlockPlan& p) {
    return {{"n", p.n},
            {"k", p.k},
            {"i", p.level},
            {"s", p.blocks},
            {"block_order", p.block_order()},
            {"last_block_order", p.last_block_order},
            {"edges", exact_edge_count(p.n, p.k)}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar C_k-free extremal constructions: generation, certification, bounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ckfree 1.0");

    SearchBudget budget = default_budget();
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--nodes", budget.node_limit, "search node limit (env CKFREE_BUDGET_NODES)")
            ->capture_default_str();
        c->add_option("--seconds", budget.time_limit, "search time limit (env CKFREE_BUDGET_SECONDS)")
            ->capture_default_str();
    };

    std::string out_path, format = "auto";
    const std::vector<std::string> out_formats{"auto", "planar", "g6", "dot"};

    // gen-t
    unsigned level = 0;
    auto* gen_t = app.add_subcommand("gen-t", "emit the Moon-Moser triangulation T_i");
    gen_t->add_option("-i,--level", level, "level i >= 1")->required();
    gen_t->add_option("-o,--out", out_path, "output file (default stdout)");
    gen_t->add_option("-f,--format", format, "output format")->check(CLI::IsMember(out_formats))->capture_default_str();

    // gen-h
    std::uint64_t n = 0, k = 0;
    std::string plan_path;
    auto* gen_h = app.add_subcommand("gen-h", "emit the extremal graph H(n, k) and its block plan");
    gen_h->add_option("-n", n, "number of vertices")->required();
    gen_h->add_option("-k", k, "forbidden cycle length, k >= 7")->required();
    gen_h->add_option("-o,--out", out_path, "output file (default stdout)");
    gen_h->add_option("-f,--format", format, "output format")->check(CLI::IsMember(out_formats))->capture_default_str();
    gen_h->add_option("--plan", plan_path, "block plan JSON (default <out>.plan.json, or stderr)");

    // verify
    std::string input, mode = "structural", in_format = "auto";
    std::vector<VertexId> hubs;
    bool lemma = false, as_json = false;
    const std::vector<std::string> in_formats{"auto", "planar", "g6"};
    auto* verify = app.add_subcommand("verify", "certify that a graph has no cycle of length k");
    auto* v_input = verify->add_option("--input", input, "graph file (.g6 or planar code)")->check(CLI::ExistingFile);
    auto* v_n = verify->add_option("-n", n, "build H(n, k) instead of reading a file");
    v_input->excludes(v_n);
    verify->add_option("-k", k, "cycle length")->required();
    verify->add_option("--mode", mode, "structural, brute or both")
        ->check(CLI::IsMember({"structural", "brute", "both"}))
        ->capture_default_str();
    verify->add_option("--format", in_format, "input format")->check(CLI::IsMember(in_formats))->capture_default_str();
    verify->add_option("--hubs", hubs, "the 2-cut x y for structural mode on a file (default: labels x, y)")
        ->expected(2)
        ->delimiter(',');
    verify->add_flag("--lemma", lemma, "use the closed-form block values when a block search runs out of budget");
    verify->add_flag("--json", as_json, "machine-readable report");
    add_budget(verify);

    // circumference
    auto* circ = app.add_subcommand("circumference", "longest cycle of a graph, with a certificate");
    circ->add_option("--input", input, "graph file (.g6 or planar code)")->required()->check(CLI::ExistingFile);
    circ->add_option("--format", in_format, "input format")->check(CLI::IsMember(in_formats))->capture_default_str();
    circ->add_flag("--json", as_json, "machine-readable output");
    add_budget(circ);

    // bounds
    std::uint64_t k_min = 7, k_max = 7;
    std::vector<std::uint64_t> ns;
    auto* bounds = app.add_subcommand("bounds", "tabulate exact edge counts against the closed-form bounds");
    bounds->add_option("--k-min", k_min, "smallest k (>= 7)")->required();
    bounds->add_option("--k-max", k_max, "largest k")->required();
    bounds->add_option("-n", ns, "vertex counts, comma separated")->required()->delimiter(',');
    bounds->add_option("-o,--out", out_path, "CSV file (default stdout)");

    // lemma-check
    unsigned i_min = 2, i_max = 3;
    auto* lemma_check = app.add_subcommand("lemma-check", "check the block circumference and x-y path values");
    lemma_check->add_option("--i-min", i_min, "smallest level (>= 2)")->capture_default_str();
    lemma_check->add_option("--i-max", i_max, "largest level")->capture_default_str();
    add_budget(lemma_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen_t) {
            const MoonMoserGraph t = moon_moser(level);
            with_output(out_path, [&](std::ostream& os) {
                emit(t.graph, moon_moser_labels(t), resolve_format(format, out_path), "T" + std::to_string(level), os);
            });
            return kOk;
        }

        if (*gen_h) {
            const ExtremalConstruction h = build_construction(n, k);
            with_output(out_path, [&](std::ostream& os) {
                emit(h.graph, construction_labels(h), resolve_format(format, out_path),
                     "H_" + std::to_string(n) + "_" + std::to_string(k), os);
            });
            const std::string plan = plan_json(h.plan).dump(2) + "\n";
            if (plan_path.empty() && !out_path.empty() && out_path != "-") plan_path = out_path + ".plan.json";
            if (plan_path.empty())
                std::cerr << plan;
            else
                with_output(plan_path, [&](std::ostream& os) { os << plan; });
            return kOk;
        }

        if (*verify) {
            if (input.empty() && v_n->count() == 0) throw DomainError("verify needs --input or -n");
            if (k < 3) throw DomainError("k must be at least 3");
            CertifyOptions opt;
            opt.budget = budget;
            opt.allow_lemma = lemma;

            Graph g;
            std::optional<ExtremalConstruction> h;
            VertexId x = 0, y = 1;
            if (!input.empty()) {
                LoadedGraph lg = load(input, in_format);
                g = std::move(lg.graph);
                if (hubs.size() == 2) {
                    x = hubs[0];
                    y = hubs[1];
                } else if (mode != "brute") {
                    auto lx = find_label(lg.labels, "x"), ly = find_label(lg.labels, "y");
                    if (!lx || !ly) throw DomainError("structural mode on a file needs --hubs or x, y labels");
                    x = *lx;
                    y = *ly;
                }
                if (lemma) throw DomainError("--lemma applies only to H(n, k) built with -n");
            } else {
                h = build_construction(n, k);
                g = h->graph.abstract();
                opt.level = h->plan.level;
            }

            std::vector<FreenessReport> reports;
            if (mode != "brute")
                reports.push_back(h ? certify_ck_free_structural(*h, opt) : certify_two_cut(g, x, y, k, opt));
            if (mode != "structural") reports.push_back(certify_brute(g, k, opt.budget));

            int code = kOk;
            for (const auto& r : reports) code = std::max(code, verdict_code(r));
            if (reports.size() == 2 && reports[0].conclusive && reports[1].conclusive &&
                (reports[0].circumference != reports[1].circumference || reports[0].verdict != reports[1].verdict))
                throw StructuralError("structural and brute-force results disagree");

            if (as_json) {
                json j = json::array();
                for (const auto& r : reports) j.push_back(report_json(r));
                std::cout << (reports.size() == 1 ? j[0] : j).dump(2) << '\n';
            } else {
                for (std::size_t t = 0; t < reports.size(); ++t) {
                    if (t) std::cout << '\n';
                    print_report(reports[t], std::cout);
                }
            }
            // Inconclusive outranks a found C_k only when nothing was found.
            for (const auto& r : reports)
                if (r.conclusive && !r.verdict) code = kVerdictFalse;
            return code;
        }

        if (*circ) {
            const LoadedGraph lg = load(input, in_format);
            const auto r = longest_cycle(lg.graph, budget);
            const std::size_t len = r.best ? r.best->length() : 0;
            if (as_json) {
                json j{{"circumference", len}, {"exhaustive", r.exhaustive}, {"nodes", r.nodes}};
                j["certificate"] = r.best ? json(r.best->vertices) : json(nullptr);
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "circumference: " << len << (r.exhaustive ? "" : " (lower bound; budget exhausted)")
                          << '\n';
                std::cout << "certificate: " << (r.best ? join(r.best->vertices) : "-") << '\n';
                std::cout << "nodes: " << r.nodes << '\n';
            }
            return r.exhaustive ? kOk : kInconclusive;
        }

        if (*bounds) {
            if (k_min < 7 || k_max < k_min) throw DomainError("need 7 <= k-min <= k-max");
            const auto rows = bounds_table(k_min, k_max, ns);
            with_output(out_path, [&](std::ostream& os) { write_bounds_csv(rows, os); });
            return kOk;
        }

        if (*lemma_check) {
            if (i_min < 2 || i_max < i_min) throw DomainError("need 2 <= i-min <= i-max");
            bool all = true, complete = true;
            std::cout << "i,order,circumference,expected,path,expected,status\n";
            for (unsigned i = i_min; i <= i_max; ++i) {
                const MoonMoserGraph t = moon_moser(i);
                const Graph g = t.graph.abstract();
                const auto c = longest_cycle(g, budget);
                const auto p = longest_path_between(g.without_edge(t.x, t.y), t.x, t.y, budget);
                const std::size_t want_c = std::size_t{7} << (i - 2), want_p = std::size_t{3} << (i - 1);
                const std::size_t got_c = c.best ? c.best->length() : 0, got_p = p.best ? p.best->length() : 0;
                std::string status;
                if (!c.exhaustive || !p.exhaustive) {
                    status = "INCONCLUSIVE";
                    complete = false;
                } else if (got_c == want_c && got_p == want_p) {
                    status = "PASS";
                } else {
                    status = "FAIL";
                    all = false;
                }
                std::cout << i << ',' << g.order() << ',' << got_c << ',' << want_c << ',' << got_p << ','
                          << want_p << ',' << status << '\n';
            }
            return !all ? kVerdictFalse : complete ? kOk : kInconclusive;
        }
    } catch (const ParseError& e) {
        std::cerr << "ckfree: parse error: " << e.what() << '\n';
        return kParse;
    } catch (const DomainError& e) {
        std::cerr << "ckfree: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractError& e) {
        std::cerr << "ckfree: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "ckfree: " << e.what() << '\n';
        return kOther;
    }
    return kOther;
}
