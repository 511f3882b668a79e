#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eulerext/arclist_io.hpp"
#include "eulerext/checks.hpp"
#include "eulerext/cycles.hpp"
#include "eulerext/digraph.hpp"
#include "eulerext/fas.hpp"
#include "eulerext/generators.hpp"
#include "eulerext/rational.hpp"
#include "eulerext/report.hpp"

namespace {

using namespace eulerext;
using nlohmann::json;

// Exit codes: 0 all pass, 1 a check FAILed (or SKIPPED under --strict),
// 2 usage or I/O trouble. Runners return 0/1; exceptions become 2 in main.

int resolve_cap(int flag_cap) {
    if (flag_cap > 0) return flag_cap;
    if (const char* env = std::getenv("EULER_EXTREMAL_CAP")) {
        const std::string text(env);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || value < 1 || value > kHardExactBetaCap)
            throw std::invalid_argument("EULER_EXTREMAL_CAP must be an integer in [1, " +
                                        std::to_string(kHardExactBetaCap) + "], got '" + text +
                                        "'");
        return value;
    }
    return kDefaultExactBetaCap;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_graph(const Digraph& g, const std::string& out_path) {
    if (out_path.empty())
        std::cout << to_arclist_string(g);
    else
        write_arclist_file(out_path, g);
}

std::string join_ints(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

int run_fas(const std::string& in_path, bool as_json, int cap_flag) {
    const Digraph g = read_arclist_file(in_path);
    const int cap = resolve_cap(cap_flag);
    const FasResult fas = exact_beta(g, cap);
    const Rational bound = beta_lower_bound(g.vertex_count(), g.arc_count());
    const bool tight = Rational(fas.beta) == bound;
    if (as_json) {
        json j{{"beta", fas.beta},
               {"witness", fas.witness.sequence()},
               {"bound", json(bound)},
               {"verdict", tight ? "TIGHT" : "SLACK"}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "beta=" << fas.beta << "\n";
        std::cout << "witness=" << join_ints(fas.witness.sequence()) << "\n";
        std::cout << "bound=" << bound.to_string() << " " << (tight ? "TIGHT" : "SLACK") << "\n";
    }
    return 0;
}

int run_girth(const std::string& in_path, bool as_json) {
    const Digraph g = read_arclist_file(in_path);
    const auto result = girth(g);
    if (as_json) {
        json j;
        if (result) {
            j["girth"] = result->length;
            j["witness"] = result->witness.vertices;
        } else {
            j["girth"] = nullptr;
        }
        std::cout << j.dump() << "\n";
    } else if (result) {
        std::cout << "girth=" << result->length << "\n";
        std::cout << "witness=" << cycle_to_string(result->witness) << "\n";
    } else {
        std::cout << "acyclic\n";
    }
    return 0;
}

int run_subgraph(const std::string& in_path, const std::string& out_path, bool as_json) {
    const Digraph g = read_arclist_file(in_path);
    const SubgraphResult sub = min_degree_eulerian_subgraph(g);
    long long min_positive = 0;
    for (int v = 0; v < sub.subgraph.vertex_count(); ++v)
        if (!sub.subgraph.is_isolated(v)) {
            const long long d = sub.subgraph.out_degree(v);
            if (min_positive == 0 || d < min_positive) min_positive = d;
        }
    if (!out_path.empty()) write_arclist_file(out_path, sub.subgraph);
    if (as_json) {
        json j{{"kept", sub.kept.cycles.size()},
               {"peeled", sub.initial_cycle_count},
               {"threshold", sub.degree_threshold},
               {"min_out_degree", min_positive},
               {"arcs", sub.subgraph.arc_count()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "kept=" << sub.kept.cycles.size() << " of=" << sub.initial_cycle_count
                  << " threshold=" << sub.degree_threshold << "\n";
        std::cout << "min_out_degree=" << min_positive << "\n";
        std::cout << "arcs=" << sub.subgraph.arc_count() << "\n";
    }
    return 0;
}

int run_longcycle(const std::string& in_path, bool as_json) {
    const Digraph g = read_arclist_file(in_path);
    const Cycle c = long_cycle_combined(g);
    const long long n = g.vertex_count(), m = g.arc_count();
    const Rational bound =
        Rational(1) + std::max(Rational(floor_sqrt_ratio(m, n)),
                               Rational(m, 24 * n) * Rational(m, n) / Rational(n));
    if (as_json) {
        json j{{"length", c.length()}, {"cycle", c.vertices}, {"bound", json(bound)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "length=" << c.length() << "\n";
        std::cout << "cycle=" << cycle_to_string(c) << "\n";
        std::cout << "bound=" << bound.to_string() << "\n";
    }
    return 0;
}

int run_dfs(const std::string& in_path, int root, const std::string& policy,
            const std::string& labels_path, bool as_json) {
    const Digraph g = read_arclist_file(in_path);
    DfsTree tree = [&] {
        if (policy == "prop9") {
            if (labels_path.empty())
                throw std::invalid_argument("--policy prop9 requires --labels <file>");
            std::ifstream in(labels_path);
            if (!in) throw std::runtime_error("cannot open labels file: " + labels_path);
            const json j = json::parse(in);
            const auto roles = j.at("roles").get<std::vector<std::string>>();
            return dfs_tree(g, root, role_guided_priority(g, roles));
        }
        return dfs_tree(g, root);
    }();
    if (as_json) {
        json j{{"depth", tree.depth()},
               {"roots", tree.roots},
               {"visit_order", tree.visit_order},
               {"parent", tree.parent}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "depth=" << tree.depth() << "\n";
        std::cout << "roots=" << tree.roots.size() << "\n";
    }
    return 0;
}

int run_verify(const std::string& in_path, std::vector<std::string> checks, bool strict,
               int cap_flag, const std::string& out_path) {
    const auto& canonical = verify_check_names();
    if (checks.empty()) checks = canonical;
    for (const auto& name : checks)
        if (std::find(canonical.begin(), canonical.end(), name) == canonical.end())
            throw std::invalid_argument("unknown check '" + name + "'");
    // Fixed output order regardless of how the request was phrased.
    std::vector<std::string> ordered;
    for (const auto& name : canonical)
        if (std::find(checks.begin(), checks.end(), name) != checks.end())
            ordered.push_back(name);

    const Digraph g = read_arclist_file(in_path);
    const int cap = resolve_cap(cap_flag);

    std::string lines;
    bool any_fail = false, any_skip = false;
    for (const auto& name : ordered) {
        const BoundReport r = run_verify_check(name, g, cap);
        any_fail = any_fail || r.verdict == Verdict::FAIL;
        any_skip = any_skip || r.verdict == Verdict::SKIPPED;
        lines += bound_report_to_line(r);
        lines += '\n';
    }
    if (out_path.empty())
        std::cout << lines;
    else
        write_text_file(out_path, lines);
    if (any_fail) return 1;
    if (any_skip && strict) return 1;
    return 0;
}

struct ReportRow {
    long long pass = 0, fail = 0, skipped = 0;
    bool has_slack = false;
    Rational worst_slack;
    long long time_ms = 0;
};

int run_report(const std::string& dir, bool as_json) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    try {
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
                files.push_back(entry.path());
    } catch (const fs::filesystem_error& e) {
        throw std::runtime_error(std::string("cannot read directory: ") + e.what());
    }
    std::sort(files.begin(), files.end());

    std::map<std::string, ReportRow> rows;  // keyed (and printed) by quantity
    for (const auto& file : files) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open: " + file.string());
        std::string line;
        long long line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            BoundReport r;
            try {
                r = bound_report_from_line(line);
            } catch (const std::exception& e) {
                throw std::runtime_error(file.string() + ":" + std::to_string(line_no) +
                                         ": bad report line: " + e.what());
            }
            ReportRow& row = rows[r.quantity];
            row.time_ms += r.time_ms;
            if (r.verdict == Verdict::PASS) ++row.pass;
            if (r.verdict == Verdict::FAIL) ++row.fail;
            if (r.verdict == Verdict::SKIPPED) {
                ++row.skipped;
                continue;  // placeholder numbers carry no slack information
            }
            const Rational slack = report_slack(r);
            if (!row.has_slack || slack < row.worst_slack) {
                row.has_slack = true;
                row.worst_slack = slack;
            }
        }
    }

    long long total_ms = 0;
    std::vector<std::string> failing;
    for (const auto& [quantity, row] : rows) {
        total_ms += row.time_ms;
        if (row.fail > 0) failing.push_back(quantity);
    }

    if (as_json) {
        json out;
        out["rows"] = json::array();
        for (const auto& [quantity, row] : rows) {
            json r{{"quantity", quantity}, {"pass", row.pass},       {"fail", row.fail},
                   {"skipped", row.skipped}, {"time_ms", row.time_ms}};
            r["worst_slack"] = row.has_slack ? json(row.worst_slack) : json(nullptr);
            out["rows"].push_back(std::move(r));
        }
        out["total_time_ms"] = total_ms;
        out["failing"] = failing;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << std::left << std::setw(24) << "quantity" << std::right << std::setw(7)
                  << "pass" << std::setw(7) << "fail" << std::setw(7) << "skip" << std::setw(16)
                  << "worst_slack" << std::setw(10) << "time_ms" << "\n";
        for (const auto& [quantity, row] : rows) {
            std::cout << std::left << std::setw(24) << quantity << std::right << std::setw(7)
                      << row.pass << std::setw(7) << row.fail << std::setw(7) << row.skipped
                      << std::setw(16) << (row.has_slack ? row.worst_slack.to_string() : "-")
                      << std::setw(10) << row.time_ms << "\n";
        }
        std::cout << "total_time_ms=" << total_ms << "\n";
        if (!failing.empty()) {
            std::cout << "failing:";
            for (const auto& q : failing) std::cout << " " << q;
            std::cout << "\n";
        }
    }
    return failing.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eulerian digraph bounds workbench: generators, exact feedback arc sets, "
                 "cycle structure, and machine-checkable bound reports"};
    app.require_subcommand(1);
    int rc = 0;

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "write a graph from one of the built-in families");
    gen->require_subcommand(1);

    struct {
        int n = 0, t = 0, s = 0, delta = 0;
        long long m = 0;
        std::uint64_t seed = 0;
        std::string out, in, labels;
    } G;

    auto* gen_cayley = gen->add_subcommand("cayley", "circulant: arcs (i, i+j mod n), j = 1..t");
    gen_cayley->add_option("--n", G.n, "vertex count")->required();
    gen_cayley->add_option("--t", G.t, "out-degree")->required();
    gen_cayley->add_option("--out", G.out, "output arc-list path (default: stdout)");
    gen_cayley->callback([&] {
        emit_graph(cayley_circulant(G.n, G.t), G.out);
        rc = 0;
    });

    auto* gen_hst = gen->add_subcommand("hst", "layered gadget with s hub groups and t layers");
    gen_hst->add_option("--s", G.s, "group size / hub group count")->required();
    gen_hst->add_option("--t", G.t, "layer count")->required();
    gen_hst->add_option("--out", G.out, "output arc-list path (default: stdout)");
    gen_hst->callback([&] {
        emit_graph(gadget_hst(G.s, G.t), G.out);
        rc = 0;
    });

    auto* gen_blowup = gen->add_subcommand(
        "blowup", "replace each vertex by delta copies and each arc by a delta x delta bundle");
    gen_blowup->add_option("--in", G.in, "base graph arc-list (alternative to --s/--t)");
    gen_blowup->add_option("--s", G.s, "base gadget group size");
    gen_blowup->add_option("--t", G.t, "base gadget layer count");
    gen_blowup->add_option("--delta", G.delta, "copies per vertex")->required();
    gen_blowup->add_option("--out", G.out, "output arc-list path (default: stdout)");
    gen_blowup->callback([&] {
        Digraph base = [&] {
            if (!G.in.empty()) {
                if (G.s != 0 || G.t != 0)
                    throw std::invalid_argument("blowup: give either --in or --s/--t, not both");
                return read_arclist_file(G.in);
            }
            if (G.s == 0 || G.t == 0)
                throw std::invalid_argument("blowup: need --in or both --s and --t");
            return gadget_hst(G.s, G.t);
        }();
        emit_graph(blowup(BlowupSpec{std::move(base), G.delta}), G.out);
        rc = 0;
    });

    auto* gen_cx = gen->add_subcommand(
        "dfs-cx", "layered hub graph whose guided DFS tree has depth 4; writes role labels too");
    gen_cx->add_option("--t", G.t, "layer width parameter")->required();
    gen_cx->add_option("--out", G.out, "output arc-list path")->required();
    gen_cx->add_option("--labels", G.labels, "role-label JSON path (default: <out>.labels.json)");
    gen_cx->callback([&] {
        const DfsCounterexample cx = dfs_counterexample(G.t);
        write_arclist_file(G.out, cx.graph);
        const std::string labels_path = G.labels.empty() ? G.out + ".labels.json" : G.labels;
        json j{{"t", cx.t}, {"roles", cx.roles}};
        write_text_file(labels_path, j.dump(2) + "\n");
        rc = 0;
    });

    auto* gen_random = gen->add_subcommand(
        "random", "random Eulerian graph: superposed seeded random cycles, deterministic");
    gen_random->add_option("--n", G.n, "vertex count")->required();
    gen_random->add_option("--m", G.m, "target arc count")->required();
    gen_random->add_option("--seed", G.seed, "PRNG seed (required for reproducibility)")
        ->required();
    gen_random->add_option("--out", G.out, "output arc-list path (default: stdout)");
    gen_random->callback([&] {
        emit_graph(random_eulerian(G.n, G.m, G.seed), G.out);
        rc = 0;
    });

    // ---- analyses ----
    std::string in_path, out_path, labels_path, policy = "default";
    std::vector<std::string> checks;
    bool as_json = false, strict = false;
    int cap_flag = 0, root = 0;

    auto* fas_cmd = app.add_subcommand("fas", "exact minimum feedback arc set and lower bound");
    fas_cmd->add_option("input", in_path, "arc-list file")->required();
    fas_cmd->add_flag("--json", as_json, "emit one JSON object");
    fas_cmd->add_option("--cap", cap_flag, "exact-solver vertex cap")
        ->check(CLI::Range(1, kHardExactBetaCap));
    fas_cmd->callback([&] { rc = run_fas(in_path, as_json, cap_flag); });

    auto* girth_cmd = app.add_subcommand("girth", "shortest directed cycle");
    girth_cmd->add_option("input", in_path, "arc-list file")->required();
    girth_cmd->add_flag("--json", as_json, "emit one JSON object");
    girth_cmd->callback([&] { rc = run_girth(in_path, as_json); });

    auto* sub_cmd = app.add_subcommand(
        "subgraph", "extract the high-min-degree Eulerian subgraph via short-cycle peeling");
    sub_cmd->add_option("input", in_path, "arc-list file")->required();
    sub_cmd->add_option("--out", out_path, "write the subgraph's arc list here");
    sub_cmd->add_flag("--json", as_json, "emit one JSON object");
    sub_cmd->callback([&] { rc = run_subgraph(in_path, out_path, as_json); });

    auto* long_cmd = app.add_subcommand("longcycle", "longest cycle the two bound routes find");
    long_cmd->add_option("input", in_path, "arc-list file")->required();
    long_cmd->add_flag("--json", as_json, "emit one JSON object");
    long_cmd->callback([&] { rc = run_longcycle(in_path, as_json); });

    auto* dfs_cmd = app.add_subcommand("dfs", "depth-first search forest and its depth");
    dfs_cmd->add_option("input", in_path, "arc-list file")->required();
    dfs_cmd->add_option("--root", root, "starting vertex")->required();
    dfs_cmd->add_option("--policy", policy, "neighbor priority: default | prop9")
        ->check(CLI::IsMember({"default", "prop9"}));
    dfs_cmd->add_option("--labels", labels_path, "role-label JSON (required for prop9)");
    dfs_cmd->add_flag("--json", as_json, "emit one JSON object");
    dfs_cmd->callback([&] { rc = run_dfs(in_path, root, policy, labels_path, as_json); });

    auto* verify_cmd = app.add_subcommand(
        "verify", "run bound checks against one graph; one JSON report line per check");
    verify_cmd->add_option("input", in_path, "arc-list file")->required();
    verify_cmd
        ->add_option("--checks", checks,
                     "subset of thm1,prop2,cor3,thm4,prop5,lemma-cut,fmin (default: all)")
        ->delimiter(',');
    verify_cmd->add_flag("--strict", strict, "treat SKIPPED as failure in the exit code");
    verify_cmd->add_option("--cap", cap_flag, "exact-solver vertex cap")
        ->check(CLI::Range(1, kHardExactBetaCap));
    verify_cmd->add_option("--out", out_path, "write report lines here instead of stdout");
    verify_cmd->callback([&] { rc = run_verify(in_path, checks, strict, cap_flag, out_path); });

    auto* report_cmd =
        app.add_subcommand("report", "aggregate a directory of .jsonl report files");
    report_cmd->add_option("dir", in_path, "directory of report files")->required();
    report_cmd->add_flag("--json", as_json, "emit one JSON object");
    report_cmd->callback([&] { rc = run_report(in_path, as_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
