#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eulerext/arclist_io.hpp"
#include "eulerext/generators.hpp"
#include "eulerext/report.hpp"
#include "test_oracles.hpp"

using namespace eulerext;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "eulerext-cli-tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

struct RunResult {
    int code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int seq = 0;
    const fs::path capture = scratch_dir() / ("capture" + std::to_string(seq++) + ".txt");
    std::string cmd = env_prefix.empty() ? std::string() : env_prefix + " ";
    cmd += std::string(EULEREXT_CLI_PATH) + " " + args + " >" + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(status);
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

fs::path write_graph(const std::string& name, const Digraph& g) {
    const fs::path p = scratch_dir() / name;
    write_arclist_file(p.string(), g);
    return p;
}

}  // namespace

TEST_CASE("cli: generate writes canonical arc lists") {
    const auto circ = run_cli("generate cayley --n 10 --t 2");
    REQUIRE(circ.code == 0);
    CHECK(circ.output.rfind("10 20\n", 0) == 0);
    std::istringstream parse_back(circ.output);
    CHECK(read_arclist(parse_back) == cayley_circulant(10, 2));

    const auto gadget = run_cli("generate hst --s 3 --t 2");
    REQUIRE(gadget.code == 0);
    CHECK(gadget.output.rfind("15 27\n", 0) == 0);
    std::istringstream parse_gadget(gadget.output);
    CHECK(read_arclist(parse_gadget) == gadget_hst(3, 2));
}

TEST_CASE("cli: random generation is reproducible byte for byte") {
    const fs::path a = scratch_dir() / "rand_a.txt";
    const fs::path b = scratch_dir() / "rand_b.txt";
    REQUIRE(run_cli("generate random --n 8 --m 20 --seed 7 --out " + a.string()).code == 0);
    REQUIRE(run_cli("generate random --n 8 --m 20 --seed 7 --out " + b.string()).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(is_eulerian(read_arclist_file(a.string())));
}

TEST_CASE("cli: blowup accepts gadget parameters or an input file, not both") {
    const fs::path out = scratch_dir() / "blow.txt";
    REQUIRE(run_cli("generate blowup --s 2 --t 4 --delta 3 --out " + out.string()).code == 0);
    CHECK(read_arclist_file(out.string()) == blowup({gadget_hst(2, 4), 3}));

    const fs::path base = write_graph("blow_base.txt", testoracle::directed_cycle(3));
    const auto from_file =
        run_cli("generate blowup --in " + base.string() + " --delta 2 --out " + out.string());
    REQUIRE(from_file.code == 0);
    CHECK(read_arclist_file(out.string()) == blowup({testoracle::directed_cycle(3), 2}));

    CHECK(run_cli("generate blowup --in " + base.string() + " --s 2 --t 4 --delta 2").code == 2);
    CHECK(run_cli("generate blowup --delta 2").code == 2);
}

TEST_CASE("cli: exact feedback arc set with tightness marker") {
    const fs::path g42 = write_graph("g42.txt", cayley_circulant(4, 2));
    const auto text = run_cli("fas " + g42.string());
    REQUIRE(text.code == 0);
    CHECK(text.output.find("beta=3\n") != std::string::npos);
    CHECK(text.output.find("TIGHT") != std::string::npos);

    const auto as_json = run_cli("fas " + g42.string() + " --json");
    REQUIRE(as_json.code == 0);
    const auto j = nlohmann::json::parse(as_json.output);
    CHECK(j.at("beta").get<long long>() == 3);
    CHECK(j.at("verdict").get<std::string>() == "TIGHT");
}

TEST_CASE("cli: girth and longcycle and subgraph text output") {
    const fs::path g42 = write_graph("g42b.txt", cayley_circulant(4, 2));
    const auto girth_out = run_cli("girth " + g42.string());
    REQUIRE(girth_out.code == 0);
    CHECK(girth_out.output.find("girth=2\n") != std::string::npos);

    const fs::path acyclic = write_graph("path3.txt", testoracle::directed_path(3));
    const auto no_cycle = run_cli("girth " + acyclic.string());
    REQUIRE(no_cycle.code == 0);
    CHECK(no_cycle.output.find("acyclic") != std::string::npos);

    const fs::path g93 = write_graph("g93.txt", cayley_circulant(9, 3));
    const auto long_out = run_cli("longcycle " + g93.string());
    REQUIRE(long_out.code == 0);
    CHECK(long_out.output.find("length=9\n") != std::string::npos);

    const fs::path g102 = write_graph("g102.txt", cayley_circulant(10, 2));
    const auto sub_out = run_cli("subgraph " + g102.string());
    REQUIRE(sub_out.code == 0);
    CHECK(sub_out.output.find("kept=3 of=3 threshold=1\n") != std::string::npos);
    CHECK(sub_out.output.find("arcs=20\n") != std::string::npos);
}

TEST_CASE("cli: verify emits one report line per check in a fixed order") {
    const fs::path g42 = write_graph("g42c.txt", cayley_circulant(4, 2));
    const auto all = run_cli("verify " + g42.string());
    REQUIRE(all.code == 0);
    const auto lines = lines_of(all.output);
    REQUIRE(lines.size() == 7);
    const std::vector<std::string> expected{"beta",       "beta-tightness", "girth",
                                            "subgraph-min-degree", "long-cycle", "cut-balance",
                                            "f-min"};
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const BoundReport r = bound_report_from_line(lines[i]);
        CHECK(r.quantity == expected[i]);
        CHECK(r.verdict == Verdict::PASS);
    }
    CHECK(bound_report_from_line(lines[0]).relation == "=");  // the bound is attained here

    // Subset requests come back in canonical order no matter how they are phrased.
    const auto subset = run_cli("verify " + g42.string() + " --checks cor3,thm1");
    REQUIRE(subset.code == 0);
    const auto subset_lines = lines_of(subset.output);
    REQUIRE(subset_lines.size() == 2);
    CHECK(bound_report_from_line(subset_lines[0]).quantity == "beta");
    CHECK(bound_report_from_line(subset_lines[1]).quantity == "girth");

    CHECK(run_cli("verify " + g42.string() + " --checks nope").code == 2);
    const fs::path bad = write_graph("path3b.txt", testoracle::directed_path(3));
    const auto not_eulerian = run_cli("verify " + bad.string());
    CHECK(not_eulerian.code == 2);
    CHECK(not_eulerian.output.find("error:") != std::string::npos);
}

TEST_CASE("cli: skipped checks pass by default and fail under --strict") {
    const fs::path big = write_graph("g221.txt", cayley_circulant(22, 1));
    const auto lax = run_cli("verify " + big.string());
    REQUIRE(lax.code == 0);
    const auto lines = lines_of(lax.output);
    REQUIRE(lines.size() == 7);
    CHECK(bound_report_from_line(lines[0]).verdict == Verdict::SKIPPED);  // past solver cap
    CHECK(bound_report_from_line(lines[6]).verdict == Verdict::SKIPPED);  // brute force capped

    CHECK(run_cli("verify " + big.string() + " --strict").code == 1);
}

TEST_CASE("cli: solver cap comes from the flag, then the environment") {
    const fs::path g62 = write_graph("g62.txt", cayley_circulant(6, 2));
    CHECK(run_cli("fas " + g62.string(), "EULER_EXTREMAL_CAP=4").code == 2);
    const auto flag_wins = run_cli("fas " + g62.string() + " --cap 6", "EULER_EXTREMAL_CAP=4");
    REQUIRE(flag_wins.code == 0);
    CHECK(flag_wins.output.find("beta=3\n") != std::string::npos);
    CHECK(run_cli("fas " + g62.string(), "EULER_EXTREMAL_CAP=banana").code == 2);
}

TEST_CASE("cli: report aggregates a directory of verdict lines") {
    const fs::path g42 = write_graph("g42d.txt", cayley_circulant(4, 2));
    const fs::path dir = scratch_dir() / "reports";
    fs::create_directories(dir);
    REQUIRE(run_cli("verify " + g42.string() + " --out " + (dir / "a.jsonl").string()).code == 0);
    const auto ok = run_cli("report " + dir.string());
    REQUIRE(ok.code == 0);
    CHECK(ok.output.find("total_time_ms=") != std::string::npos);
    CHECK(ok.output.find("failing:") == std::string::npos);

    const fs::path empty = scratch_dir() / "reports-empty";
    fs::create_directories(empty);
    CHECK(run_cli("report " + empty.string()).code == 0);

    const fs::path broken = scratch_dir() / "reports-broken";
    fs::create_directories(broken);
    std::ofstream bad(broken / "bad.jsonl");
    bad << bound_report_to_line(make_bound_report("girth", Rational(10), Rational(5), "<=")) << "\n";
    bad.close();
    const auto failing = run_cli("report " + broken.string());
    CHECK(failing.code == 1);
    CHECK(failing.output.find("failing: girth") != std::string::npos);
}

TEST_CASE("cli: guided search policy reads the generated role labels") {
    const fs::path cx = scratch_dir() / "cx.txt";
    REQUIRE(run_cli("generate dfs-cx --t 2 --out " + cx.string()).code == 0);
    const fs::path labels = scratch_dir() / "cx.txt.labels.json";
    REQUIRE(fs::exists(labels));

    const auto guided = run_cli("dfs " + cx.string() + " --root 0 --policy prop9 --labels " +
                                labels.string());
    REQUIRE(guided.code == 0);
    CHECK(guided.output.find("depth=4\n") != std::string::npos);
    CHECK(guided.output.find("roots=1\n") != std::string::npos);

    const auto plain = run_cli("dfs " + cx.string() + " --root 0");
    REQUIRE(plain.code == 0);
    const auto lines = lines_of(plain.output);
    REQUIRE(!lines.empty());
    REQUIRE(lines[0].rfind("depth=", 0) == 0);
    CHECK(std::stoll(lines[0].substr(6)) > 4);

    CHECK(run_cli("dfs " + cx.string() + " --root 0 --policy prop9").code == 2);
}
