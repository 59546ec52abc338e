#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(PVC_TOOL_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path workdir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "pvc_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_of(const std::string& name) { return (workdir() / name).string(); }

void write_file(const std::string& name, const std::string& text) {
    std::ofstream f(path_of(name));
    f << text;
}

std::string read_file(const std::string& name) {
    std::ifstream f(path_of(name));
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string strip_elapsed(const std::string& out) {
    std::istringstream in(out);
    std::ostringstream kept;
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("elapsed_ms", 0) != 0) kept << line << '\n';
    return kept.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("gen writes the fixtures byte-exactly") {
    RunResult r = run("gen --fixture mnc-counterexample --out " + path_of("fig.pvc"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "n 16"));
    CHECK(contains(r.out, "m 19"));
    std::string text = read_file("fig.pvc");
    CHECK(text.rfind("p pvc 16 19\n", 0) == 0);

    r = run("gen --fixture weighted-spider --out " + path_of("spider.pvc"));
    CHECK(r.exit_code == 0);
    std::string spider = read_file("spider.pvc");
    CHECK(spider.rfind("p pvc 9 8\n", 0) == 0);
    CHECK(contains(spider, "w 5 2\n"));
}

TEST_CASE("gen random instances parse back and are seed-stable") {
    RunResult r = run("gen --random-tree 8 7 --out " + path_of("t1.pvc"));
    CHECK(r.exit_code == 0);
    RunResult r2 = run("gen --random-tree 8 7 --out " + path_of("t2.pvc"));
    CHECK(read_file("t1.pvc") == read_file("t2.pvc"));
    CHECK(contains(read_file("t1.pvc"), "p pvc 8 7\n"));

    r = run("gen --random-bipartite 4 5 3 11 --out " + path_of("b1.pvc"));
    CHECK(r.exit_code == 0);
    r = run("gen --bogus", "");
    CHECK(r.exit_code == 2);
    r = run("gen --random-tree 0 1 --out " + path_of("zero.pvc"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("solve on a path with the enumeration method") {
    write_file("p4.pvc", "p pvc 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    RunResult r = run("solve --input " + path_of("p4.pvc") + " --t 3 --method brute");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "command solve\n"));
    CHECK(contains(r.out, "input n 4 m 3 class tree\n"));
    CHECK(contains(r.out, "size 2\n"));
    CHECK(contains(r.out, "covered 3\n"));
    CHECK(contains(r.out, "vertices 1 3\n"));
}

TEST_CASE("solve picks the tree solver automatically") {
    write_file("spider_unit.pvc",
               "p pvc 9 8\ne 1 4\ne 2 4\ne 3 4\ne 4 5\ne 5 6\ne 5 7\ne 5 8\ne 5 9\n");
    RunResult r = run("solve --input " + path_of("spider_unit.pvc") + " --t 6 --method auto");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "method tree-dp\n"));
    CHECK(contains(r.out, "size 2\n"));
}

TEST_CASE("solve cross-checks cyclic bipartite instances automatically") {
    write_file("c4.pvc", "p pvc 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
    RunResult r = run("solve --input " + path_of("c4.pvc") + " --t 4 --method auto");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "method lagrangian+oracle-verify\n"));
    CHECK(contains(r.out, "size 2\n"));
}

TEST_CASE("solve exit codes") {
    write_file("tri.pvc", "p pvc 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(run("solve --input " + path_of("tri.pvc") + " --t 2 --method lagrangian").exit_code == 5);
    CHECK(run("solve --input " + path_of("tri.pvc") + " --t 2 --method tree-dp").exit_code == 5);
    CHECK(run("solve --input " + path_of("tri.pvc") + " --t 2 --method auto").exit_code == 5);
    CHECK(run("solve --input " + path_of("tri.pvc") + " --t 2 --method brute").exit_code == 0);
    CHECK(run("solve --input " + path_of("tri.pvc") + " --t 9 --method brute").exit_code == 3);

    write_file("broken.pvc", "p pvc 2 1\ne 1 1\n");
    CHECK(run("solve --input " + path_of("broken.pvc") + " --t 0").exit_code == 2);
    CHECK(run("solve --input " + path_of("missing.pvc") + " --t 0").exit_code == 2);

    CHECK(run("solve --input " + path_of("spider.pvc") + " --t 2 --method brute").exit_code == 5);
}

TEST_CASE("profile of the concavity counterexample") {
    RunResult r = run("profile --input " + path_of("fig.pvc"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\n0\n6\n10\n15\n"));
    CHECK(contains(r.out, "\nmnc violated at k=2\n"));
}

TEST_CASE("weighted profile of the spider") {
    RunResult r = run("profile --input " + path_of("spider.pvc") + " --weighted");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\n0\n4\n5\n8\n"));
    CHECK(contains(r.out, "\nmnc violated at k=2\n"));

    // Plain profile refuses weighted input.
    CHECK(run("profile --input " + path_of("spider.pvc")).exit_code == 5);
}

TEST_CASE("profile of a tree holds") {
    write_file("p5.pvc", "p pvc 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n");
    RunResult r = run("profile --input " + path_of("p5.pvc"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\nmnc holds\n"));
}

TEST_CASE("oracle guard is overridable through the environment") {
    RunResult r = run("profile --input " + path_of("fig.pvc"), "PVC_ORACLE_MAX_N=10");
    CHECK(r.exit_code == 6);
    r = run("profile --input " + path_of("fig.pvc"), "PVC_ORACLE_MAX_N=16");
    CHECK(r.exit_code == 0);
}

TEST_CASE("reduce writes an artifact with metadata") {
    write_file("edge.pvc", "p pvc 2 1\ne 1 2\n");
    RunResult r = run("reduce --input " + path_of("edge.pvc") + " --k 2 --out " +
                      path_of("edge_reduced.pvc"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "budget 2\n"));
    CHECK(contains(r.out, "target 2\n"));
    CHECK(contains(r.out, "warning"));
    std::string text = read_file("edge_reduced.pvc");
    CHECK(contains(text, "p pvc 4 3\n"));
    CHECK(contains(text, "c budget 2\n"));
    CHECK(contains(text, "c target 2\n"));
    CHECK(contains(text, "c provenance 3 block-left 1\n"));

    CHECK(run("reduce --input " + path_of("edge.pvc") + " --k 1 --out " +
              path_of("bad.pvc")).exit_code == 2);
}

TEST_CASE("verify-reduction verdicts and exit codes") {
    write_file("k4.pvc", "p pvc 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    RunResult r = run("verify-reduction --input " + path_of("k4.pvc") + " --k 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "equivalent true\n"));
    CHECK(contains(r.out, "clique 1 2 3\n"));
    CHECK(contains(r.out, "cover "));

    // The five-cycle at k=3 is a genuine counterexample to the naive
    // equivalence (the budget matches the block count), reported honestly.
    write_file("c5.pvc", "p pvc 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
    r = run("verify-reduction --input " + path_of("c5.pvc") + " --k 3");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.out, "equivalent false\n"));
    CHECK(contains(r.out, "clique none\n"));

    // K8 with k=4 reduces to 64 vertices, beyond the default guard.
    std::ostringstream k8;
    k8 << "p pvc 8 28\n";
    for (int a = 1; a <= 8; ++a)
        for (int b = a + 1; b <= 8; ++b) k8 << "e " << a << ' ' << b << '\n';
    write_file("k8.pvc", k8.str());
    CHECK(run("verify-reduction --input " + path_of("k8.pvc") + " --k 4").exit_code == 6);
}

TEST_CASE("reduced artifacts loop back through solve") {
    write_file("k3.pvc", "p pvc 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    RunResult reduce = run("reduce --input " + path_of("k3.pvc") + " --k 3 --out " +
                           path_of("k3_reduced.pvc"));
    REQUIRE(reduce.exit_code == 0);
    CHECK(contains(reduce.out, "budget 3\n"));
    CHECK(contains(reduce.out, "target 6\n"));
    // Two block-left vertices already cover 6 of the 9 edges, so the true
    // optimum sits below the gadget budget.
    RunResult r = run("solve --input " + path_of("k3_reduced.pvc") + " --t 6 --method brute");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "size 2\n"));
}

TEST_CASE("runs are byte-identical apart from the timing line") {
    std::string cmd = "solve --input " + path_of("p4.pvc") + " --t 2 --method auto";
    RunResult a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));

    cmd = "profile --input " + path_of("fig.pvc");
    CHECK(strip_elapsed(run(cmd).out) == strip_elapsed(run(cmd).out));
}

TEST_CASE("json output carries the same payload") {
    RunResult r = run("--json solve --input " + path_of("p4.pvc") + " --t 3 --method brute");
    CHECK(r.exit_code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "solve");
    CHECK(doc["input"]["n"] == 4);
    CHECK(doc["size"] == 2);
    CHECK(doc["vertices"] == nlohmann::json::array({1, 3}));
    CHECK(doc.contains("elapsed_ms"));

    r = run("--json profile --input " + path_of("fig.pvc"));
    doc = nlohmann::json::parse(r.out);
    CHECK(doc["opt"][1] == 6);
    CHECK(doc["mnc"]["holds"] == false);
    CHECK(doc["mnc"]["first_violation"] == 2);
}
