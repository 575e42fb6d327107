// End-to-end tests of the command-line tool: each case shells out to the
// built binary, captures stdout/stderr, and inspects the files it writes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "subsum/io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return s;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string out_path = "cli_run_" + std::to_string(counter) + ".out";
    const std::string err_path = "cli_run_" + std::to_string(counter) + ".err";
    ++counter;

    const std::string cmd =
        env_prefix + " " + std::string(SUBSUM_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("build writes the vertex table and edge list") {
    const RunResult r = run_cli("build --n 3 --p 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "wrote subsum-n3-p2-m1.vertices.tsv (14 vertices) and subsum-n3-p2-m1.edges.tsv (49 edges)\n");
    CHECK(r.err.empty());

    const std::string vertices = slurp("subsum-n3-p2-m1.vertices.tsv");
    CHECK(count_lines(vertices) == 15);  // header + 14 rows, trailing newline
    CHECK(vertices.substr(0, vertices.find('\n')) == "id\tdim\tbasis");
    CHECK(vertices.find("\n1\t1\t0,0,1\n") != std::string::npos);

    const std::string edges = slurp("subsum-n3-p2-m1.edges.tsv");
    CHECK(count_lines(edges) == 49);
}

TEST_CASE("build honors format and prefix options") {
    const RunResult r = run_cli("build --n 3 --p 2 --format dot --out scratch_dot");
    CHECK(r.exit_code == 0);
    const std::string dot = slurp("scratch_dot.dot");
    CHECK(dot.substr(0, 14) == "graph subsum {");
    CHECK(slurp("scratch_dot.vertices.tsv").empty() == false);

    const RunResult bad = run_cli("build --n 3 --p 2 --format csv");
    CHECK(bad.exit_code != 0);
}

TEST_CASE("build rejects an empty vertex set") {
    const RunResult r = run_cli("build --n 1 --p 2");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("vertex set is empty") != std::string::npos);
}

TEST_CASE("build warns when the graph is complete") {
    const RunResult r = run_cli("build --n 2 --p 2 --out scratch_k3");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("complete graph") != std::string::npos);
    CHECK(slurp("scratch_k3.edges.tsv") == "1\t2\n1\t3\n2\t3\n");
}

TEST_CASE("degree table output") {
    const RunResult r = run_cli("degrees --n 3 --p 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "k\tcount\tdegree_direct\tdegree_formula\tmatch\n"
          "1\t7\t4\t4\tmatch\n"
          "2\t7\t10\t6\tMISMATCH\n");

    const RunResult r4 = run_cli("degrees --n 4 --p 2");
    CHECK(r4.exit_code == 0);
    CHECK(r4.out ==
          "k\tcount\tdegree_direct\tdegree_formula\tmatch\n"
          "1\t15\t8\t8\tmatch\n"
          "2\t35\t28\tnon-integral\tMISMATCH\n"
          "3\t15\t50\tnon-integral\tMISMATCH\n");
}

TEST_CASE("automorphism counting") {
    CHECK(run_cli("aut-count --n 3 --p 2").out == "168\n");

    const RunResult k3 = run_cli("aut-count --n 2 --p 2");
    CHECK(k3.out == "6\n");
    CHECK(k3.err.find("complete graph") != std::string::npos);

    const RunResult limited = run_cli("aut-count --n 3 --p 3 --limit 50");
    CHECK(limited.exit_code == 1);
    CHECK(limited.err.rfind("error: ", 0) == 0);
}

TEST_CASE("theorem verification") {
    const RunResult r = run_cli("verify-theorem --n 3 --p 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "brute 168 == closed-form 168; 168/168 decomposed; PASS\n");

    const RunResult low = run_cli("verify-theorem --n 2 --p 2");
    CHECK(low.exit_code == 1);
    CHECK(low.err.find("theorem requires n >= 3") != std::string::npos);
}

TEST_CASE("random automorphism round-trips through decompose") {
    const RunResult gen = run_cli("random-auto --n 3 --p 3 --seed 42 --out scratch_rt");
    CHECK(gen.exit_code == 0);
    const std::string truth = slurp("scratch_rt.truth.txt");
    REQUIRE_FALSE(truth.empty());

    const RunResult dec = run_cli("decompose --n 3 --p 3 scratch_rt.perm.tsv --out scratch_rt.cert.json");
    CHECK(dec.exit_code == 0);
    const std::string expected_line = "verified: " + truth.substr(0, truth.size() - 1);
    CHECK(dec.out.substr(0, dec.out.find('\n')) == expected_line);
    CHECK(dec.out.find("wrote scratch_rt.cert.json") != std::string::npos);

    const nlohmann::json cert = nlohmann::json::parse(slurp("scratch_rt.cert.json"));
    CHECK(cert.at("verified").get<bool>());
    CHECK(cert.at("rejection_stage").is_null());
    CHECK(truth.find(cert.at("A").get<std::string>()) != std::string::npos);
    CHECK(cert.at("n").get<int>() == 3);
    CHECK(cert.at("p").get<int>() == 3);
}

TEST_CASE("seeded generation is reproducible from the command line") {
    run_cli("random-auto --n 3 --p 2 --seed 7 --out scratch_seed_a");
    run_cli("random-auto --n 3 --p 2 --seed 7 --out scratch_seed_b");
    const std::string a = slurp("scratch_seed_a.perm.tsv");
    CHECK_FALSE(a.empty());
    CHECK(a == slurp("scratch_seed_b.perm.tsv"));
    CHECK(slurp("scratch_seed_a.truth.txt") == slurp("scratch_seed_b.truth.txt"));

    bool some_differ = false;
    for (int seed = 8; seed <= 10 && !some_differ; ++seed) {
        run_cli("random-auto --n 3 --p 2 --seed " + std::to_string(seed) + " --out scratch_seed_c");
        some_differ = slurp("scratch_seed_c.perm.tsv") != a;
    }
    CHECK(some_differ);
}

TEST_CASE("decomposing the identity permutation") {
    std::string identity;
    for (int i = 1; i <= 14; ++i) identity += std::to_string(i) + "\t" + std::to_string(i) + "\n";
    subsum::write_text_file("scratch_id.perm.tsv", identity);

    const RunResult r = run_cli("decompose --n 3 --p 2 scratch_id.perm.tsv --out scratch_id.cert.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "verified: A=1,0,0;0,1,0;0,0,1;s=0");
}

TEST_CASE("decomposing a non-automorphism yields a rejection certificate") {
    std::string swapped;
    for (int i = 1; i <= 14; ++i) {
        const int dst = i == 1 ? 8 : i == 8 ? 1 : i;
        swapped += std::to_string(i) + "\t" + std::to_string(dst) + "\n";
    }
    subsum::write_text_file("scratch_swap.perm.tsv", swapped);

    const RunResult r = run_cli("decompose --n 3 --p 2 scratch_swap.perm.tsv --out scratch_swap.cert.json");
    CHECK(r.exit_code == 0);  // a rejection certificate is a successful run
    CHECK(r.out.substr(0, r.out.find('\n')) == "rejected at stage check_automorphism");
    const nlohmann::json cert = nlohmann::json::parse(slurp("scratch_swap.cert.json"));
    CHECK_FALSE(cert.at("verified").get<bool>());
    CHECK(cert.at("rejection_stage").get<std::string>() == "check_automorphism");
    CHECK(cert.at("A").is_null());
}

TEST_CASE("malformed permutation files are reported with line numbers") {
    subsum::write_text_file("scratch_bad.perm.tsv", "1\t1\nbogus\n3\t3");
    const RunResult r = run_cli("decompose --n 3 --p 2 scratch_bad.perm.tsv");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("line 2") != std::string::npos);

    const RunResult missing = run_cli("decompose --n 3 --p 2 scratch_no_such_file.tsv");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("resource caps from the environment") {
    const RunResult capped = run_cli("build --n 3 --p 2", "SUBSUM_CAP=10");
    CHECK(capped.exit_code == 1);
    CHECK(capped.err.rfind("error: ", 0) == 0);

    const RunResult roomy = run_cli("build --n 3 --p 2 --out scratch_cap", "SUBSUM_CAP=100");
    CHECK(roomy.exit_code == 0);

    const RunResult garbage = run_cli("build --n 3 --p 2", "SUBSUM_CAP=ten");
    CHECK(garbage.exit_code == 1);
    CHECK(garbage.err.find("SUBSUM_CAP") != std::string::npos);
}

TEST_CASE("a subcommand is required") {
    CHECK(run_cli("").exit_code != 0);
    CHECK(run_cli("frobnicate --n 3 --p 2").exit_code != 0);
}
