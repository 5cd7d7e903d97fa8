#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "srd/cli.hpp"

using namespace srd;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / fs::path("srd_cli_test");
        fs::create_directories(dir);
    }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("gen writes the canonical edge list") {
    const RunResult r = run_cli({"gen", "--family", "ladder", "--n", "3"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "6 7\n"));

    const RunResult circ = run_cli({"gen", "--family", "circular-ladder", "--n", "3"});
    CHECK(contains(circ.out, "6 9\n"));

    const RunResult bad = run_cli({"gen", "--family", "cycle", "--n", "2"});
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.err, "cycle requires n >= 3"));
}

TEST_CASE("gen round-trips through solve and verify") {
    TempDir tmp;
    const std::string graph_file = tmp.file("lg4.graph");
    const std::string lab_file = tmp.file("lg4.labels");

    CHECK(run_cli({"gen", "--family", "ladder", "--n", "4", "--out", graph_file}).exit_code == 0);
    const RunResult solve =
        run_cli({"solve", "--in", graph_file, "--method", "bb", "--out", lab_file});
    CHECK(solve.exit_code == 0);
    CHECK(contains(solve.out, "weight: 4"));
    CHECK(contains(solve.out, "method: branch-bound"));

    const RunResult verify = run_cli({"verify", "--in", graph_file, "--labeling", lab_file});
    CHECK(verify.exit_code == 0);
    CHECK(contains(verify.out, "valid: yes"));
    CHECK(contains(verify.out, "weight: 4"));
}

TEST_CASE("solve picks dp for ladder families and reports the certificate") {
    const RunResult r = run_cli({"solve", "--family", "circular-ladder", "--n", "5"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "method: ladder-dp"));
    CHECK(contains(r.out, "weight: 4"));

    const RunResult lg2 = run_cli({"solve", "--family", "ladder", "--n", "2"});
    CHECK(contains(lg2.out, "weight: 3"));
    CHECK(contains(lg2.out, "coordinates: (1,1)=-1 (2,1)=1 (1,2)=2 (2,2)=1"));

    const RunResult big =
        run_cli({"solve", "--family", "ladder", "--n", "1000", "--method", "dp", "--porcelain"});
    CHECK(big.exit_code == 0);
    CHECK(contains(big.out, "weight 502"));
}

TEST_CASE("solve rejects dp on non-ladder inputs and enforces caps") {
    CHECK(run_cli({"solve", "--family", "path", "--n", "5", "--method", "dp"}).exit_code == 1);
    const RunResult capped = run_cli({"solve", "--family", "complete", "--n", "50"});
    CHECK(capped.exit_code == 1);
    CHECK(contains(capped.err, "capped"));
    // raising the cap makes it solvable (complete graphs prune instantly)
    const RunResult raised =
        run_cli({"solve", "--family", "complete", "--n", "41", "--cap", "41", "--porcelain"});
    CHECK(raised.exit_code == 0);
    CHECK(contains(raised.out, "weight 1"));
}

TEST_CASE("solve porcelain output is machine parsable") {
    const RunResult r =
        run_cli({"solve", "--family", "ladder", "--n", "6", "--porcelain", "--deterministic"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "family ladder\n"));
    CHECK(contains(r.out, "n 6\n"));
    CHECK(contains(r.out, "method ladder-dp\n"));
    CHECK(contains(r.out, "weight 5\n"));
    CHECK(contains(r.out, "optimal 1\n"));
    CHECK(contains(r.out, "labeling -1,1,2,1,-1,-1,1,2,-1,-1,2,1\n"));
}

TEST_CASE("verify flags invalid labelings with exit 2") {
    TempDir tmp;
    const std::string graph_file = tmp.file("lg2.graph");
    const std::string lab_file = tmp.file("bad.labels");
    run_cli({"gen", "--family", "ladder", "--n", "2", "--out", graph_file});

    write_file(lab_file, "0 -1\n1 -1\n2 -1\n3 -1\n");
    const RunResult all_minus = run_cli({"verify", "--in", graph_file, "--labeling", lab_file});
    CHECK(all_minus.exit_code == 2);
    CHECK(contains(all_minus.out, "valid: NO"));
    CHECK(contains(all_minus.out, "condition-1 violations"));
    CHECK(contains(all_minus.out, "vertex 0"));
    CHECK(contains(all_minus.out, "vertex 3"));
    CHECK(contains(all_minus.out, "condition-2 violations"));

    write_file(lab_file, "0 -1\n1 1\n2 2\n");
    const RunResult mismatch = run_cli({"verify", "--in", graph_file, "--labeling", lab_file});
    CHECK(mismatch.exit_code == 1);

    write_file(lab_file, "0 7\n");
    CHECK(run_cli({"verify", "--in", graph_file, "--labeling", lab_file}).exit_code == 1);

    CHECK(run_cli({"verify", "--in", tmp.file("missing.graph"), "--labeling", lab_file})
              .exit_code == 1);
}

TEST_CASE("verify accepts the drawing labeling for LG_2") {
    TempDir tmp;
    const std::string lab_file = tmp.file("fig.labels");
    write_file(lab_file, "0 -1\n1 1\n2 2\n3 1\n");
    const RunResult r =
        run_cli({"verify", "--family", "ladder", "--n", "2", "--labeling", lab_file});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "weight: 3"));
}

TEST_CASE("construct emits certificates for the closed-form labelings") {
    const RunResult r = run_cli({"construct", "--family", "ladder", "--n", "4"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "method: construction"));
    CHECK(contains(r.out, "weight: 4"));
    CHECK(contains(r.out, "valid: yes"));
    CHECK(contains(r.out, "formula: 4 (theorem)"));

    const RunResult excluded = run_cli({"construct", "--family", "circular-ladder", "--n", "5"});
    CHECK(excluded.exit_code == 1);
    CHECK(contains(excluded.err, "n = 5"));

    CHECK(run_cli({"construct", "--family", "path", "--n", "4"}).exit_code == 1);
}

TEST_CASE("bounds prints exact rationals with ceilings") {
    const RunResult ladder11 = run_cli({"bounds", "--family", "ladder", "--n", "11"});
    CHECK(ladder11.exit_code == 0);
    CHECK(contains(ladder11.out, "degree-bound: 2 (ceiling 2)"));

    const RunResult ladder5 = run_cli({"bounds", "--family", "ladder", "--n", "5"});
    CHECK(contains(ladder5.out, "degree-bound: 10/11 (ceiling 1)"));
    CHECK(contains(ladder5.out, "size-bound: -11 (ceiling -11)"));
    CHECK(contains(ladder5.out, "trivial-upper: 10"));

    const RunResult c6 = run_cli({"bounds", "--family", "cycle", "--n", "6"});
    CHECK(contains(c6.out, "size-bound: -3 (ceiling -3)"));

    TempDir tmp;
    const std::string graph_file = tmp.file("isolated.graph");
    write_file(graph_file, "3 1\n0 1\n");
    const RunResult iso = run_cli({"bounds", "--in", graph_file});
    CHECK(iso.exit_code == 0);
    CHECK(contains(iso.out, "size-bound: inapplicable"));
}

TEST_CASE("table checks the ladder theorem clean") {
    const RunResult r =
        run_cli({"table", "--family", "ladder", "--from", "2", "--to", "7", "--check"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "check: all rows agree"));
}

TEST_CASE("table reports the even-n circular-ladder discrepancies") {
    const RunResult r = run_cli(
        {"table", "--family", "circular-ladder", "--from", "3", "--to", "7", "--check",
         "--porcelain"});
    CHECK(r.exit_code == 3);
    CHECK(contains(r.out, "row 4 formula 4 construction 4 valid 1 exact 2 agree 0"));
    CHECK(contains(r.out, "row 5 formula 4 construction - valid - exact 4 agree 1"));
    CHECK(contains(r.out, "row 6 formula 5 construction 5 valid 1 exact 4 agree 0"));
    CHECK(contains(r.out, "row 7 formula 5 construction 5 valid 1 exact 5 agree 1"));
}

TEST_CASE("table on ladder complements agrees") {
    const RunResult r = run_cli(
        {"table", "--family", "ladder-complement", "--from", "4", "--to", "7", "--check",
         "--porcelain"});
    CHECK(r.exit_code == 0);
    for (int n = 4; n <= 7; ++n)
        CHECK(contains(r.out, "row " + std::to_string(n) + " formula 2"));
}

TEST_CASE("table surfaces the path n=1 prior-value defect") {
    const RunResult r =
        run_cli({"table", "--family", "path", "--from", "1", "--to", "3", "--check",
                 "--porcelain"});
    CHECK(r.exit_code == 3);
    CHECK(contains(r.out, "row 1 formula 0 construction - valid - exact 1 agree 0"));
    CHECK(contains(r.out, "row 2 formula 1 construction - valid - exact 1 agree 1"));
}

TEST_CASE("table leaves oversized complement rows blank") {
    const RunResult r = run_cli({"table", "--family", "ladder-complement", "--from", "8", "--to",
                                 "8", "--porcelain"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "row 8 formula 2 construction 2 valid 1 exact - agree 1"));
}

TEST_CASE("table rejects bad ranges") {
    CHECK(run_cli({"table", "--family", "ladder", "--from", "9", "--to", "3"}).exit_code == 1);
    CHECK(run_cli({"table", "--family", "ladder", "--from", "1", "--to", "3"}).exit_code == 1);
    CHECK(run_cli({"table", "--family", "nope", "--from", "2", "--to", "3"}).exit_code == 1);
}

TEST_CASE("dot output carries labels and style classes") {
    TempDir tmp;
    const std::string graph_file = tmp.file("lg2.graph");
    const std::string lab_file = tmp.file("fig.labels");
    run_cli({"gen", "--family", "ladder", "--n", "2", "--out", graph_file});
    write_file(lab_file, "0 -1\n1 1\n2 2\n3 1\n");

    const RunResult labeled =
        run_cli({"dot", "--in", graph_file, "--labeling", lab_file});
    CHECK(labeled.exit_code == 0);
    CHECK(contains(labeled.out, "graph srd {"));
    CHECK(contains(labeled.out, "v0 [label=\"-1\", class=\"minus\""));
    CHECK(contains(labeled.out, "v2 [label=\"2\", class=\"two\""));
    CHECK(contains(labeled.out, "v0 -- v1;"));

    const RunResult plain = run_cli({"dot", "--in", graph_file});
    CHECK(plain.exit_code == 0);
    CHECK(contains(plain.out, "v0 [label=\"0\"]"));

    write_file(graph_file, "not a graph\n");
    CHECK(run_cli({"dot", "--in", graph_file}).exit_code == 1);
}

TEST_CASE("dot via family flags writes to a file") {
    TempDir tmp;
    const std::string out_file = tmp.file("lc3.dot");
    const RunResult r =
        run_cli({"dot", "--family", "circular-ladder", "--n", "3", "--out", out_file});
    CHECK(r.exit_code == 0);
    CHECK(contains(read_file(out_file), "v0 -- v1;"));
}

TEST_CASE("cli usage errors exit 1") {
    CHECK(run_cli({}).exit_code == 1);
    CHECK(run_cli({"frobnicate"}).exit_code == 1);
    CHECK(run_cli({"solve"}).exit_code == 1);                       // no graph given
    CHECK(run_cli({"solve", "--family", "ladder"}).exit_code == 1); // --family needs --n
    CHECK(run_cli({"gen", "--family", "martian", "--n", "3"}).exit_code == 1);
    CHECK(run_cli({"solve", "--family", "ladder", "--n", "3", "--method", "sorcery"}).exit_code ==
          1);
}

TEST_CASE("help exits 0") {
    const RunResult r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "gen"));
    CHECK(contains(r.out, "solve"));
}

TEST_CASE("solve output labeling re-verifies through the cli") {
    TempDir tmp;
    const std::string graph_file = tmp.file("lc4.graph");
    const std::string lab_file = tmp.file("lc4.labels");
    run_cli({"gen", "--family", "circular-ladder", "--n", "4", "--out", graph_file});
    const RunResult solve =
        run_cli({"solve", "--in", graph_file, "--method", "exhaustive", "--out", lab_file});
    CHECK(solve.exit_code == 0);
    CHECK(contains(solve.out, "weight: 2"));
    CHECK(run_cli({"verify", "--in", graph_file, "--labeling", lab_file}).exit_code == 0);
}
