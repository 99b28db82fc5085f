#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fundop/fundop.hpp"
#include "test_helpers.hpp"

using namespace fundop;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string cli_path() {
    return FUNDOP_CLI_PATH;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path dir = fs::temp_directory_path() / "fundop_cli_capture";
    fs::create_directories(dir);
    fs::path out = dir / ("out_" + std::to_string(counter) + ".txt");
    fs::path err = dir / ("err_" + std::to_string(counter) + ".txt");
    ++counter;
    std::string cmd =
        cli_path() + " " + args + " > " + out.string() + " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    CliResult res;
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    res.out = slurp(out);
    res.err = slurp(err);
    return res;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "fundop_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_matrix(const fs::path& dir, const std::string& name, const Mat& m) {
    fs::path p = dir / name;
    write_json_file(p.string(), mat_to_json(m));
    return p.string();
}

} // namespace

TEST_CASE("cli exit code contract for malformed input", "[cli]") {
    fs::path dir = scratch_dir();

    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("analyze " + (dir / "missing.json").string()).exit_code == 2);

    fs::path garbage = dir / "garbage.json";
    std::ofstream(garbage) << "{not json";
    CHECK(run_cli("analyze " + garbage.string()).exit_code == 2);

    Rng rng(7);
    std::string rect = write_matrix(dir, "rect.json", rng.box_matrix(2, 3));
    CHECK(run_cli("analyze " + rect).exit_code == 2);
}

TEST_CASE("cli analyze classifies and reports the model identities", "[cli]") {
    fs::path dir = scratch_dir();
    Rng rng(11);

    std::string good = write_matrix(dir, "good.json", 0.5 * rng.unitary(3));
    CliResult r = run_cli("analyze " + good);
    CHECK(r.exit_code == 0);
    Json j = parse_json_text(r.out, "analyze");
    CHECK(j["command"] == "analyze");
    CHECK(j["pass"] == true);
    CHECK(j["facts"]["classification"] == "pure");
    CHECK(j["metrics"]["contraction.defect_rank"] == 3.0);
    CHECK(j["metrics"]["contraction.defect_rank_adjoint"] == 3.0);
    CHECK(j["metrics"]["contraction.op_norm_P"].get<double>() == Catch::Approx(0.5));
    CHECK(j["metrics"]["contraction.unitary_projection_norm"].get<double>() < 1e-9);
    bool saw_lemma = false;
    for (const auto& c : j["checks"])
        if (c["name"] == "model.truncated_unitarity") saw_lemma = true;
    CHECK(saw_lemma);

    std::string uni = write_matrix(dir, "uni.json", rng.unitary(3));
    r = run_cli("analyze " + uni);
    CHECK(r.exit_code == 0);
    j = parse_json_text(r.out, "analyze unitary");
    CHECK(j["facts"]["classification"] == "unitary");
    CHECK(j["metrics"]["contraction.defect_rank"] == 0.0);
    CHECK(j["metrics"]["contraction.unitary_part_dim"] == 3.0);
    CHECK(j["metrics"]["contraction.unitary_projection_norm"].get<double>() ==
          Catch::Approx(1.0));

    std::string big = write_matrix(dir, "big.json", Mat(1.5 * rng.unitary(2)));
    r = run_cli("analyze " + big);
    CHECK(r.exit_code == 1);
    j = parse_json_text(r.out, "analyze big");
    CHECK(j["pass"] == false);
    CHECK(j["facts"]["classification"] == "not_a_contraction");
}

TEST_CASE("cli gamma workflow extracts, checks and synthesizes", "[cli]") {
    fs::path dir = scratch_dir();
    Rng rng(13);
    Mat y = rng.box_matrix(2, 2);
    y *= 0.7 / numerical_radius(y);
    GammaPair pair = gen_pure_gamma(y, 3);

    std::string s_path = write_matrix(dir, "s.json", pair.S);
    std::string p_path = write_matrix(dir, "p.json", pair.P);

    CliResult r = run_cli("extract " + s_path + " " + p_path);
    CHECK(r.exit_code == 0);
    Json j = parse_json_text(r.out, "extract");
    CHECK(j["command"] == "extract");
    CHECK(j["pass"] == true);
    Mat f = mat_from_json(j["outputs"]["F"]);
    Mat g = mat_from_json(j["outputs"]["G"]);
    CHECK(op_norm(f - extract_F(pair).F) < 1e-12);

    std::string f_path = write_matrix(dir, "f.json", f);
    std::string g_path = write_matrix(dir, "g.json", g);

    r = run_cli("check-admissible " + p_path + " " + f_path + " " + g_path);
    CHECK(r.exit_code == 0);
    j = parse_json_text(r.out, "check-admissible");
    CHECK(j["pass"] == true);
    CHECK(j["metrics"]["admissibility.first_failing_coefficient"] == -1.0);

    r = run_cli("synthesize " + p_path + " " + f_path + " " + g_path);
    CHECK(r.exit_code == 0);
    j = parse_json_text(r.out, "synthesize");
    CHECK(j["pass"] == true);
    Mat s_back = mat_from_json(j["outputs"]["S"]);
    CHECK(op_norm(s_back - pair.S) < 1e-7);

    // an inadmissible pair is refused with the first failing coefficient
    std::string bad_g = write_matrix(dir, "bad_g.json", Mat(-g));
    r = run_cli("synthesize " + p_path + " " + f_path + " " + bad_g);
    CHECK(r.exit_code == 1);
    j = parse_json_text(r.out, "synthesize bad");
    CHECK(j["pass"] == false);
    CHECK(j["metrics"]["admissibility.first_failing_coefficient"].get<double>() >= 0.0);
    CHECK(j["outputs"].empty());

    // wrong-sized operators are an input error
    std::string tiny = write_matrix(dir, "tiny.json", Mat::Identity(1, 1));
    CHECK(run_cli("synthesize " + p_path + " " + f_path + " " + tiny).exit_code == 2);

    // non-commuting pairs are an input error, not a failed check
    Mat s2 = Mat::Zero(2, 2);
    s2(0, 1) = 1.0;
    Mat p2 = Mat::Zero(2, 2);
    p2(0, 0) = 0.5;
    p2(1, 1) = 0.2;
    std::string nc_s = write_matrix(dir, "nc_s.json", s2);
    std::string nc_p = write_matrix(dir, "nc_p.json", p2);
    CHECK(run_cli("extract " + nc_s + " " + nc_p).exit_code == 2);

    // synthesis requires a pure P
    std::string uni = write_matrix(dir, "syn_uni.json", rng.unitary(2));
    std::string one = write_matrix(dir, "one.json", Mat(0.5 * Mat::Identity(2, 2)));
    CHECK(run_cli("synthesize " + uni + " " + one + " " + one).exit_code == 2);
}

TEST_CASE("cli tetra workflow round trips the triple", "[cli]") {
    fs::path dir = scratch_dir();
    Rng rng(17);
    Mat v = rng.unitary(2);
    Mat d1 = Mat::Zero(2, 2), d2 = Mat::Zero(2, 2);
    d1(0, 0) = Complex(0.30, 0.10);
    d1(1, 1) = Complex(-0.20, 0.25);
    d2(0, 0) = Complex(0.25, -0.30);
    d2(1, 1) = Complex(0.40, 0.05);
    Mat g1 = v * d1 * v.adjoint();
    Mat g2 = v * d2 * v.adjoint();
    TetraTriple t = gen_pure_tetra(g1, g2, 2);

    std::string a_path = write_matrix(dir, "a.json", t.A);
    std::string b_path = write_matrix(dir, "b.json", t.B);
    std::string p_path = write_matrix(dir, "tp.json", t.P);

    CliResult r = run_cli("extract --tetra " + a_path + " " + b_path + " " + p_path);
    CHECK(r.exit_code == 0);
    Json j = parse_json_text(r.out, "extract tetra");
    CHECK(j["pass"] == true);
    Mat f1 = mat_from_json(j["outputs"]["F1"]);
    Mat f2 = mat_from_json(j["outputs"]["F2"]);
    Mat gg1 = mat_from_json(j["outputs"]["G1"]);
    Mat gg2 = mat_from_json(j["outputs"]["G2"]);

    // two operand paths with --tetra is a usage error
    CHECK(run_cli("extract --tetra " + a_path + " " + b_path).exit_code == 2);

    std::string f1p = write_matrix(dir, "f1.json", f1);
    std::string f2p = write_matrix(dir, "f2.json", f2);
    std::string g1p = write_matrix(dir, "g1.json", gg1);
    std::string g2p = write_matrix(dir, "g2.json", gg2);
    r = run_cli("synthesize-tetra " + p_path + " " + f1p + " " + f2p + " " + g1p + " " +
                g2p);
    CHECK(r.exit_code == 0);
    j = parse_json_text(r.out, "synthesize tetra");
    CHECK(j["pass"] == true);
    CHECK(op_norm(mat_from_json(j["outputs"]["A"]) - t.A) < 1e-7);
    CHECK(op_norm(mat_from_json(j["outputs"]["B"]) - t.B) < 1e-7);

    // a non-commuting triple is an input error
    Mat nc = Mat::Zero(t.A.rows(), t.A.cols());
    nc(0, t.A.cols() - 1) = 1.0;
    std::string nc_path = write_matrix(dir, "nc.json", Mat(t.A + nc));
    CHECK(run_cli("extract --tetra " + nc_path + " " + b_path + " " + p_path).exit_code ==
          2);
}

TEST_CASE("cli membership takes six positional reals", "[cli]") {
    CliResult r = run_cli("membership 0 0 0 0 0 0");
    CHECK(r.exit_code == 0);
    Json j = parse_json_text(r.out, "membership origin");
    CHECK(j["facts"]["member"] == "true");
    // the +infinity sentinel has no JSON number form
    CHECK(j["metrics"]["membership.margin"].is_null());

    r = run_cli("membership 2 0 0 0 0 0");
    CHECK(r.exit_code == 0);
    j = parse_json_text(r.out, "membership outside");
    CHECK(j["facts"]["member"] == "false");
    CHECK(j["metrics"]["membership.margin"].get<double>() == Catch::Approx(-0.5));

    // negative coordinates must parse as positional values
    r = run_cli("membership -0.233 0.596 0.4 -0.5 0.5 0.866");
    CHECK(r.exit_code == 0);
    j = parse_json_text(r.out, "membership boundary");
    CHECK(j["facts"]["member"] == "true");

    CHECK(run_cli("membership 0 0 0 0 0 0 --grid 32").exit_code == 2);
    CHECK(run_cli("membership 0 0 0").exit_code == 2);
}

TEST_CASE("cli verify-suite is reproducible and honors edge parameters", "[cli]") {
    CliResult a = run_cli("verify-suite --seed 7 --cases 2 --dim-max 4");
    CliResult b = run_cli("verify-suite --seed 7 --cases 2 --dim-max 4");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    Json j = parse_json_text(a.out, "verify-suite");
    CHECK(j["command"] == "verify-suite");
    CHECK(j["inputs"]["seed"] == "7");

    CliResult zero = run_cli("verify-suite --seed 7 --cases 0 --dim-max 4");
    CHECK(zero.exit_code == 0);
    CHECK(parse_json_text(zero.out, "verify-suite empty")["pass"] == true);

    CliResult scalar = run_cli("verify-suite --seed 3 --cases 2 --dim-max 1");
    CHECK(scalar.exit_code == 0);
}
