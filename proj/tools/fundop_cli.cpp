// Command-line front end: JSON matrix files in, one RunReport JSON document
// on stdout, diagnostics on stderr. Exit codes: 0 all checks pass, 1 a check
// failed (or a computation refused an inadmissible/inconsistent input), 2
// malformed input (unparseable file, wrong shape, violated precondition).

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "fundop/fundop.hpp"

using namespace fundop;

namespace {

int emit(const RunReport& run) {
    std::cout << dump_json(run_report_to_json(run));
    return run.pass() ? 0 : 1;
}

Mat load_square(const std::string& path) {
    Mat m = load_matrix_file(path);
    if (m.rows() != m.cols())
        throw NonSquare(path + ": operator file must be square");
    return m;
}

int analyze_run(const std::string& path, int degree, double tol) {
    RunReport run;
    run.command = "analyze";
    run.inputs.emplace_back("P", path);
    const Mat m = load_square(path);
    const double nrm = op_norm(m);
    const int deg = degree >= 0 ? degree : 8;

    Report basic;
    basic.name = "contraction";
    basic.add("contractive", std::max(0.0, nrm - 1.0), tol);
    basic.metrics["dim"] = static_cast<double>(m.rows());
    basic.metrics["op_norm_P"] = nrm;
    basic.metrics["spectral_radius_P"] = spectral_radius(m);
    basic.metrics["tol"] = tol;
    if (nrm > 1.0 + tol) {
        run.facts.emplace_back("classification", "not_a_contraction");
        run.reports.push_back(std::move(basic));
        return emit(run);
    }

    Contraction c(m, tol);
    Classification cls = classify(c);
    run.facts.emplace_back("classification",
                           cls.is_pure ? "pure"
                                       : (cls.unitary_part_dim == c.dim() ? "unitary"
                                                                          : "mixed"));
    basic.metrics["unitary_part_dim"] = static_cast<double>(cls.unitary_part_dim);
    basic.metrics["defect_rank"] = static_cast<double>(defect(c, false).rank);
    basic.metrics["defect_rank_adjoint"] = static_cast<double>(defect(c, true).rank);
    basic.metrics["unitary_projection_norm"] = op_norm(power_limit(c));
    run.reports.push_back(std::move(basic));

    Report model;
    model.name = "model";
    model.metrics["degree"] = static_cast<double>(deg);
    model.add("truncated_unitarity", model_decomposition_residual(c, deg), 1e-10);
    model.add("embedding_telescoping", embedding_gram_residual(c, deg), 1e-12);
    model.absorb(shift_intertwining_check(c, deg));
    run.reports.push_back(std::move(model));
    return emit(run);
}

int extract_run(const std::vector<std::string>& paths, bool tetra, double tol) {
    RunReport run;
    run.command = "extract";
    if (tetra) {
        if (paths.size() != 3)
            throw ParseFailure("extract --tetra expects path_A path_B path_P");
        run.inputs.emplace_back("A", paths[0]);
        run.inputs.emplace_back("B", paths[1]);
        run.inputs.emplace_back("P", paths[2]);
        TetraTriple t{load_square(paths[0]), load_square(paths[1]), load_square(paths[2])};
        require_triple_shape(t, "extract");
        const double scale = std::max({1.0, op_norm(t.A), op_norm(t.B), op_norm(t.P)});
        const double comm = std::max({op_norm(t.A * t.B - t.B * t.A),
                                      op_norm(t.A * t.P - t.P * t.A),
                                      op_norm(t.B * t.P - t.P * t.B)});
        if (comm > tol * scale * scale)
            throw PreconditionFailed("extract: A, B, P do not commute (residual " +
                                     std::to_string(comm) + ")");
        TetraExtract fe = extract_F12(t, tol);
        TetraExtract ge = extract_G12(t, tol);
        Report ex;
        ex.name = "extraction";
        ex.add("fundamental_eq_1", fe.eq1_residual, tol * scale);
        ex.add("fundamental_eq_2", fe.eq2_residual, tol * scale);
        ex.add("fundamental_eq_adjoint_1", ge.eq1_residual, tol * scale);
        ex.add("fundamental_eq_adjoint_2", ge.eq2_residual, tol * scale);
        ex.metrics["tol"] = tol;
        run.reports.push_back(std::move(ex));
        run.reports.push_back(tetra_relations_check(t, fe.F1, fe.F2, ge.F1, ge.F2, tol));
        run.reports.push_back(
            tetra_defect_relations_check(t, fe.F1, fe.F2, ge.F1, ge.F2, tol));
        run.reports.push_back(tetra_triple_certificate(t, tol));
        run.outputs.emplace_back("F1", fe.F1);
        run.outputs.emplace_back("F2", fe.F2);
        run.outputs.emplace_back("G1", ge.F1);
        run.outputs.emplace_back("G2", ge.F2);
        return emit(run);
    }

    if (paths.size() != 2) throw ParseFailure("extract expects path_S path_P");
    run.inputs.emplace_back("S", paths[0]);
    run.inputs.emplace_back("P", paths[1]);
    GammaPair pair{load_square(paths[0]), load_square(paths[1])};
    require_pair_shape(pair, "extract");
    const double scale = std::max({1.0, op_norm(pair.S), op_norm(pair.P)});
    const double comm = op_norm(pair.S * pair.P - pair.P * pair.S);
    if (comm > tol * scale * scale)
        throw PreconditionFailed("extract: S and P do not commute (residual " +
                                 std::to_string(comm) + ")");
    ExtractResult f = extract_F(pair, tol);
    ExtractResult g = extract_G(pair, tol);
    Report ex;
    ex.name = "extraction";
    ex.add("fundamental_eq", f.eq_residual, tol * scale);
    ex.add("fundamental_eq_adjoint", g.eq_residual, tol * scale);
    ex.metrics["tol"] = tol;
    run.reports.push_back(std::move(ex));
    run.reports.push_back(fundamental_relations_check(pair, f.F, g.F, tol));
    run.reports.push_back(gamma_contraction_certificate(pair, tol));
    run.outputs.emplace_back("F", f.F);
    run.outputs.emplace_back("G", g.F);
    return emit(run);
}

int check_admissible_run(const std::string& path_p, const std::string& path_f,
                         const std::string& path_g, int degree, double tol) {
    RunReport run;
    run.command = "check-admissible";
    run.inputs.emplace_back("P", path_p);
    run.inputs.emplace_back("F", path_f);
    run.inputs.emplace_back("G", path_g);
    Contraction p(load_square(path_p), tol);
    run.reports.push_back(
        admissibility_check(p, load_square(path_f), load_square(path_g), degree, tol));
    return emit(run);
}

int synthesize_run(const std::string& path_p, const std::string& path_f,
                   const std::string& path_g, double tol) {
    RunReport run;
    run.command = "synthesize";
    run.inputs.emplace_back("P", path_p);
    run.inputs.emplace_back("F", path_f);
    run.inputs.emplace_back("G", path_g);
    Contraction p(load_square(path_p), tol);
    if (!classify(p).is_pure) throw NotPure("synthesize: P must be pure");
    Mat f = load_square(path_f);
    Mat g = load_square(path_g);
    Report adm = admissibility_check(p, f, g, -1, tol);
    run.reports.push_back(adm);
    if (!adm.pass()) return emit(run); // report names the first failing coefficient
    SynthesisResult res = synthesize_S(p, f, g);
    run.reports.push_back(res.certificate);
    run.outputs.emplace_back("S", res.S);
    return emit(run);
}

int synthesize_tetra_run(const std::vector<std::string>& paths, double tol) {
    RunReport run;
    run.command = "synthesize-tetra";
    run.inputs.emplace_back("P", paths[0]);
    run.inputs.emplace_back("F1", paths[1]);
    run.inputs.emplace_back("F2", paths[2]);
    run.inputs.emplace_back("G1", paths[3]);
    run.inputs.emplace_back("G2", paths[4]);
    Contraction p(load_square(paths[0]), tol);
    if (!classify(p).is_pure) throw NotPure("synthesize-tetra: P must be pure");
    Mat f1 = load_square(paths[1]);
    Mat f2 = load_square(paths[2]);
    Mat g1 = load_square(paths[3]);
    Mat g2 = load_square(paths[4]);
    Report adm = tetra_admissibility_check(p, f1, f2, g1, g2, -1, tol);
    run.reports.push_back(adm);
    if (!adm.pass()) return emit(run);
    TetraSynthesisResult res = synthesize_AB(p, f1, f2, g1, g2);
    run.reports.push_back(res.certificate);
    run.outputs.emplace_back("A", res.A);
    run.outputs.emplace_back("B", res.B);
    return emit(run);
}

int membership_run(const std::vector<double>& x, int grid) {
    RunReport run;
    run.command = "membership";
    MembershipResult mr = tetra_membership(Complex(x[0], x[1]), Complex(x[2], x[3]),
                                           Complex(x[4], x[5]), grid);
    run.facts.emplace_back("member", mr.member ? "true" : "false");
    Report rep;
    rep.name = "membership";
    rep.metrics["x1_re"] = x[0];
    rep.metrics["x1_im"] = x[1];
    rep.metrics["x2_re"] = x[2];
    rep.metrics["x2_im"] = x[3];
    rep.metrics["x3_re"] = x[4];
    rep.metrics["x3_im"] = x[5];
    rep.metrics["grid"] = static_cast<double>(grid);
    rep.metrics["margin"] = mr.margin; // +infinity sentinel serializes as null
    run.reports.push_back(std::move(rep));
    return emit(run);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fundamental operator toolkit for structured operator pairs"};
    app.require_subcommand(1);

    std::string path_p, path_f, path_g;
    std::vector<std::string> paths;
    std::vector<double> coords;
    double tol = 1e-8;
    int degree = -1;
    bool tetra = false;
    int grid = 256;
    unsigned long long seed = 42ULL;
    int cases = 10;
    int dim_max = 6;

    auto* analyze = app.add_subcommand("analyze", "classify a contraction");
    analyze->add_option("path_P", path_p, "matrix file of P")->required();
    analyze->add_option("--tol", tol, "contractivity tolerance");
    analyze->add_option("--degree", degree, "model truncation degree");

    auto* extract = app.add_subcommand("extract", "solve the fundamental equations");
    extract->add_option("paths", paths, "path_S path_P, or with --tetra: path_A path_B path_P")
        ->expected(2, 3)
        ->required();
    extract->add_option("--tol", tol, "residual tolerance");
    extract->add_flag("--tetra", tetra, "treat the files as a commuting triple");

    auto* admissible =
        app.add_subcommand("check-admissible", "test the coefficient identities");
    admissible->add_option("path_P", path_p, "matrix file of P")->required();
    admissible->add_option("path_F", path_f, "matrix file of F")->required();
    admissible->add_option("path_G", path_g, "matrix file of G")->required();
    admissible->add_option("--tol", tol, "residual tolerance");
    admissible->add_option("--degree", degree, "coefficient horizon");

    auto* synth = app.add_subcommand("synthesize", "rebuild S from P, F, G");
    synth->add_option("path_P", path_p, "matrix file of P (pure)")->required();
    synth->add_option("path_F", path_f, "matrix file of F")->required();
    synth->add_option("path_G", path_g, "matrix file of G")->required();
    synth->add_option("--tol", tol, "residual tolerance");

    auto* synth_t =
        app.add_subcommand("synthesize-tetra", "rebuild A, B from P and generators");
    synth_t->add_option("paths", paths, "path_P path_F1 path_F2 path_G1 path_G2")
        ->expected(5)
        ->required();
    synth_t->add_option("--tol", tol, "residual tolerance");

    auto* member = app.add_subcommand("membership", "scalar domain membership");
    member->add_option("coords", coords, "x1_re x1_im x2_re x2_im x3_re x3_im")
        ->expected(6)
        ->required();
    member->add_option("--grid", grid, "polar grid resolution (>= 64)");

    auto* verify = app.add_subcommand("verify-suite", "seeded self-validation sweep");
    verify->add_option("--seed", seed, "generator seed");
    verify->add_option("--cases", cases, "number of generated cases");
    verify->add_option("--dim-max", dim_max, "largest drawn dimension");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return analyze_run(path_p, degree, tol);
        if (*extract) return extract_run(paths, tetra, tol);
        if (*admissible) return check_admissible_run(path_p, path_f, path_g, degree, tol);
        if (*synth) return synthesize_run(path_p, path_f, path_g, tol);
        if (*synth_t) return synthesize_tetra_run(paths, tol);
        if (*member) return membership_run(coords, grid);
        return emit(verify_suite(seed, cases, dim_max));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool input_error = dynamic_cast<const ParseFailure*>(&e) != nullptr ||
                                 dynamic_cast<const NonSquare*>(&e) != nullptr ||
                                 dynamic_cast<const DimMismatch*>(&e) != nullptr ||
                                 dynamic_cast<const PreconditionFailed*>(&e) != nullptr ||
                                 dynamic_cast<const NotPure*>(&e) != nullptr ||
                                 dynamic_cast<const NotContraction*>(&e) != nullptr;
        return input_error ? 2 : 1;
    }
}
