// sspvip command-line front end: generate instances, certify solver
// parameters, run the solver, and run the verification battery.

#include "sspvip/serialize.hpp"
#include "sspvip/solver.hpp"
#include "sspvip/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDiverged = 2;
constexpr int kExitVerifyFailed = 3;

struct CliOptions {
    std::string command;
    std::string instance_path;
    std::string out_path;
    std::uint64_t seed = 1;
    std::optional<double> lambda, gamma, rho;
    std::string alpha = "0.9";
    int max_iters = 10000;
    double tol_residual = 1e-10;
    double tol_step = 1e-15;
    double p1 = 2.0, p2 = 2.0;
    int dim1 = 4, dim2 = 3;
    std::string set1 = "box", set2 = "box";
    std::string moduli;
    int trials = 1000;
};

sspvip::Moduli parse_moduli(const std::string& text) {
    sspvip::Moduli m;
    if (text.empty()) return m;
    double vals[8];
    int count = 0;
    size_t pos = 0;
    while (count < 8 && pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        try {
            vals[count++] = std::stod(tok);
        } catch (const std::exception&) {
            throw sspvip::StructuralError("--moduli: bad number '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    sspvip::require(count == 8,
                    "--moduli expects 8 comma-separated values: "
                    "alpha1,beta1,alpha2,beta2,sigma1,eta1,sigma2,eta2");
    m.alpha1 = vals[0];
    m.beta1 = vals[1];
    m.alpha2 = vals[2];
    m.beta2 = vals[3];
    m.sigma1 = vals[4];
    m.eta1 = vals[5];
    m.sigma2 = vals[6];
    m.eta2 = vals[7];
    return m;
}

sspvip::GeneratorParams generator_params(const CliOptions& opt) {
    sspvip::GeneratorParams gp;
    gp.seed = opt.seed;
    gp.dim1 = opt.dim1;
    gp.dim2 = opt.dim2;
    gp.p1 = opt.p1;
    gp.p2 = opt.p2;
    gp.set1 = sspvip::set_kind_from_name(opt.set1);
    gp.set2 = sspvip::set_kind_from_name(opt.set2);
    gp.moduli = parse_moduli(opt.moduli);
    return gp;
}

sspvip::SspvipInstance obtain_instance(const CliOptions& opt) {
    if (!opt.instance_path.empty()) return sspvip::load_instance(opt.instance_path);
    return sspvip::generate_instance(generator_params(opt));
}

sspvip::SolverConfig solver_config(const CliOptions& opt, const sspvip::SspvipInstance& inst) {
    sspvip::SolverConfig cfg = sspvip::suggest_config(inst);
    if (opt.lambda) cfg.lambda = *opt.lambda;
    if (opt.gamma) cfg.gamma = *opt.gamma;
    if (opt.rho) cfg.rho = *opt.rho;
    cfg.alpha = sspvip::AlphaSequence::parse(opt.alpha);
    cfg.max_iters = opt.max_iters;
    cfg.tol_residual = opt.tol_residual;
    cfg.tol_step = opt.tol_step;
    return cfg;
}

int cmd_generate(const CliOptions& opt) {
    sspvip::SspvipInstance inst = sspvip::generate_instance(generator_params(opt));
    std::string out = opt.out_path.empty() ? "instance.json" : opt.out_path;
    sspvip::save_instance(inst, out);
    std::cout << "wrote " << out << " (known-solution residual "
              << sspvip::known_solution_residual(inst, 1.0, 1.0) << ")\n";
    return kExitOk;
}

int cmd_certify(const CliOptions& opt) {
    sspvip::SspvipInstance inst = obtain_instance(opt);
    sspvip::SolverConfig cfg = solver_config(opt, inst);
    sspvip::ContractionCertificate cert = sspvip::certificate(inst, cfg);
    std::string doc = sspvip::certificate_to_json(cert).dump(2) + "\n";
    if (!opt.out_path.empty()) sspvip::write_text_file(opt.out_path, doc);
    std::cout << doc;
    return kExitOk;
}

int cmd_solve(const CliOptions& opt) {
    sspvip::SspvipInstance inst = obtain_instance(opt);
    sspvip::SolverConfig cfg = solver_config(opt, inst);

    // deterministic start: a seeded unit perturbation off the C1 anchor
    sspvip::Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
    sspvip::Vec anchor = inst.set1.anchor(inst.space1);
    sspvip::Vec x0 = inst.set1.retract(inst.space1, anchor + rng.normal_vec(inst.space1.dim()));
    sspvip::Vec y0 = inst.set1.retract(inst.space1, anchor + rng.normal_vec(inst.space1.dim()));

    auto t0 = std::chrono::steady_clock::now();
    sspvip::SolveResult result = sspvip::solve_sspvip(inst, cfg, x0, y0);
    std::chrono::duration<double> wall = std::chrono::steady_clock::now() - t0;

    for (const auto& w : result.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    std::fprintf(stderr, "wall_time_seconds=%.6f\n", wall.count());

    std::string trace_path = opt.out_path.empty() ? "trace.csv" : opt.out_path;
    sspvip::write_text_file(trace_path, sspvip::trace_to_csv(result));
    std::string summary = sspvip::summary_to_json(result, cfg).dump(2) + "\n";
    sspvip::write_text_file(trace_path + ".summary.json", summary);
    std::cout << summary;

    bool converged = result.status == sspvip::SolveStatus::ConvergedResidual ||
                     result.status == sspvip::SolveStatus::ConvergedStep;
    return converged ? kExitOk : kExitDiverged;
}

int cmd_verify(const CliOptions& opt) {
    sspvip::VerifyReport report = sspvip::run_verification(opt.seed, opt.trials);
    std::string doc = sspvip::verify_report_to_json(report).dump(2) + "\n";
    if (!opt.out_path.empty()) sspvip::write_text_file(opt.out_path, doc);
    std::cout << doc;
    return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CliOptions opt;
    CLI::App app{"solver for systems of split variational inequality problems in l^p spaces"};
    app.add_option("--command", opt.command, "one of: generate | certify | solve | verify")
        ->required()
        ->check(CLI::IsMember({"generate", "certify", "solve", "verify"}));
    app.add_option("--instance", opt.instance_path, "instance file to load (otherwise generated)");
    app.add_option("--out", opt.out_path, "output path (trace table for solve)");
    app.add_option("--seed", opt.seed, "seed for generation, verification and start points");
    app.add_option("--lambda", opt.lambda, "step size for F/G (default: suggested)");
    app.add_option("--gamma", opt.gamma, "step size for f/g (default: suggested)");
    app.add_option("--rho", opt.rho, "coupling step (default: suggested)");
    app.add_option("--alpha", opt.alpha, "relaxation: constant in (0,1] or harmonic[:scale]");
    app.add_option("--max-iters", opt.max_iters, "iteration cap");
    app.add_option("--tol-residual", opt.tol_residual, "residual stopping tolerance");
    app.add_option("--tol-step", opt.tol_step, "step-size stopping tolerance");
    app.add_option("--p1", opt.p1, "exponent of space 1 (>= 2)");
    app.add_option("--p2", opt.p2, "exponent of space 2 (>= 2)");
    app.add_option("--dim1", opt.dim1, "dimension of space 1");
    app.add_option("--dim2", opt.dim2, "dimension of space 2");
    app.add_option("--set1", opt.set1, "C1 kind: whole|box|orthant|subspace|ball");
    app.add_option("--set2", opt.set2, "C2 kind: whole|box|orthant|subspace|ball");
    app.add_option("--moduli", opt.moduli,
                   "8 comma-separated moduli alpha1,beta1,alpha2,beta2,sigma1,eta1,sigma2,eta2");
    app.add_option("--trials", opt.trials, "samples per verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (opt.command == "generate") return cmd_generate(opt);
        if (opt.command == "certify") return cmd_certify(opt);
        if (opt.command == "solve") return cmd_solve(opt);
        if (opt.command == "verify") return cmd_verify(opt);
        std::fprintf(stderr, "error: unknown command '%s'\n", opt.command.c_str());
        return kExitUsage;
    } catch (const sspvip::StructuralError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
