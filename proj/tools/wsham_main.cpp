// Command-line front end: derive phase-space surfaces, verify the duality
// and redundancy properties, and run the desk-scale simulations.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration error.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wsham/pipeline.hpp"

namespace {

struct CommonArgs {
    std::string model;
    double mass = 0.0;
    std::string metric = "diag:1,-1";
    double c0 = 0.25;
    double phi0 = 0.0;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
};

wsham::Mat parse_metric(const std::string& spec) {
    if (spec.rfind("diag:", 0) != 0)
        throw wsham::ConfigError("metric must look like diag:1,-1,-1");
    std::vector<double> d;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) d.push_back(std::stod(item));
    if (d.empty()) throw wsham::ConfigError("metric needs at least one entry");
    wsham::Mat g(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) g(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return g;
}

wsham::ModelSpec make_model(const CommonArgs& a) {
    if (a.model == "kg1p1") return wsham::kg_1p1(a.mass);
    if (a.model == "scalar-ndim")
        return wsham::scalar_ndim(parse_metric(a.metric),
                                  wsham::scalar_mass_potential(a.mass));
    if (a.model == "ed1p1") {
        if (a.phi0 != 0.0)
            throw wsham::ConfigError("only Phi = 0 is supported (--phi0 0)");
        return wsham::electrodynamics_1p1(a.c0);
    }
    throw wsham::ConfigError("unknown model '" + a.model +
                             "' (kg1p1, scalar-ndim, ed1p1)");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path().empty() ? "."
                                                                   : path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw wsham::ConfigError("cannot write " + path.string());
    f << content;
}

void add_model_options(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("model,--model", a.model, "model name: kg1p1, scalar-ndim, ed1p1");
    cmd->add_option("--mass", a.mass, "scalar mass");
    cmd->add_option("--metric", a.metric, "scalar-ndim metric, e.g. diag:1,-1,-1");
    cmd->add_option("--c0", a.c0, "ED coupling c0 (C = 2 c0)");
    cmd->add_option("--phi0", a.phi0, "ED potential constant (must be 0)");
    cmd->add_option("--seed", a.seed, "RNG seed, recorded in every output");
    cmd->add_option("--out", a.out_dir, "output directory");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"worldsheet Hamiltonian mechanics toolkit"};
    // --h is a grid-spacing option below, so help stays long-form only.
    app.set_help_flag("--help", "print this help message");
    app.require_subcommand(1);

    CommonArgs derive_args, verify_args, sim_args;
    int samples = 1000;
    double tol = 1e-9;
    int nodes = 256;
    double h_opt = 0.0;
    double dt = 0.0, T = 10.0;
    int stride = 0;
    double wave_k = 1.0, f01 = 0.7;

    CLI::App* derive = app.add_subcommand("derive", "derive the phase-space surface");
    add_model_options(derive, derive_args);

    CLI::App* verify = app.add_subcommand("verify", "run the property suites");
    add_model_options(verify, verify_args);
    verify->add_option("--samples", samples, "sample count per suite");
    verify->add_option("--tol", tol, "membership/redundancy tolerance");

    CLI::App* simulate = app.add_subcommand("simulate", "integrate on a periodic grid");
    simulate->set_help_flag("--help", "print this help message");
    add_model_options(simulate, sim_args);
    simulate->add_option("--nodes", nodes, "grid nodes on [0, 2*pi)");
    simulate->add_option("--h", h_opt, "grid spacing (alternative to --nodes)");
    simulate->add_option("--dt", dt, "time step (default h/2)");
    simulate->add_option("--T", T, "integration time");
    simulate->add_option("--stride", stride, "snapshot stride in steps (0 = auto)");
    simulate->add_option("--k", wave_k, "scalar initial wave number");
    simulate->add_option("--f01", f01, "ED initial field strength");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*derive) {
            const wsham::ModelSpec model = make_model(derive_args);
            const wsham::DeriveOutput out = wsham::derive_surface(model);
            std::filesystem::path dir(derive_args.out_dir);
            write_file(dir / "surface.json",
                       out.surface_json(model, derive_args.seed).dump(2) + "\n");
            std::string log;
            for (const auto& line : out.log) log += line + "\n";
            write_file(dir / "derivation.log", log);
            std::cout << log;
            std::cout << "wrote " << (dir / "surface.json").string() << "\n";
            return 0;
        }
        if (*verify) {
            const wsham::ModelSpec model = make_model(verify_args);
            wsham::VerifyOptions opt;
            opt.samples = samples;
            opt.seed = verify_args.seed;
            opt.tol = tol;
            const wsham::VerifyOutput out = wsham::verify_model(model, opt);
            const auto report = out.report(model, opt);
            std::filesystem::path dir(verify_args.out_dir);
            write_file(dir / "report.json", report.dump(2) + "\n");
            for (const auto& c : out.checks)
                std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.name << "  value "
                          << wsham::format_double(c.value) << "  bounds ["
                          << wsham::format_double(c.bound_lo) << ", "
                          << wsham::format_double(c.bound_hi) << "]\n";
            std::cout << (out.pass ? "verification passed\n" : "verification FAILED\n");
            return out.pass ? 0 : 1;
        }
        // simulate
        const wsham::ModelSpec model = make_model(sim_args);
        wsham::SimulateOptions opt;
        if (h_opt > 0.0) nodes = static_cast<int>(std::lround(2.0 * M_PI / h_opt));
        opt.nodes = nodes;
        opt.dt = dt;
        opt.T = T;
        opt.stride = stride;
        opt.seed = sim_args.seed;
        opt.wave_number = wave_k;
        opt.f01 = f01;
        const wsham::SimulateOutput out = wsham::simulate_model(model, opt);
        std::filesystem::path dir(sim_args.out_dir);
        write_file(dir / "trajectory.csv", out.trajectory_csv);
        write_file(dir / "diagnostics.csv", out.diagnostics_csv);
        write_file(dir / "summary.json", out.summary.dump(2) + "\n");
        std::cout << out.summary.dump(2) << "\n";
        return 0;
    } catch (const wsham::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const wsham::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
