// quanton: command-line front end for quanton-state analysis, particle
// equidistance verification, and CSV parameter sweeps.
//
// Exit codes: 0 success / verification pass, 1 verification fail,
// 2 usage or parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quanton/geometry.hpp"
#include "quanton/io.hpp"
#include "quanton/sampler.hpp"
#include "quanton/state.hpp"
#include "quanton/version.hpp"

namespace {

using namespace quanton;

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    double step = 0.01;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> g.start >> c1 >> g.stop >> c2 >> g.step) || c1 != ':' || c2 != ':' ||
        g.step <= 0.0 || g.stop < g.start)
        throw CLI::ValidationError("--grid", "expected start:stop:step with step > 0");
    return g;
}

std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> pts;
    const int n = static_cast<int>(std::round((g.stop - g.start) / g.step));
    for (int i = 0; i <= n; ++i) pts.push_back(g.start + i * g.step);
    if (!pts.empty() && pts.back() > g.stop) pts.back() = g.stop;
    return pts;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

int cmd_analyze(const std::string& path, double tol, bool as_json) {
    const StateFile sf = parse_state_file(path, tol);
    if (sf.renormalized)
        std::cerr << "warning: input renormalized (norm deviation above 1e-12)\n";

    const ExtractionResult r = extract_params(sf.state);
    const double c = concurrence(sf.state);
    const double residual = triality_residual(sf.state);
    const ParticleWitness w = min_particle_distance(sf.state);

    if (as_json) {
        nlohmann::json out{
            {"label", sf.label.value_or("")},
            {"D", r.params.d},
            {"V", r.params.v},
            {"C", c},
            {"alpha", r.params.alpha},
            {"beta", r.params.beta},
            {"predictability", r.predictability},
            {"path_swapped", r.path_swapped},
            {"triality_residual", residual},
            {"min_particle_distance", w.distance},
            {"witness_polarization",
             {{w.polarization[0].real(), w.polarization[0].imag()},
              {w.polarization[1].real(), w.polarization[1].imag()}}},
        };
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (sf.label) std::cout << "label: " << *sf.label << "\n";
    std::cout << "D (distinguishability): " << format_number(r.params.d) << "\n"
              << "V (visibility):         " << format_number(r.params.v) << "\n"
              << "C (concurrence):        " << format_number(c) << "\n"
              << "alpha:                  " << format_number(r.params.alpha) << "\n"
              << "beta:                   " << format_number(r.params.beta) << "\n"
              << "P (predictability):     " << format_number(r.predictability) << "\n"
              << "triality residual:      " << format_number(residual) << "\n"
              << "min particle distance:  " << format_number(w.distance) << "\n"
              << "witness polarization:   (" << format_number(w.polarization[0].real()) << ", "
              << format_number(w.polarization[0].imag()) << "), ("
              << format_number(w.polarization[1].real()) << ", "
              << format_number(w.polarization[1].imag()) << ")\n";
    if (r.path_swapped) std::cout << "note: paths relabeled so path 0 is dominant\n";
    return 0;
}

int cmd_sweep(const std::vector<double>& gammas, const GridSpec& grid, const std::string& out_path,
              const std::string& cmdline) {
    for (double g : gammas)
        if (!(g >= 0.0 && g <= 1.0))
            throw ConstraintError("gamma values must lie in [0, 1]");

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    CsvWriter csv(os, cmdline, std::nullopt, {"gamma", "dbar", "distance"});
    for (double g : gammas)
        for (double dbar : grid_points(grid))
            csv.write_row({g, dbar, particle_distance(g, dbar)});
    return 0;
}

int cmd_verify_equidistance(double dbar, std::uint64_t samples, std::uint64_t seed,
                            const std::string& out_path, double tol, const std::string& cmdline) {
    if (samples < 1) throw ConstraintError("--samples must be at least 1");

    // The fixed particle: |0> (x) (1, 0).
    StateVector4 particle;
    particle.amp[0] = 1.0;
    const PolarizationBasis particle_basis = PolarizationBasis::standard();

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    CsvWriter csv(os, cmdline, seed,
                  {"stream", "gamma", "measured_distance", "predicted_distance", "residual"});

    double max_residual = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const StateVector4 s = random_state_fixed_d(dbar, {seed, i});
        // gamma relates the particle's polarization to the sample's
        // path-0 conditional (the (1+dbar)/2 branch of the sampler).
        const OverlapParams ov = relative_overlap_params(particle_basis,
                                                         path_conditional_basis(s, 0));
        const double measured = bures_distance(particle, s);
        const double predicted = particle_distance(ov.gamma, dbar);
        const double residual = std::abs(measured - predicted);
        max_residual = std::max(max_residual, residual);
        csv.write_row({static_cast<double>(i), ov.gamma, measured, predicted, residual});
    }

    std::cout << "equidistance check: dbar=" << format_number(dbar) << " samples=" << samples
              << " max residual=" << format_number(max_residual)
              << (max_residual < tol ? " PASS" : " FAIL") << "\n";
    return max_residual < tol ? 0 : 1;
}

int cmd_pwe_triangle(const std::string& out_path, bool as_json) {
    // Canonical exemplars sharing phi0 = (1, 0).
    const StateVector4 particle{{Complex{1, 0}, 0, 0, 0}};
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const StateVector4 wave{{Complex{inv_sqrt2, 0}, 0, Complex{inv_sqrt2, 0}, 0}};
    const StateVector4 entanglon{{Complex{inv_sqrt2, 0}, 0, 0, Complex{inv_sqrt2, 0}}};

    const double d_pw = bures_distance(particle, wave);
    const double d_pe = bures_distance(particle, entanglon);
    const double d_ew = bures_distance(entanglon, wave);

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    if (as_json) {
        os << nlohmann::json{{"d_particle_wave", d_pw},
                             {"d_particle_entanglon", d_pe},
                             {"d_entanglon_wave", d_ew}}
                  .dump(2)
           << "\n";
    } else {
        os << "d(P, W) = " << format_number(d_pw) << "\n"
           << "d(P, E) = " << format_number(d_pe) << "\n"
           << "d(E, W) = " << format_number(d_ew) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quanton-state geometry: duality parameters, Bures distances, and the "
                 "particle-equidistance property"};
    app.set_version_flag("--version", std::string("quanton ") + quanton::kVersion);
    app.require_subcommand(1);
    const std::string cmdline = join_args(argc, argv);

    // analyze
    std::string state_path;
    double tol = 1e-9;
    bool as_json = false;
    auto* analyze = app.add_subcommand("analyze", "Report D, V, C, phases, triality residual, "
                                                  "and nearest-particle distance for a state file");
    analyze->add_option("state", state_path, "path to a JSON state file")->required();
    analyze->add_option("--tol", tol, "normalization tolerance");
    analyze->add_flag("--json", as_json, "machine-readable output");

    // sweep-particle-distance
    std::string gamma_list = "0,0.25,0.5,0.75,1";
    std::string grid_spec = "0:1:0.01";
    std::string out_path;
    auto* sweep = app.add_subcommand("sweep-particle-distance",
                                     "CSV of particle-to-quanton distance over (gamma, dbar)");
    sweep->add_option("--gamma-list", gamma_list, "comma-separated gamma values");
    sweep->add_option("--grid", grid_spec, "dbar grid as start:stop:step");
    sweep->add_option("--out", out_path, "output path ('-' for stdout)");

    // verify-equidistance
    double dbar = 0.5;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    double verify_tol = 1e-10;
    auto* verify = app.add_subcommand(
        "verify-equidistance",
        "Sample fixed-distinguishability states and check distance to the particle");
    verify->add_option("--dbar", dbar, "distinguishability of the sampled states")
        ->check(CLI::Range(0.0, 1.0));
    verify->add_option("--samples", samples, "number of sampled states");
    verify->add_option("--seed", seed, "generator seed");
    verify->add_option("--tol", verify_tol, "max allowed residual");
    verify->add_option("--out", out_path, "per-sample CSV output path");

    // pwe-triangle
    auto* pwe = app.add_subcommand("pwe-triangle",
                                   "Pairwise Bures distances of particle, wave, entanglon");
    pwe->add_option("--out", out_path, "output path ('-' for stdout)");
    pwe->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return cmd_analyze(state_path, tol, as_json);
        if (*sweep) {
            std::vector<double> gammas;
            std::istringstream in(gamma_list);
            std::string tok;
            while (std::getline(in, tok, ',')) gammas.push_back(std::stod(tok));
            return cmd_sweep(gammas, parse_grid(grid_spec), out_path, cmdline);
        }
        if (*verify) return cmd_verify_equidistance(dbar, samples, seed, out_path, verify_tol,
                                                    cmdline);
        if (*pwe) return cmd_pwe_triangle(out_path, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
