// almg: batch CLI for spectra, classical-limit data, work statistics and
// finite-size scaling of the anharmonic LMG model. Every command writes CSV
// data plus a JSON run manifest that replays to byte-identical CSVs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "almg/analysis.hpp"
#include "almg/classical.hpp"
#include "almg/csv.hpp"
#include "almg/eigensolve.hpp"
#include "almg/errors.hpp"
#include "almg/model.hpp"
#include "almg/parallel.hpp"
#include "almg/version.hpp"
#include "almg/workstats.hpp"
#include "manifest.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace almg;

namespace {

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    throw ParameterError("parity must be 'even' or 'odd'");
}

std::vector<double> uniform_grid(double from, double to, double step) {
    if (!(step > 0.0) || to < from)
        throw ParameterError("bad grid: need from <= to and step > 0");
    std::vector<double> g;
    const long n = std::lround((to - from) / step);
    for (long i = 0; i <= n; ++i) g.push_back(from + i * step);
    return g;
}

using FileList = std::vector<std::string>;

// ---------------------------------------------------------------- spectrum

FileList run_spectrum(const json& P, const fs::path& out) {
    ModelParams mp{P.at("N").get<int>(), 0.0, P.at("alpha").get<double>()};
    const Parity parity = parse_parity(P.at("parity").get<std::string>());
    FileList files;

    if (P.value("sweep", false)) {
        const auto grid = uniform_grid(P.at("gamma_from").get<double>(),
                                       P.at("gamma_to").get<double>(),
                                       P.at("gamma_step").get<double>());
        mp.gamma = grid.empty() ? 0.0 : grid.front();
        mp.validate();
        std::vector<Spectrum> specs(grid.size());
        parallel_for(grid.size(), [&](std::size_t i) {
            ModelParams g = mp;
            g.gamma = grid[i];
            specs[i] = solve_sector(g, parity, false);
        });
        csv::Writer w((out / "levelflow.csv").string(),
                      {"gamma", "n", "E_n", "epsilon_n"});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto eps = excitation_energies(specs[i]);
            for (std::size_t n = 0; n < eps.size(); ++n)
                w.row({grid[i], static_cast<long long>(n), specs[i].values[n], eps[n]});
        }
        files.push_back("levelflow.csv");
        return files;
    }

    mp.gamma = P.at("gamma").get<double>();
    mp.validate();
    if (P.value("dump_dense", false) && mp.N > 40)
        throw ParameterError("dense dump limited to N <= 40");
    const auto spec = solve_sector(mp, parity, false);
    const auto eps = excitation_energies(spec);
    csv::Writer w((out / "spectrum.csv").string(), {"n", "E_n", "epsilon_n"});
    for (std::size_t n = 0; n < eps.size(); ++n)
        w.row({static_cast<long long>(n), spec.values[n], eps[n]});
    files.push_back("spectrum.csv");

    if (P.value("dump_dense", false)) {
        const auto sector = build_sector(mp, parity);
        const auto op = build_hamiltonian(mp, sector);
        dump_dense_csv(mp, sector, op, (out / "dense.csv").string());
        files.push_back("dense.csv");
    }
    return files;
}

// --------------------------------------------------------------------- dos

std::vector<double> eps_for_parity(const ModelParams& mp, const std::string& parity) {
    if (parity == "both") return merged_excitation_energies(mp);
    const auto spec = solve_sector(mp, parse_parity(parity), false);
    return excitation_energies(spec);
}

FileList run_dos(const json& P, const fs::path& out) {
    ModelParams mp{P.at("N").get<int>(), 0.0, P.at("alpha").get<double>()};
    const std::string parity = P.value("parity", std::string("both"));

    if (P.value("mode", std::string("hist")) == "slice") {
        const double eps0 = P.at("eps_slice").get<double>();
        const double hw = P.at("slice_halfwidth").get<double>();
        const auto grid = uniform_grid(P.at("gamma_from").get<double>(),
                                       P.at("gamma_to").get<double>(),
                                       P.at("gamma_step").get<double>());
        mp.gamma = grid.empty() ? 0.0 : grid.front();
        mp.validate();
        std::vector<double> rho(grid.size());
        parallel_for(grid.size(), [&](std::size_t i) {
            ModelParams g = mp;
            g.gamma = grid[i];
            const auto eps = eps_for_parity(g, parity);
            long long cnt = 0;
            for (double e : eps)
                if (e >= eps0 - hw && e < eps0 + hw) ++cnt;
            rho[i] = static_cast<double>(cnt) / (2.0 * hw * g.N);
        });
        csv::Writer w((out / "dos_slice.csv").string(), {"gamma", "epsilon", "rho_tilde"});
        for (std::size_t i = 0; i < grid.size(); ++i) w.row({grid[i], eps0, rho[i]});
        return {"dos_slice.csv"};
    }

    mp.gamma = P.at("gamma").get<double>();
    mp.validate();
    const auto eps = eps_for_parity(mp, parity);
    const int bins = P.value("bins", 0) > 0
                         ? P.at("bins").get<int>()
                         : std::max<std::size_t>(50, eps.size() / 20);
    const auto hist = make_dos_histogram(eps, bins, mp.N, P.value("eps_max", 0.0));
    csv::Writer w((out / "dos.csv").string(),
                  {"epsilon_lo", "epsilon_hi", "epsilon", "count", "rho_tilde"});
    for (int b = 0; b < hist.bins(); ++b)
        w.row({b * hist.width(), (b + 1) * hist.width(), hist.center(b),
               static_cast<long long>(hist.counts[b]), hist.rescaled[b]});
    return {"dos.csv"};
}

FileList run_dos_sc(const json& P, const fs::path& out) {
    const auto dos = semiclassical_dos(P.at("gamma").get<double>(),
                                       P.at("alpha").get<double>(),
                                       P.at("bins").get<int>(),
                                       P.value("eps_max", 0.0),
                                       P.at("samples").get<long long>(),
                                       P.at("seed").get<std::uint64_t>());
    csv::Writer w((out / "dos_sc.csv").string(), {"epsilon", "rho", "stderr"});
    for (const auto& b : dos.bins)
        w.row({0.5 * (b.eps_lo + b.eps_hi), b.rho, b.stderr_rho});
    return {"dos_sc.csv"};
}

// ------------------------------------------------------------------ quench

QuenchSpec quench_spec_from(const json& P) {
    QuenchSpec qs;
    qs.N = P.at("N").get<int>();
    qs.gamma_i = P.at("gamma_i").get<double>();
    qs.alpha = P.at("alpha").get<double>();
    qs.parity = parse_parity(P.value("parity", std::string("even")));
    if (P.contains("dgamma_tilde")) {
        const auto cq = critical_quench(qs.gamma_i, qs.alpha, P.at("esqpt").get<int>());
        qs.delta_gamma = P.at("dgamma_tilde").get<double>() * cq.value;
    } else {
        qs.delta_gamma = P.at("dgamma").get<double>();
    }
    const std::string init = P.value("initial", std::string("ground"));
    if (init == "ground") qs.initial = InitialState::Ground;
    else if (init == "highest") qs.initial = InitialState::Highest;
    else if (init == "index") {
        qs.initial = InitialState::Index;
        qs.index = P.at("index").get<int>();
    } else {
        throw ParameterError("initial must be ground|highest|index");
    }
    return qs;
}

FileList run_quench(const json& P, const fs::path& out) {
    const QuenchSpec qs = quench_spec_from(P);
    const auto wd = quench_distribution(qs);
    const auto pairs = merged_work_pairs(wd, 1e-12 * qs.N);
    csv::Writer w((out / "work.csv").string(), {"W", "P"});
    for (const auto& [W, p] : pairs) w.row({W, p});

    json summary;
    summary["N"] = qs.N;
    summary["gamma_i"] = qs.gamma_i;
    summary["gamma_f"] = qs.gamma_f();
    summary["delta_gamma"] = qs.delta_gamma;
    summary["alpha"] = qs.alpha;
    summary["parity"] = to_string(qs.parity);
    summary["initial_index"] = wd.initial_index;
    summary["initial_energy"] = wd.initial_energy;
    summary["entropy"] = wd.entropy;
    summary["mean_work"] = wd.mean;
    summary["variance_work"] = wd.variance;
    summary["support"] = wd.support();
    std::ofstream js(out / "quench_summary.json", std::ios::binary);
    js << summary.dump(2) << '\n';
    return {"work.csv", "quench_summary.json"};
}

// ----------------------------------------------------------- entropy sweep

FileList run_entropy_sweep(const json& P, const fs::path& out) {
    std::vector<double> grid;
    const double from = P.value("grid_from", 0.2);
    const double to = P.value("grid_to", 1.8);
    const int npts = P.value("grid_points", 161);
    if (npts < 3 || !(to > from))
        throw ParameterError("bad sweep grid");
    for (int i = 0; i < npts; ++i)
        grid.push_back(from + (to - from) * i / (npts - 1));

    const auto sw = entropy_sweep(P.at("esqpt").get<int>(), P.at("gamma_i").get<double>(),
                                  P.at("alpha").get<double>(), P.at("N").get<int>(), grid);
    csv::Writer w((out / "sweep.csv").string(),
                  {"dgamma_tilde", "dgamma", "gamma_f", "S_W"});
    for (std::size_t i = 0; i < sw.grid.size(); ++i) {
        const double dg = sw.grid[i] * sw.critical_quench;
        w.row({sw.grid[i], dg, sw.gamma_i + dg, sw.entropies[i]});
    }
    json summary;
    summary["esqpt"] = sw.which;
    summary["N"] = sw.N;
    summary["gamma_i"] = sw.gamma_i;
    summary["alpha"] = sw.alpha;
    summary["critical_quench"] = sw.critical_quench;
    summary["argmax_dgamma_tilde"] = sw.argmax;
    summary["max_entropy"] = sw.max_entropy;
    summary["dropped_points"] = sw.dropped;
    std::ofstream js(out / "sweep_summary.json", std::ios::binary);
    js << summary.dump(2) << '\n';
    return {"sweep.csv", "sweep_summary.json"};
}

FileList run_entropy_energy(const json& P, const fs::path& out) {
    const auto ee = entropy_vs_energy(P.at("gamma_i").get<double>(),
                                      P.at("alpha").get<double>(),
                                      P.at("N").get<int>(),
                                      P.at("dgamma").get<double>(),
                                      parse_parity(P.value("parity", std::string("even"))));
    csv::Writer w((out / "entropy_energy.csv").string(), {"n", "epsilon_n", "S_W"});
    for (std::size_t n = 0; n < ee.eps.size(); ++n)
        w.row({static_cast<long long>(n), ee.eps[n], ee.entropy[n]});
    return {"entropy_energy.csv"};
}

FileList run_scaling(const json& P, const fs::path& out) {
    std::vector<int> sizes = P.value("sizes", std::vector<int>{200, 400, 800, 1600, 3200});
    const auto fit = scaling_fit(P.at("esqpt").get<int>(), P.at("gamma_i").get<double>(),
                                 P.at("alpha").get<double>(), sizes);
    csv::Writer w((out / "scaling.csv").string(),
                  {"N", "dgamma_tilde_m", "S_W_m"});
    for (std::size_t i = 0; i < fit.sizes.size(); ++i)
        w.row({static_cast<long long>(fit.sizes[i]), fit.argmax[i], fit.max_entropy[i]});

    json report;
    report["esqpt"] = fit.which;
    report["gamma_i"] = fit.gamma_i;
    report["alpha"] = fit.alpha;
    report["sizes"] = fit.sizes;
    report["mu"] = fit.mu;
    report["mu_stderr"] = fit.mu_se;
    report["mu_r2"] = fit.mu_r2;
    report["nu"] = fit.nu;
    report["nu_stderr"] = fit.nu_se;
    report["nu_r2"] = fit.nu_r2;
    report["low_confidence"] = fit.low_confidence;
    std::ofstream js(out / "scaling.json", std::ios::binary);
    js << report.dump(2) << '\n';
    return {"scaling.csv", "scaling.json"};
}

// --------------------------------------------------------------- classical

FileList run_fixed_points(const json& P, const fs::path& out) {
    const auto rep = find_fixed_points(P.at("gamma").get<double>(), P.at("alpha").get<double>());
    csv::Writer w((out / "fixed_points.csv").string(), {"p", "q", "energy", "stability"});
    for (const auto& fp : rep.points)
        w.row({fp.pt.p, fp.pt.q, fp.energy, std::string(to_string(fp.stability))});
    return {"fixed_points.csv"};
}

FileList run_critical_energies(const json& P, const fs::path& out) {
    const auto ce = critical_energies(P.at("gamma").get<double>(), P.at("alpha").get<double>());
    csv::Writer w((out / "critical_energies.csv").string(),
                  {"gamma", "alpha", "eps_c1", "eps_c2"});
    w.row({ce.gamma, ce.alpha,
           ce.eps_c1 ? csv::Value(*ce.eps_c1) : csv::Value(std::string("nan")), ce.eps_c2});
    if (ce.eps_c1)
        std::cout << "eps_c1 = " << csv::format(*ce.eps_c1) << '\n';
    else
        std::cout << "eps_c1 absent (gamma < 1/3)\n";
    std::cout << "eps_c2 = " << csv::format(ce.eps_c2) << '\n';
    return {"critical_energies.csv"};
}

FileList run_evolve(const json& P, const fs::path& out) {
    const double gamma = P.at("gamma").get<double>();
    const double alpha = P.at("alpha").get<double>();
    const double dt = P.at("dt").get<double>();
    const long stride = P.value("stride", 1L);
    if (stride < 1) throw ParameterError("stride must be >= 1");
    const auto traj = integrate_trajectory(gamma, alpha,
                                           {P.at("p0").get<double>(), P.at("q0").get<double>()},
                                           dt, P.at("steps").get<long>());
    csv::Writer w((out / "trajectory.csv").string(), {"t", "p", "q", "H_c"});
    for (std::size_t i = 0; i < traj.points.size(); i += stride)
        w.row({i * dt, traj.points[i].p, traj.points[i].q,
               classical_hamiltonian(gamma, alpha, traj.points[i])});
    if (traj.boundary_exit)
        std::cerr << "warning: trajectory left the phase-space disk; truncated\n";
    return {"trajectory.csv"};
}

FileList run_gs_qpt(const json& P, const fs::path& out) {
    const auto grid = uniform_grid(P.at("gamma_from").get<double>(),
                                   P.at("gamma_to").get<double>(),
                                   P.at("gamma_step").get<double>());
    const auto marker = gs_qpt_marker(P.at("alpha").get<double>(), P.at("N").get<int>(), grid);
    csv::Writer w((out / "gsqpt.csv").string(), {"gamma", "d2e0_dgamma2"});
    for (const auto& [g, d2] : marker) w.row({g, d2});
    return {"gsqpt.csv"};
}

// ---------------------------------------------------------------- dispatch

FileList dispatch(const std::string& command, const json& P, const fs::path& out) {
    if (command == "spectrum") return run_spectrum(P, out);
    if (command == "dos") return run_dos(P, out);
    if (command == "dos-sc") return run_dos_sc(P, out);
    if (command == "quench") return run_quench(P, out);
    if (command == "entropy-sweep") return run_entropy_sweep(P, out);
    if (command == "entropy-energy") return run_entropy_energy(P, out);
    if (command == "scaling") return run_scaling(P, out);
    if (command == "classical fixed-points") return run_fixed_points(P, out);
    if (command == "classical critical-energies") return run_critical_energies(P, out);
    if (command == "classical evolve") return run_evolve(P, out);
    if (command == "gs-qpt") return run_gs_qpt(P, out);
    throw ParameterError("unknown command in manifest: " + command);
}

std::string manifest_filename(std::string command) {
    for (char& c : command)
        if (c == ' ' || c == '-') c = '_';
    return command + "_manifest.json";
}

int execute(const std::string& command, const json& params, const fs::path& outdir) {
    cli::Manifest m;
    m.command = command;
    m.parameters = params;
    m.seed = params.value("seed", std::uint64_t{0});
    m.created_utc = cli::utc_now();
    fs::create_directories(outdir);
    const FileList files = dispatch(command, params, outdir);
    for (const auto& f : files) m.add_output(outdir, f);
    m.completed_utc = cli::utc_now();
    m.write(outdir / manifest_filename(command));
    std::cout << command << ": wrote " << files.size() << " file(s) + manifest to "
              << outdir.string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anharmonic LMG model: spectra, classical limit, work statistics"};
    app.set_version_flag("--version", almg::kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::string outdir = ".";
    app.add_option("--out", outdir, "output directory (created if missing)")
        ->capture_default_str();

    // shared option targets
    int N = 0, bins = 0, esqpt = 1, index = 0, grid_points = 161, steps = 0;
    long long samples = 1000000;
    std::uint64_t seed = 12345;
    double gamma = 0, alpha = 0, gamma_i = 0, dgamma = 0, dgamma_tilde = 0;
    double gamma_from = 0, gamma_to = 0, gamma_step = 0.01;
    double eps_slice = 0, slice_halfwidth = 0.01, eps_max = 0;
    double grid_from = 0.2, grid_to = 1.8;
    double p0 = 0, q0 = 0, dt = 1e-3;
    long stride = 1;
    std::string parity = "even", parity_dos = "both", initial = "ground";
    std::string sizes_str = "200,400,800,1600,3200";
    int bins_sc = 400;
    double dgamma_ee = 0.001;
    std::string manifest_path;
    bool dump_dense = false;

    auto* sp = app.add_subcommand("spectrum", "eigenvalues of one parity sector");
    sp->add_option("--N", N, "number of spins (even)")->required();
    auto* sp_g = sp->add_option("--gamma", gamma, "control parameter");
    sp->add_option("--alpha", alpha, "anharmonicity strength")->required();
    sp->add_option("--parity", parity, "even|odd")->capture_default_str();
    auto* sp_gf = sp->add_option("--gamma-from", gamma_from, "sweep start");
    sp->add_option("--gamma-to", gamma_to, "sweep end");
    sp->add_option("--gamma-step", gamma_step, "sweep step")->capture_default_str();
    sp->add_flag("--dump-dense", dump_dense, "also dump the dense sector matrix (N <= 40)");

    auto* ds = app.add_subcommand("dos", "rescaled quantum density of states");
    ds->add_option("--N", N)->required();
    ds->add_option("--alpha", alpha)->required();
    auto* ds_g = ds->add_option("--gamma", gamma);
    ds->add_option("--bins", bins, "0 = default max(50, levels/20)");
    ds->add_option("--parity", parity_dos, "even|odd|both")->capture_default_str();
    ds->add_option("--eps-max", eps_max, "histogram range (0 = spectrum max)");
    auto* ds_slice = ds->add_option("--eps-slice", eps_slice, "fixed epsilon; scan gamma");
    ds->add_option("--slice-halfwidth", slice_halfwidth)->capture_default_str();
    ds->add_option("--gamma-from", gamma_from);
    ds->add_option("--gamma-to", gamma_to);
    ds->add_option("--gamma-step", gamma_step)->capture_default_str();

    auto* dsc = app.add_subcommand("dos-sc", "Monte Carlo semiclassical density of states");
    dsc->add_option("--gamma", gamma)->required();
    dsc->add_option("--alpha", alpha)->required();
    dsc->add_option("--bins", bins_sc)->capture_default_str();
    dsc->add_option("--samples", samples)->capture_default_str();
    dsc->add_option("--seed", seed)->capture_default_str();
    dsc->add_option("--eps-max", eps_max, "range (0 = full classical range)");

    auto* qc = app.add_subcommand("quench", "two-point-measurement work distribution");
    qc->add_option("--N", N)->required();
    qc->add_option("--gamma-i", gamma_i)->required();
    qc->add_option("--alpha", alpha)->required();
    auto* qc_dg = qc->add_option("--dgamma", dgamma, "quench strength");
    auto* qc_dgt = qc->add_option("--dgamma-tilde", dgamma_tilde,
                                  "rescaled strength; needs --esqpt");
    qc->add_option("--esqpt", esqpt, "1|2 (selects the critical quench scale)");
    qc->add_option("--initial", initial, "ground|highest|index")->capture_default_str();
    qc->add_option("--index", index, "initial eigenstate index");
    qc->add_option("--parity", parity)->capture_default_str();

    auto* es = app.add_subcommand("entropy-sweep", "S_W over rescaled quench strengths");
    es->add_option("--esqpt", esqpt)->required();
    es->add_option("--N", N)->required();
    es->add_option("--gamma-i", gamma_i)->required();
    es->add_option("--alpha", alpha)->required();
    es->add_option("--grid-from", grid_from)->capture_default_str();
    es->add_option("--grid-to", grid_to)->capture_default_str();
    es->add_option("--grid-points", grid_points)->capture_default_str();

    auto* ee = app.add_subcommand("entropy-energy", "S_W of every initial eigenstate");
    ee->add_option("--N", N)->required();
    ee->add_option("--gamma-i", gamma_i)->required();
    ee->add_option("--alpha", alpha)->required();
    ee->add_option("--dgamma", dgamma_ee)->capture_default_str();
    ee->add_option("--parity", parity)->capture_default_str();

    auto* sc = app.add_subcommand("scaling", "finite-size scaling fit (mu, nu)");
    sc->add_option("--esqpt", esqpt)->required();
    sc->add_option("--gamma-i", gamma_i)->required();
    sc->add_option("--alpha", alpha)->required();
    sc->add_option("--sizes", sizes_str, "comma-separated N list")->capture_default_str();

    auto* cl = app.add_subcommand("classical", "classical-limit analyses");
    cl->require_subcommand(1);
    auto* cfp = cl->add_subcommand("fixed-points", "stationary points and stability");
    cfp->add_option("--gamma", gamma)->required();
    cfp->add_option("--alpha", alpha)->required();
    auto* cce = cl->add_subcommand("critical-energies", "ESQPT critical energies");
    cce->add_option("--gamma", gamma)->required();
    cce->add_option("--alpha", alpha)->required();
    auto* cev = cl->add_subcommand("evolve", "RK4 trajectory in the phase-space disk");
    cev->add_option("--gamma", gamma)->required();
    cev->add_option("--alpha", alpha)->required();
    cev->add_option("--p0", p0)->required();
    cev->add_option("--q0", q0)->required();
    cev->add_option("--dt", dt)->capture_default_str();
    cev->add_option("--steps", steps)->required();
    cev->add_option("--stride", stride, "record every k-th point")->capture_default_str();

    auto* gq = app.add_subcommand("gs-qpt", "second difference of the ground energy density");
    gq->add_option("--alpha", alpha)->required();
    gq->add_option("--N", N)->required();
    gq->add_option("--gamma-from", gamma_from)->required();
    gq->add_option("--gamma-to", gamma_to)->required();
    gq->add_option("--gamma-step", gamma_step)->capture_default_str();

    auto* rp = app.add_subcommand("replay", "re-run a manifest to identical CSVs");
    rp->add_option("manifest", manifest_path, "path to a *_manifest.json")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        json P;
        if (sp->parsed()) {
            P["N"] = N;
            P["alpha"] = alpha;
            P["parity"] = parity;
            if (sp_gf->count()) {
                P["sweep"] = true;
                P["gamma_from"] = gamma_from;
                P["gamma_to"] = gamma_to;
                P["gamma_step"] = gamma_step;
            } else if (sp_g->count()) {
                P["gamma"] = gamma;
                P["dump_dense"] = dump_dense;
            } else {
                throw ParameterError("spectrum needs --gamma or --gamma-from/--gamma-to");
            }
            return execute("spectrum", P, outdir);
        }
        if (ds->parsed()) {
            P["N"] = N;
            P["alpha"] = alpha;
            P["parity"] = parity_dos;
            if (ds_slice->count()) {
                P["mode"] = "slice";
                P["eps_slice"] = eps_slice;
                P["slice_halfwidth"] = slice_halfwidth;
                P["gamma_from"] = gamma_from;
                P["gamma_to"] = gamma_to;
                P["gamma_step"] = gamma_step;
            } else if (ds_g->count()) {
                P["mode"] = "hist";
                P["gamma"] = gamma;
                P["bins"] = bins;
                P["eps_max"] = eps_max;
            } else {
                throw ParameterError("dos needs --gamma or --eps-slice");
            }
            return execute("dos", P, outdir);
        }
        if (dsc->parsed()) {
            P = {{"gamma", gamma}, {"alpha", alpha}, {"bins", bins_sc},
                 {"samples", samples}, {"seed", seed}, {"eps_max", eps_max}};
            return execute("dos-sc", P, outdir);
        }
        if (qc->parsed()) {
            P = {{"N", N}, {"gamma_i", gamma_i}, {"alpha", alpha},
                 {"parity", parity}, {"initial", initial}};
            if (initial == "index") P["index"] = index;
            if (qc_dgt->count()) {
                P["dgamma_tilde"] = dgamma_tilde;
                P["esqpt"] = esqpt;
            } else if (qc_dg->count()) {
                P["dgamma"] = dgamma;
            } else {
                throw ParameterError("quench needs --dgamma or --dgamma-tilde");
            }
            return execute("quench", P, outdir);
        }
        if (es->parsed()) {
            P = {{"esqpt", esqpt}, {"N", N}, {"gamma_i", gamma_i}, {"alpha", alpha},
                 {"grid_from", grid_from}, {"grid_to", grid_to}, {"grid_points", grid_points}};
            return execute("entropy-sweep", P, outdir);
        }
        if (ee->parsed()) {
            P = {{"N", N}, {"gamma_i", gamma_i}, {"alpha", alpha},
                 {"dgamma", dgamma_ee}, {"parity", parity}};
            return execute("entropy-energy", P, outdir);
        }
        if (sc->parsed()) {
            std::vector<int> sizes;
            std::stringstream ss(sizes_str);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (!tok.empty()) sizes.push_back(std::stoi(tok));
            P = {{"esqpt", esqpt}, {"gamma_i", gamma_i}, {"alpha", alpha}, {"sizes", sizes}};
            return execute("scaling", P, outdir);
        }
        if (cfp->parsed()) {
            P = {{"gamma", gamma}, {"alpha", alpha}};
            return execute("classical fixed-points", P, outdir);
        }
        if (cce->parsed()) {
            P = {{"gamma", gamma}, {"alpha", alpha}};
            return execute("classical critical-energies", P, outdir);
        }
        if (cev->parsed()) {
            P = {{"gamma", gamma}, {"alpha", alpha}, {"p0", p0}, {"q0", q0},
                 {"dt", dt}, {"steps", steps}, {"stride", stride}};
            return execute("classical evolve", P, outdir);
        }
        if (gq->parsed()) {
            P = {{"alpha", alpha}, {"N", N}, {"gamma_from", gamma_from},
                 {"gamma_to", gamma_to}, {"gamma_step", gamma_step}};
            return execute("gs-qpt", P, outdir);
        }
        if (rp->parsed()) {
            const auto m = cli::Manifest::load(manifest_path);
            return execute(m.command, m.parameters, outdir);
        }
        throw ParameterError("no command given");
    } catch (const ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
