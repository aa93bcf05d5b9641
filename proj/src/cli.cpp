#include "lzs/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lzs/config.hpp"
#include "lzs/dynamics.hpp"
#include "lzs/errors.hpp"
#include "lzs/grid_io.hpp"
#include "lzs/lz_rates.hpp"
#include "lzs/steady_state.hpp"
#include "lzs/sweep.hpp"
#include "lzs/verify.hpp"

namespace lzs {
namespace {

int resolve_threads(int cli_threads, bool cli_given) {
    if (cli_given) return cli_threads;
    if (const char* env = std::getenv("LZS_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
    }
    return 0;  // auto
}

Model resolve_model(const RunConfig& cfg, const std::string& override_name) {
    if (override_name.empty()) return cfg.model;
    try {
        return model_from_name(override_name);
    } catch (const std::invalid_argument& e) {
        throw config_error(e.what());
    }
}

void require_crossings(const QubitSpec& q, Model model) {
    auto need = [&q](int i, int j) {
        q.crossing(i, j);  // throws std::out_of_range when undeclared
    };
    try {
        switch (model) {
            case Model::first_diamond: need(0, 2); need(1, 2); break;
            case Model::second_diamond: need(0, 3); need(1, 2); break;
            case Model::combined: need(0, 2); need(1, 2); need(0, 3); need(1, 3); break;
        }
    } catch (const std::out_of_range&) {
        throw config_error(std::string("config lacks a gap required by model ") + model_name(model));
    }
}

RateMatrix model_generator(const QubitSpec& q, const PointRates& r, Model model) {
    switch (model) {
        case Model::first_diamond:
            return first_diamond_generator(r.w02, r.w12, q.gamma10, q.gamma20);
        case Model::second_diamond:
            return second_diamond_generator(r.w03, r.w12, q.gamma10, q.gamma20, q.gamma32);
        case Model::combined:
            return combined_generator(
                TransitionRates{r.w02, r.w12, r.w03, r.w13, q.gamma10, q.gamma20, q.gamma32, r.g02});
    }
    throw std::logic_error("unreachable");
}

void write_grid_files(const SweepGrid& grid, const std::string& out, const std::string& format,
                      double vmin, double vmax) {
    if (grid.degenerate_points > 0)
        std::cerr << "note: " << grid.degenerate_points
                  << " grid points were degenerate and fell back to the ground state\n";
    if (format == "csv") {
        write_grid_csv(grid, out);
    } else if (format == "pgm") {
        write_grid_pgm(grid, out, vmin, vmax);
    } else if (format == "both") {
        write_grid_csv(grid, out + ".csv");
        write_grid_pgm(grid, out + ".pgm", vmin, vmax);
    } else {
        throw config_error("unknown format '" + format + "' (expected csv, pgm or both)");
    }
}

PopulationVector stationary_solve_or_ground(const QubitSpec& q, const PointRates& r, Model model) {
    try {
        switch (model) {
            case Model::first_diamond:
                return first_diamond_solve(r.w02, r.w12, q.gamma10, q.gamma20);
            case Model::second_diamond:
                return second_diamond_solve(r.w03, r.w12, q.gamma10, q.gamma20, q.gamma32);
            case Model::combined:
                return combined_solve(
                    TransitionRates{r.w02, r.w12, r.w03, r.w13, q.gamma10, q.gamma20, q.gamma32, r.g02});
        }
    } catch (const degenerate_system_error&) {
        return PopulationVector{};
    }
    return PopulationVector{};
}

struct CommonArgs {
    std::string config_path;
    std::string model_override;
    double dphi = 0.0;
    double phirf = 0.0;
};

int run(int argc, const char* const* argv) {
    CLI::App app{"Steady-state simulator of Landau-Zener-Stueckelberg interference in a driven "
                 "four-level flux qubit"};
    app.name("lzs-sim");
    app.require_subcommand(1);

    CommonArgs a;
    std::string out_path, outdir, format = "csv", pair = "02";
    double vmin = 0.0, vmax = 1.0;
    int threads = 0;
    double dt = 0.0, tmax = 0.0;
    long stride = 0;
    std::vector<double> omegas{0.16, 0.879, 0.8886};
    std::vector<double> gamma2s{0.05, 0.2, 0.4};

    auto add_config = [&a](CLI::App* sub) {
        sub->add_option("--config", a.config_path, "run configuration file")->required();
    };
    auto add_point = [&a](CLI::App* sub) {
        sub->add_option("--dphi", a.dphi, "static flux detuning, mPhi0")->required();
        sub->add_option("--phirf", a.phirf, "drive amplitude, mPhi0")->required();
    };
    auto add_model = [&a](CLI::App* sub) {
        sub->add_option("--model", a.model_override,
                        "override the config model (first_diamond|second_diamond|combined)");
    };

    CLI::App* c_rate = app.add_subcommand("rate", "print the LZ rate of one crossing at one point");
    add_config(c_rate);
    add_point(c_rate);
    c_rate->add_option("--pair", pair, "crossing: 02, 12, 03 or 13")
        ->check(CLI::IsMember({"02", "12", "03", "13"}));

    CLI::App* c_steady = app.add_subcommand("steady", "print stationary populations at one point");
    add_config(c_steady);
    add_point(c_steady);
    add_model(c_steady);

    CLI::App* c_dyn = app.add_subcommand("dynamics", "time-domain relaxation at one point (CSV)");
    add_config(c_dyn);
    add_point(c_dyn);
    add_model(c_dyn);
    c_dyn->add_option("--dt", dt, "step, ns (default: half the stability bound)");
    c_dyn->add_option("--tmax", tmax, "horizon, ns (default: 50 / min rate)");
    c_dyn->add_option("--stride", stride, "write every k-th step (default: <= 5000 rows)");
    c_dyn->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* c_sweep = app.add_subcommand("sweep", "population map over the config grid");
    add_config(c_sweep);
    add_model(c_sweep);
    c_sweep->add_option("--out", out_path, "output path (base name for --format both)")->required();
    c_sweep->add_option("--format", format, "csv|pgm|both")->capture_default_str();
    CLI::Option* sweep_threads = c_sweep->add_option("--threads", threads, "worker threads, 0 = auto");
    c_sweep->add_option("--vmin", vmin, "PGM black level")->capture_default_str();
    c_sweep->add_option("--vmax", vmax, "PGM white level")->capture_default_str();

    CLI::App* c_study = app.add_subcommand("study", "frequency/dephasing matrix of sweeps");
    add_config(c_study);
    add_model(c_study);
    c_study->add_option("--omegas", omegas, "drive frequencies, GHz")
        ->delimiter(',')
        ->capture_default_str();
    c_study->add_option("--gamma2s", gamma2s, "dephasing rates, GHz")
        ->delimiter(',')
        ->capture_default_str();
    c_study->add_option("--outdir", outdir, "output directory")->required();
    c_study->add_option("--format", format, "csv|pgm|both")->capture_default_str();
    CLI::Option* study_threads = c_study->add_option("--threads", threads, "worker threads, 0 = auto");
    c_study->add_option("--vmin", vmin, "PGM black level")->capture_default_str();
    c_study->add_option("--vmax", vmax, "PGM white level")->capture_default_str();

    CLI::App* c_verify = app.add_subcommand("verify", "run the built-in oracle equivalence suite");
    (void)c_verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    if (app.got_subcommand(c_verify)) return run_verify(std::cout) ? 0 : 1;

    const RunConfig cfg = load_config(a.config_path);

    if (app.got_subcommand(c_rate)) {
        const DriveSpec d{cfg.omega, a.phirf, a.dphi, cfg.gamma2};
        try {
            const CrossingChannel ch = channel(cfg.qubit, d, pair[0] - '0', pair[1] - '0');
            std::cout << format_double(lz_rate(RateParams{ch.crossing.gap, ch.epsilon, ch.amplitude,
                                                          d.omega, d.gamma2}))
                      << "\n";
        } catch (const std::out_of_range& e) {
            throw config_error(e.what());
        }
        return 0;
    }

    const Model model = resolve_model(cfg, a.model_override);
    require_crossings(cfg.qubit, model);

    if (app.got_subcommand(c_steady)) {
        const DriveSpec d{cfg.omega, a.phirf, a.dphi, cfg.gamma2};
        const PointRates r = compute_point_rates(cfg.qubit, d, model);
        const PopulationVector p = stationary_solve_or_ground(cfg.qubit, r, model);
        for (int k = 0; k < 4; ++k)
            std::cout << "p" << k << " = " << format_double(p.p[static_cast<std::size_t>(k)]) << "\n";
        std::cout << "p_left = " << format_double(model == Model::first_diamond ? p.p[2] : p.left_well())
                  << "\n";
        return 0;
    }

    if (app.got_subcommand(c_dyn)) {
        const DriveSpec d{cfg.omega, a.phirf, a.dphi, cfg.gamma2};
        const PointRates r = compute_point_rates(cfg.qubit, d, model);
        const RateMatrix gen = model_generator(cfg.qubit, r, model);
        const double outflow = max_outflow(gen);
        if (dt <= 0.0) dt = outflow > 0.0 ? 0.05 / outflow : 1.0;
        if (tmax <= 0.0) {
            double min_rate = 0.0;
            for (int ii = 0; ii < 4; ++ii)
                for (int jj = 0; jj < 4; ++jj) {
                    const double v = gen[static_cast<std::size_t>(ii)][static_cast<std::size_t>(jj)];
                    if (ii != jj && v > 0.0) min_rate = min_rate == 0.0 ? v : std::min(min_rate, v);
                }
            tmax = min_rate > 0.0 ? 50.0 / min_rate : 100.0 * dt;
        }
        const long total_steps = static_cast<long>(std::ceil(tmax / dt));
        if (stride <= 0) stride = std::max(1L, total_steps / 5000);

        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        for (const auto& [key, value] : echo_config(cfg)) f << "# " << key << " = " << value << "\n";
        f << "# point.dphi_dc = " << format_double(a.dphi) << "\n";
        f << "# point.phirf = " << format_double(a.phirf) << "\n";
        f << "# dynamics.dt_ns = " << format_double(dt) << "\n";
        f << "# dynamics.stride = " << stride << "\n";
        f << "t_ns,p0,p1,p2,p3\n";
        PopulationVector p;  // ground state
        auto emit = [&](double t, const PopulationVector& s) {
            f << format_double(t) << ',' << format_double(s.p[0]) << ',' << format_double(s.p[1])
              << ',' << format_double(s.p[2]) << ',' << format_double(s.p[3]) << "\n";
        };
        emit(0.0, p);
        long done = 0;
        while (done < total_steps) {
            const long chunk = std::min(stride, total_steps - done);
            const Trajectory seg = integrate(gen, p, dt, static_cast<double>(chunk) * dt);
            p = seg.states.back();
            done += chunk;
            emit(static_cast<double>(done) * dt, p);
        }
        return 0;
    }

    if (app.got_subcommand(c_sweep)) {
        const int n = resolve_threads(threads, sweep_threads->count() > 0);
        const SweepGrid grid = sweep_grid(cfg.qubit, cfg.omega, cfg.gamma2, cfg.grid, model, n);
        write_grid_files(grid, out_path, format, vmin, vmax);
        return 0;
    }

    if (app.got_subcommand(c_study)) {
        const int n = resolve_threads(threads, study_threads->count() > 0);
        std::filesystem::create_directories(outdir);
        const auto grids = study_matrix(cfg.qubit, omegas, gamma2s, cfg.grid, model, n);
        std::size_t idx = 0;
        for (double g2 : gamma2s)
            for (double w : omegas) {
                const std::string base = outdir + "/study_g" + format_double(g2) + "_w" +
                                         format_double(w);
                const SweepGrid& grid = grids[idx++];
                if (format == "both")
                    write_grid_files(grid, base, format, vmin, vmax);
                else
                    write_grid_files(grid, base + (format == "pgm" ? ".pgm" : ".csv"), format, vmin,
                                     vmax);
            }
        return 0;
    }

    throw std::logic_error("no subcommand dispatched");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    try {
        return run(argc, argv);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace lzs
