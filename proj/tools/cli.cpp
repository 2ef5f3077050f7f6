#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperpend/analysis.hpp"
#include "hyperpend/dynamics.hpp"
#include "hyperpend/errors.hpp"
#include "hyperpend/reduction.hpp"
#include "hyperpend/report.hpp"
#include "hyperpend/sampling.hpp"
#include "hyperpend/svg.hpp"
#include "hyperpend/verify.hpp"

namespace hyperpend::cli {

namespace {

struct IoError : Error {
    using Error::Error;
};

std::vector<double> number_list(const nlohmann::json& j, const std::string& key)
{
    if (!j.is_array()) throw ConfigError("'" + key + "' must be an array of numbers");
    std::vector<double> v;
    for (const auto& e : j) {
        if (!e.is_number()) throw ConfigError("'" + key + "' must be an array of numbers");
        v.push_back(e.get<double>());
    }
    return v;
}

std::vector<double> number_or_list(const nlohmann::json& j, const std::string& key)
{
    if (j.is_number()) return {j.get<double>()};
    return number_list(j, key);
}

Potential potential_from_json(const nlohmann::json& j)
{
    if (j.is_array()) return Potential(number_list(j, "potential"));
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den")) throw ConfigError("rational potential needs 'num' and 'den'");
        for (const auto& [k, v] : j.items())
            if (k != "num" && k != "den") throw ConfigError("unknown potential key '" + k + "'");
        return Potential(number_list(j["num"], "num"), number_list(j["den"], "den"));
    }
    throw ConfigError("'potential' must be a coefficient list or {num, den}");
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write '" + path + "'");
    f << content;
    f.flush();
    if (!f) throw IoError("write to '" + path + "' failed");
}

// Writes to the --out file, or to `out` when no path was given.
void emit(const std::string& path, const std::string& content, std::ostream& out)
{
    if (path.empty())
        out << content;
    else
        write_file(path, content);
}

Polyline read_reduced_csv(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    const auto i1 = std::find(header.begin(), header.end(), "w1") - header.begin();
    const auto i2 = std::find(header.begin(), header.end(), "w2") - header.begin();
    if (i1 >= long(header.size()) || i2 >= long(header.size())) throw ConfigError("'" + path + "' has no w1,w2 columns");
    Polyline pl;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream rs(line);
        std::string cell;
        while (std::getline(rs, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        if (long(row.size()) <= std::max(i1, i2)) throw ConfigError("'" + path + "': short row");
        pl.emplace_back(row[i1], row[i2]);
    }
    return pl;
}

ReducedPoint reduced_initial(RotationClass cls, const std::vector<double>& w)
{
    if (w.size() == 4) return ReducedPoint::from_coords(w);
    if (w.size() == 3) {
        ReducedPoint p{w[0], w[1], w[2], 0.0};
        const double jsq = reduced_jsq(cls, p);
        p.w4 = std::sqrt(std::max(jsq, 0.0));
        if (jsq < 0.0) throw MembershipError("reduced initial condition has negative jsq");
        return p;
    }
    throw ConfigError("w0 needs 3 or 4 entries");
}

template <class F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const MembershipError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMembership;
    } catch (const StepFailure& e) {
        err << "error: integration failed at step " << e.step << ": " << e.what() << '\n';
        return kExitIntegration;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace

ScenarioConfig config_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    if (!j.contains("schema")) throw ConfigError(std::string("config lacks 'schema' (expected \"") + kSchema + "\")");
    if (j["schema"] != kSchema) throw ConfigError(std::string("unsupported schema (expected \"") + kSchema + "\")");

    ScenarioConfig cfg;
    cfg.tol = Tolerances{};
    for (const auto& [key, v] : j.items()) {
        try {
            if (key == "schema") continue;
            if (key == "class")
                cfg.cls = RotationClass::parse(v.get<std::string>());
            else if (key == "potential")
                cfg.potential = potential_from_json(v);
            else if (key == "z0")
                cfg.z0 = number_list(v, key);
            else if (key == "w0")
                cfg.w0 = number_list(v, key);
            else if (key == "dt")
                cfg.dt = v.get<double>();
            else if (key == "steps")
                cfg.steps = v.get<long>();
            else if (key == "seed")
                cfg.seed = v.get<std::uint64_t>();
            else if (key == "tolerances")
                cfg.tol = apply_tolerance_override(cfg.tol, v.dump());
            else if (key == "out")
                cfg.out = v.get<std::string>();
            else if (key == "summary")
                cfg.summary = v.get<std::string>();
            else if (key == "c")
                cfg.c = v.get<double>();
            else if (key == "jsq")
                cfg.jsq = number_or_list(v, key);
            else if (key == "energy")
                cfg.energy = number_or_list(v, key);
            else if (key == "window")
                cfg.window = number_list(v, key);
            else if (key == "trajectories")
                cfg.trajectories = v.get<std::vector<std::string>>();
            else if (key == "title")
                cfg.title = v.get<std::string>();
            else
                throw ConfigError("unknown config key '" + key + "'");
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("config key '" + key + "': " + e.what());
        }
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) { return config_from_json(read_file(path)); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Constrained mechanics on the hyperbolic plane: simulation, reduction, classification"};
    app.require_subcommand(1);

    struct Flags {
        std::string config;
        std::string cls;
        std::optional<double> c;
        std::vector<double> jsq;
        std::vector<double> energy;
        std::optional<double> dt;
        std::optional<long> steps;
        std::optional<std::uint64_t> seed;
        std::string out;
        bool compare = false;
        std::vector<double> potential;
        std::vector<double> z0;
        std::vector<double> w0;
        std::size_t count = 200;
        bool corrupt = false;
        bool serial = false;
        std::vector<std::string> trajectories;
        std::vector<double> window;
    } f;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", f.config, "JSON scenario file");
        sub->add_option("--class", f.cls, "elliptic | hyperbolic | parabolic");
        sub->add_option("--c", f.c, "slope of the linear potential U = c*s");
        sub->add_option("--seed", f.seed, "RNG seed");
        sub->add_option("--out", f.out, "output path (default: stdout)");
        sub->add_option("--potential", f.potential, "polynomial potential coefficients, constant first")->expected(1, -1);
    };
    CLI::App* simulate = app.add_subcommand("simulate", "integrate the full constrained system");
    common(simulate);
    simulate->add_option("--dt", f.dt, "time step");
    simulate->add_option("--steps", f.steps, "number of steps");
    simulate->add_option("--z0", f.z0, "initial state x1 x2 x3 y1 y2 y3")->expected(6);

    CLI::App* reduce = app.add_subcommand("reduce", "integrate the reduced system");
    common(reduce);
    reduce->add_option("--dt", f.dt, "time step");
    reduce->add_option("--steps", f.steps, "number of steps");
    reduce->add_option("--w0", f.w0, "reduced initial state w1 w2 w3 [w4]")->expected(3, 4);
    reduce->add_flag("--compare", f.compare, "also integrate the full system from a lift and report the commutation error");

    CLI::App* classify = app.add_subcommand("classify", "classify a level set of a linear potential");
    common(classify);
    classify->add_option("--jsq", f.jsq, "squared momentum level");
    classify->add_option("--energy", f.energy, "energy level");

    CLI::App* verify = app.add_subcommand("verify", "run every numerical certificate");
    common(verify);
    verify->add_option("--count", f.count, "random points per suite");
    verify->add_flag("--corrupt-bracket", f.corrupt, "plant a sign error in a reduced bracket (negative control)");
    verify->add_flag("--serial", f.serial, "use the serial reference kernels");

    CLI::App* plot = app.add_subcommand("plot", "draw reduced level curves as SVG");
    common(plot);
    plot->add_option("--jsq", f.jsq, "squared momentum levels")->expected(1, -1);
    plot->add_option("--energy", f.energy, "energy levels")->expected(1, -1);
    plot->add_option("--trajectory", f.trajectories, "reduced trajectory CSV to overlay")->expected(1, -1);
    plot->add_option("--window", f.window, "w1_min w1_max [w2_half]")->expected(2, 3);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitConfig;
    }

    ScenarioConfig cfg;
    const int setup = guarded(err, [&] {
        if (!f.config.empty()) cfg = load_config(f.config);
        // Precedence: defaults < config file < environment < command line.
        if (const char* env = std::getenv("HYPERPEND_TOL_OVERRIDE"); env && *env) cfg.tol = apply_tolerance_override(cfg.tol, env);
        if (!f.cls.empty()) cfg.cls = RotationClass::parse(f.cls);
        if (f.c) cfg.c = f.c;
        if (f.c && f.potential.empty()) cfg.potential = Potential::linear(*f.c);
        if (!f.potential.empty()) cfg.potential = Potential(f.potential);
        if (f.config.empty() && !f.c && f.potential.empty()) cfg.potential = Potential::zero();
        if (f.seed) cfg.seed = *f.seed;
        if (f.dt) cfg.dt = *f.dt;
        if (f.steps) cfg.steps = *f.steps;
        if (!f.out.empty()) cfg.out = f.out;
        if (!f.jsq.empty()) cfg.jsq = f.jsq;
        if (!f.energy.empty()) cfg.energy = f.energy;
        if (!f.z0.empty()) cfg.z0 = f.z0;
        if (!f.w0.empty()) cfg.w0 = f.w0;
        if (!f.window.empty()) cfg.window = f.window;
        if (!f.trajectories.empty()) cfg.trajectories = f.trajectories;
        if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw ConfigError("dt must be positive");
        if (cfg.steps < 0) throw ConfigError("steps must be nonnegative");
        return kExitOk;
    });
    if (setup != kExitOk) return setup;
    const RotationClass cls = cfg.cls;
    const Tolerances& tol = cfg.tol;

    if (simulate->parsed()) {
        return guarded(err, [&] {
            PhasePoint z0;
            if (cfg.z0) {
                if (cfg.z0->size() != 6) throw ConfigError("z0 needs 6 entries");
                z0 = PhasePoint::from_coords(*cfg.z0);
            } else {
                Sampler sampler(cfg.seed);
                z0 = sampler.generic_initial_condition(cls);
            }
            if (!on_TH2(z0, 1e-8)) throw ConfigError("z0 is not on the tangent bundle of the hyperbolic plane");
            const Trajectory traj = integrate(cls, cfg.potential, z0, cfg.dt, cfg.steps, tol);
            std::ostringstream csv;
            write_trajectory_csv(csv, traj);
            emit(cfg.out, csv.str(), out);
            const SimulationSummary s = summarize(traj, tol);
            const std::string summary = to_json(s, tol).dump(2) + "\n";
            if (!cfg.summary.empty())
                write_file(cfg.summary, summary);
            else
                (cfg.out.empty() ? err : out) << summary;
            return s.within_tolerance ? kExitOk : kExitFailure;
        });
    }

    if (reduce->parsed()) {
        return guarded(err, [&] {
            ReducedPoint w0;
            if (cfg.w0)
                w0 = reduced_initial(cls, *cfg.w0);
            else if (cfg.z0)
                w0 = hilbert_map(cls, PhasePoint::from_coords(*cfg.z0));
            else {
                Sampler sampler(cfg.seed);
                w0 = hilbert_map(cls, sampler.generic_initial_condition(cls));
            }
            if (const MembershipVerdict v = image_membership(cls, w0, tol); !v)
                throw MembershipError("reduced initial condition is not in the image: " + v.reason);
            const ReducedTrajectory red = integrate_reduced(cls, cfg.potential, w0, cfg.dt, cfg.steps, {}, tol);
            std::ostringstream csv;
            write_reduced_csv(csv, red);
            emit(cfg.out, csv.str(), out);
            nlohmann::ordered_json report;
            report["rows"] = red.t.size();
            report["max_jsq_drift"] = red.max_jsq_drift();
            report["max_energy_drift"] = red.max_energy_drift();
            if (f.compare) {
                const Trajectory full = integrate(cls, cfg.potential, lift(cls, w0, tol), cfg.dt, cfg.steps, tol);
                double e = 0.0;
                const std::size_t n = std::min(full.size(), red.w.size());
                for (std::size_t i = 0; i < n; ++i) {
                    const ReducedPoint g = hilbert_map(cls, full.z[i]);
                    e = std::max({e, std::abs(g.w1 - red.w[i].w1), std::abs(g.w2 - red.w[i].w2), std::abs(g.w3 - red.w[i].w3),
                                  std::abs(g.w4 - red.w[i].w4)});
                }
                report["max_commutation_error"] = e;
                report["compared_rows"] = n;
            }
            const std::string summary = report.dump(2) + "\n";
            if (!cfg.summary.empty())
                write_file(cfg.summary, summary);
            else
                (cfg.out.empty() ? err : out) << summary;
            return kExitOk;
        });
    }

    if (classify->parsed()) {
        return guarded(err, [&] {
            if (!cfg.c) throw ConfigError("classify needs --c");
            if (cfg.jsq.size() > 1 || cfg.energy.size() > 1) throw ConfigError("classify takes a single level");
            const LevelSpec level{cfg.jsq.empty() ? 0.0 : cfg.jsq[0], cfg.energy.empty() ? 0.0 : cfg.energy[0]};
            const ClassificationReport r = classify_linear(cls, *cfg.c, level, tol);
            emit(cfg.out, to_json(r).dump(2) + "\n", out);
            return kExitOk;
        });
    }

    if (verify->parsed()) {
        return guarded(err, [&] {
            VerifyOptions opts;
            opts.seed = cfg.seed;
            opts.count = f.count;
            opts.corrupt_bracket = f.corrupt;
            opts.backend = f.serial ? kernels::Backend::Serial : kernels::Backend::OpenMP;
            opts.tol = tol;
            const VerifyReport rep = run_verification(opts);
            print_verification(out, rep);
            if (!cfg.out.empty()) write_file(cfg.out, to_json(rep).dump(2) + "\n");
            return rep.all_passed() ? kExitOk : kExitFailure;
        });
    }

    if (plot->parsed()) {
        return guarded(err, [&] {
            PlotSpec spec;
            spec.cls = cls;
            spec.potential = cfg.potential;
            spec.window = default_window(cls);
            if (!cfg.window.empty()) {
                if (cfg.window.size() < 2 || !(cfg.window[1] > cfg.window[0])) throw ConfigError("window needs w1_min < w1_max");
                spec.window.w1_min = cfg.window[0];
                spec.window.w1_max = cfg.window[1];
                if (cfg.window.size() > 2) spec.window.w2_half = cfg.window[2];
            }
            for (double jsq : cfg.jsq) {
                if (jsq < 0.0) throw ConfigError("jsq must be nonnegative");
                const std::vector<double> energies = cfg.energy.empty() ? default_energies(cls, cfg.potential, jsq, tol) : cfg.energy;
                for (double e : energies) spec.levels.push_back({jsq, e});
            }
            if (cfg.jsq.empty())
                for (double e : cfg.energy) spec.levels.push_back({0.0, e});
            for (const auto& path : cfg.trajectories) spec.trajectories.push_back(read_reduced_csv(path));
            spec.title = cfg.title.empty() ? std::string(cls.name()) + " reduced level sets" : cfg.title;
            emit(cfg.out, render_svg(spec, tol), out);
            return kExitOk;
        });
    }
    return kExitConfig;
}

}  // namespace hyperpend::cli
