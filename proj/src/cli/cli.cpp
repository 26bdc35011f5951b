#include "ilvr/cli.hpp"

#include "ilvr/analytic.hpp"
#include "ilvr/compare.hpp"
#include "ilvr/ensemble.hpp"
#include "ilvr/errors.hpp"
#include "ilvr/io.hpp"
#include "ilvr/path_metrics.hpp"
#include "ilvr/price_process.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ilvr::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Everything a command can be configured with. Layering, lowest first:
// defaults, --figure preset, --config file, explicit flags.
struct RunConfig {
    double p0 = 100.0;
    double x0 = 100.0;
    double sigma0 = 0.01;
    std::size_t steps = 5000;
    std::size_t runs = 20000;
    std::uint64_t seed = 1;
    std::size_t bins = 100;
    std::string mode = "exact";
    unsigned threads = 0;
    std::string walk = "binary";

    double t_max = 5000.0;
    std::size_t points = 101;
    std::string kind = "il";
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    double gauss_window = 8.0;

    std::string model = "both";
    double t = 20000.0;
    std::optional<double> p_min;
    std::optional<double> p_max;

    std::string out = ".";
};

// Raw flag storage. Every flag is registered on each subcommand; presence is
// read back from the CLI11 option counts.
struct Flags {
    RunConfig values;
    double p_min = 0.0;
    double p_max = 0.0;
    std::string figure;
    std::string config;
    std::map<std::string, std::vector<CLI::Option*>> options;

    bool given(const std::string& name) const {
        auto it = options.find(name);
        if (it == options.end()) return false;
        for (const auto* opt : it->second) {
            if (opt->count() > 0) return true;
        }
        return false;
    }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class T>
void add_flag(CLI::App* app, Flags& flags, const std::string& name, T& target,
              const std::string& help) {
    flags.options[name].push_back(app->add_option("--" + name, target, help));
}

void register_flags(CLI::App* app, Flags& f) {
    RunConfig& v = f.values;
    add_flag(app, f, "p0", v.p0, "starting price");
    add_flag(app, f, "x0", v.x0, "starting x reserve");
    add_flag(app, f, "sigma0", v.sigma0, "per-step price amplitude");
    add_flag(app, f, "steps", v.steps, "steps per path");
    add_flag(app, f, "runs", v.runs, "paths in the ensemble");
    add_flag(app, f, "seed", v.seed, "seed (path seed, or ensemble master seed)");
    add_flag(app, f, "bins", v.bins, "histogram bins");
    add_flag(app, f, "mode", v.mode, "LVR increments: exact|approx");
    add_flag(app, f, "threads", v.threads, "ensemble workers (0: all cores)");
    add_flag(app, f, "walk", v.walk, "step distribution: binary|gaussian");
    add_flag(app, f, "t-max", v.t_max, "last time of the curve grid");
    add_flag(app, f, "points", v.points, "grid points");
    add_flag(app, f, "kind", v.kind, "curve kind: il|lvr|linear");
    add_flag(app, f, "abs-tol", v.abs_tol, "quadrature absolute tolerance");
    add_flag(app, f, "rel-tol", v.rel_tol, "quadrature relative tolerance");
    add_flag(app, f, "gauss-window", v.gauss_window, "half-width of the Gaussian window");
    add_flag(app, f, "model", v.model, "density model: bm|gbm|both");
    add_flag(app, f, "t", v.t, "density time in steps");
    add_flag(app, f, "p-min", f.p_min, "lower end of the price grid");
    add_flag(app, f, "p-max", f.p_max, "upper end of the price grid");
    add_flag(app, f, "out", v.out, "output directory");
    f.options["figure"].push_back(
        app->add_option("--figure", f.figure, "figure preset for this command"));
    f.options["config"].push_back(app->add_option("--config", f.config, "JSON config file"));
}

// Applies the keys of a JSON config object. Keys use underscores
// (t_max, abs_tol, ...) or the flag spelling.
void apply_config_file(RunConfig& c, const fs::path& file) {
    json j;
    try {
        j = json::parse(io::read_file(file));
    } catch (const json::exception& e) {
        throw UsageError("config " + file.string() + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    if (!j.is_object()) {
        throw UsageError("config " + file.string() + ": expected a JSON object");
    }
    for (const auto& [raw_key, value] : j.items()) {
        std::string key = raw_key;
        for (char& ch : key) {
            if (ch == '-') ch = '_';
        }
        try {
            if (key == "p0") c.p0 = value.get<double>();
            else if (key == "x0") c.x0 = value.get<double>();
            else if (key == "sigma0") c.sigma0 = value.get<double>();
            else if (key == "steps") c.steps = value.get<std::size_t>();
            else if (key == "runs") c.runs = value.get<std::size_t>();
            else if (key == "seed") c.seed = value.get<std::uint64_t>();
            else if (key == "bins") c.bins = value.get<std::size_t>();
            else if (key == "mode") c.mode = value.get<std::string>();
            else if (key == "threads") c.threads = value.get<unsigned>();
            else if (key == "walk") c.walk = value.get<std::string>();
            else if (key == "t_max") c.t_max = value.get<double>();
            else if (key == "points") c.points = value.get<std::size_t>();
            else if (key == "kind") c.kind = value.get<std::string>();
            else if (key == "abs_tol") c.abs_tol = value.get<double>();
            else if (key == "rel_tol") c.rel_tol = value.get<double>();
            else if (key == "gauss_window") c.gauss_window = value.get<double>();
            else if (key == "model") c.model = value.get<std::string>();
            else if (key == "t") c.t = value.get<double>();
            else if (key == "p_min") c.p_min = value.get<double>();
            else if (key == "p_max") c.p_max = value.get<double>();
            else if (key == "out") c.out = value.get<std::string>();
            else throw UsageError("config " + file.string() + ": unknown key '" + raw_key + "'");
        } catch (const json::exception& e) {
            throw UsageError("config " + file.string() + ": key '" + raw_key + "': " + e.what());
        }
    }
}

void apply_flags(RunConfig& c, const Flags& f) {
    const RunConfig& v = f.values;
    if (f.given("p0")) c.p0 = v.p0;
    if (f.given("x0")) c.x0 = v.x0;
    if (f.given("sigma0")) c.sigma0 = v.sigma0;
    if (f.given("steps")) c.steps = v.steps;
    if (f.given("runs")) c.runs = v.runs;
    if (f.given("seed")) c.seed = v.seed;
    if (f.given("bins")) c.bins = v.bins;
    if (f.given("mode")) c.mode = v.mode;
    if (f.given("threads")) c.threads = v.threads;
    if (f.given("walk")) c.walk = v.walk;
    if (f.given("t-max")) c.t_max = v.t_max;
    if (f.given("points")) c.points = v.points;
    if (f.given("kind")) c.kind = v.kind;
    if (f.given("abs-tol")) c.abs_tol = v.abs_tol;
    if (f.given("rel-tol")) c.rel_tol = v.rel_tol;
    if (f.given("gauss-window")) c.gauss_window = v.gauss_window;
    if (f.given("model")) c.model = v.model;
    if (f.given("t")) c.t = v.t;
    if (f.given("p-min")) c.p_min = f.p_min;
    if (f.given("p-max")) c.p_max = f.p_max;
    if (f.given("out")) c.out = v.out;
}

enum class Command { path, ensemble, analytic, density, compare };

void set_reference_ensemble(RunConfig& c) {
    c.p0 = 100.0;
    c.x0 = 100.0;
    c.sigma0 = 0.01;
    c.steps = 5000;
    c.runs = 20000;
}

void apply_preset(RunConfig& c, Command cmd, const std::string& figure) {
    if (figure.empty()) return;
    auto reject = [&] {
        throw UsageError("figure preset '" + figure + "' does not apply to this command");
    };
    switch (cmd) {
        case Command::path:
            if (figure != "1") reject();
            c.p0 = 100.0;
            c.sigma0 = 0.001;
            c.steps = 20000;
            c.walk = "binary";
            break;
        case Command::ensemble:
            if (figure == "2" || figure == "4-5") {
                set_reference_ensemble(c);
            } else if (figure == "smoke") {
                set_reference_ensemble(c);
                c.runs = 2;
            } else {
                reject();
            }
            break;
        case Command::analytic:
            if (figure == "il-curve") {
                c.p0 = 1.0;
                c.sigma0 = 1.0;
                c.x0 = 1.0;
                // just inside the W = 8 regime limit 1/128
                c.t_max = 0.0075;
                c.points = 151;
                c.kind = "il";
            } else if (figure == "reference") {
                c.p0 = 100.0;
                c.x0 = 100.0;
                c.sigma0 = 0.01;
                c.t_max = 5000.0;
            } else {
                reject();
            }
            break;
        case Command::density:
            if (figure != "3") reject();
            c.p0 = 100.0;
            c.sigma0 = 0.01;
            c.t = 20000.0;
            c.model = "both";
            c.points = 401;
            break;
        case Command::compare:
            if (figure == "reference" || figure == "4-5") {
                set_reference_ensemble(c);
            } else if (figure == "quick") {
                set_reference_ensemble(c);
                c.runs = 100;
            } else {
                reject();
            }
            break;
    }
}

WalkParams walk_params(const RunConfig& c) {
    WalkParams w;
    w.p0 = c.p0;
    w.sigma0 = c.sigma0;
    w.steps = c.steps;
    w.kind = step_kind_from_string(c.walk);
    w.validate();
    return w;
}

EnsembleConfig ensemble_config(const RunConfig& c) {
    EnsembleConfig e;
    e.walk = walk_params(c);
    e.anchor = Anchor(c.p0, c.x0);
    e.runs = c.runs;
    e.master_seed = c.seed;
    e.histogram_bins = c.bins;
    e.mode = increment_mode_from_string(c.mode);
    e.threads = c.threads;
    e.validate();
    return e;
}

AnalyticParams analytic_params(const RunConfig& c) {
    AnalyticParams a;
    a.p0 = c.p0;
    a.x0 = c.x0;
    a.sigma0 = c.sigma0;
    a.abs_tol = c.abs_tol;
    a.rel_tol = c.rel_tol;
    a.gauss_window = c.gauss_window;
    a.validate();
    return a;
}

void warn_domain(const WalkParams& w, std::ostream& err) {
    if (!w.within_brownian_domain()) {
        err << "warning: sigma0*sqrt(steps) >= p0; paths may reach zero\n";
    }
}

void cmd_path(const RunConfig& c, const std::string& figure, std::ostream& out,
              std::ostream& err) {
    const WalkParams w = walk_params(c);
    warn_domain(w, err);
    const fs::path dir = c.out;
    const PricePath path = generate_path(w, c.seed);

    if (figure == "1") {
        if (path.steps() < 5000) {
            throw UsageError("figure 1 needs at least 5000 steps");
        }
        // The 5000-step run is the prefix of the 20000-step one.
        PricePath head;
        head.seed = path.seed;
        head.prices.assign(path.prices.begin(), path.prices.begin() + 5001);
        head.increments.assign(path.increments.begin(), path.increments.begin() + 5000);
        io::write_atomic(dir / "path_5000.csv", io::path_csv(head));
        io::write_atomic(dir / "path_20000.csv", io::path_csv(path));
        out << "wrote " << (dir / "path_5000.csv").string() << " and "
            << (dir / "path_20000.csv").string() << '\n';
        return;
    }

    const PathMetrics metrics =
        compute_metrics(path, Anchor(c.p0, c.x0), {.mode = increment_mode_from_string(c.mode)});
    io::write_atomic(dir / "path.csv", io::path_csv(path));
    io::write_atomic(dir / "path_metrics.csv", io::metrics_csv(path.seed, metrics));
    out << "wrote " << (dir / "path.csv").string() << " (" << path.prices.size()
        << " rows), final price " << io::format_number(path.final_price()) << '\n';
}

void cmd_ensemble(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const EnsembleConfig e = ensemble_config(c);
    warn_domain(e.walk, err);
    const EnsembleResult r = run_ensemble(e);
    const fs::path dir = c.out;
    io::write_atomic(dir / "runs.csv", io::runs_csv(r.runs));
    io::write_atomic(dir / "report_il.json", io::report_json(r.il));
    io::write_atomic(dir / "report_lvr.json", io::report_json(r.lvr));
    io::write_atomic(dir / "report_final_price.json", io::report_json(r.final_price));
    out << "runs " << r.runs.size() << ": mean IL " << io::format_number(r.il.mean)
        << " (se " << io::format_number(r.il.std_err) << "), mean LVR "
        << io::format_number(r.lvr.mean) << " (se " << io::format_number(r.lvr.std_err)
        << ")\n";
}

void cmd_analytic(const RunConfig& c, const std::string& figure, std::ostream& out) {
    const AnalyticParams a = analytic_params(c);
    const fs::path dir = c.out;
    std::vector<CurveKind> kinds{curve_kind_from_string(c.kind)};
    if (figure == "il-curve") {
        kinds = {CurveKind::il, CurveKind::linear_approx};
    }
    for (CurveKind kind : kinds) {
        const AnalyticCurve series = curve(a, kind, c.t_max, c.points);
        const fs::path file = dir / ("curve_" + std::string(to_string(kind)) + ".csv");
        io::write_atomic(file, io::curve_csv(series));
        out << "wrote " << file.string() << ", value at t=" << io::format_number(series.times.back())
            << ": " << io::format_number(series.values.back()) << '\n';
    }
}

void cmd_density(const RunConfig& c, std::ostream& out) {
    if (c.points < 2) {
        throw UsageError("density needs at least 2 grid points");
    }
    std::vector<std::string> models;
    if (c.model == "both") {
        models = {"bm", "gbm"};
    } else if (c.model == "bm" || c.model == "gbm") {
        models = {c.model};
    } else {
        throw UsageError("unknown density model '" + c.model + "'");
    }
    const double width = 6.0 * c.sigma0 * std::sqrt(c.t);
    const double lo = c.p_min.value_or(std::max(c.p0 - width, 1e-9 * c.p0));
    const double hi = c.p_max.value_or(c.p0 + width);
    if (!(hi > lo)) {
        throw UsageError("density grid needs p-max > p-min");
    }
    const fs::path dir = c.out;
    for (const auto& model : models) {
        std::vector<std::pair<double, double>> rows;
        rows.reserve(c.points);
        for (std::size_t i = 0; i < c.points; ++i) {
            const double p = i + 1 == c.points
                                 ? hi
                                 : lo + (hi - lo) * static_cast<double>(i) /
                                            static_cast<double>(c.points - 1);
            const double d = model == "bm" ? bm_density(p, c.t, c.p0, c.sigma0)
                                           : gbm_density(p, c.t, c.p0, c.sigma0);
            rows.emplace_back(p, d);
        }
        const fs::path file = dir / ("density_" + model + ".csv");
        io::write_atomic(file, io::density_csv(rows));
        out << "wrote " << file.string() << '\n';
    }
}

void cmd_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const EnsembleConfig e = ensemble_config(c);
    warn_domain(e.walk, err);
    const CompareSummary s = run_compare(e, analytic_params(c));
    const fs::path file = fs::path(c.out) / "compare.json";
    const std::string text = compare_json(s);
    io::write_atomic(file, text);
    out << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Impermanent loss and loss-versus-rebalancing for a constant-product AMM", "ilvr"};
    app.require_subcommand(1);

    Flags flags;
    std::map<CLI::App*, Command> commands;
    auto sub = [&](const char* name, const char* help, Command cmd) {
        CLI::App* s = app.add_subcommand(name, help);
        register_flags(s, flags);
        commands[s] = cmd;
    };
    sub("path", "write one price path (step,price CSV)", Command::path);
    sub("ensemble", "run the Monte Carlo ensemble, write per-run CSV and reports",
        Command::ensemble);
    sub("analytic", "evaluate <IL(t)>, <LVR(t)> or the linear law on a time grid",
        Command::analytic);
    sub("density", "write Brownian and/or lognormal transition densities", Command::density);
    sub("compare", "ensemble means against the analytic values", Command::compare);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        Command cmd{};
        for (const auto& [s, c] : commands) {
            if (s->parsed()) cmd = c;
        }
        RunConfig config;
        apply_preset(config, cmd, flags.figure);
        if (!flags.config.empty()) {
            apply_config_file(config, flags.config);
        }
        apply_flags(config, flags);

        switch (cmd) {
            case Command::path: cmd_path(config, flags.figure, out, err); break;
            case Command::ensemble: cmd_ensemble(config, out, err); break;
            case Command::analytic: cmd_analytic(config, flags.figure, out); break;
            case Command::density: cmd_density(config, out); break;
            case Command::compare: cmd_compare(config, out, err); break;
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ContractError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const RegimeError& e) {
        err << "regime error: " << e.what() << '\n';
        return kRegime;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace ilvr::cli
