#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "dyonwell/binding.hpp"
#include "dyonwell/errors.hpp"
#include "dyonwell/normalize.hpp"
#include "dyonwell/selftest.hpp"
#include "dyonwell/sweep.hpp"
#include "dyonwell/version.hpp"

namespace dyonwell::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
const std::set<std::string> kFlags = {"json", "serial", "free", "dump-config"};

std::string num(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string num(HalfInt h) { return num(h.value()); }

double parse_number(const std::string& s, const std::string& field) {
    if (s == "inf" || s == "infinity") return kInfiniteHeight;
    double x = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw InvalidParameter(field + ": '" + s + "' is not a number");
    return x;
}

HalfInt parse_half(const std::string& s, const std::string& field) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return HalfInt::from_double(parse_number(s, field));
        if (s.substr(slash + 1) != "2") throw InvalidQuantumNumbers("denominator must be 2");
        const double twice = parse_number(s.substr(0, slash), field);
        if (twice != std::round(twice)) throw InvalidQuantumNumbers("numerator must be an integer");
        return HalfInt::from_twice(static_cast<int>(twice));
    } catch (const Error& e) {
        throw InvalidQuantumNumbers(field + ": " + e.what());
    }
}

struct WellArgs {
    double r0 = kUnset;
    std::string u0 = "inf";

    WellParams get(bool coulomb) const {
        if (!(r0 > 0.0) || !std::isfinite(r0)) throw InvalidParameter("--r0 must be positive and finite (got " + num(r0) + ")");
        const double u = parse_number(u0, "--u0");
        if (!(u > 0.0)) throw InvalidParameter("--u0 must be positive (got " + u0 + ")");
        WellParams w{r0, u, coulomb};
        w.validate();
        return w;
    }
};

struct QuantumArgs {
    std::string s = "0", m = "0", l = "0";

    QuantumNumbers get() const {
        QuantumNumbers q{parse_half(s, "--s"), parse_half(m, "--m"), parse_half(l, "--l"), 0};
        q.validate();
        return q;
    }
};

struct SolverArgs {
    int max_levels = 3;
    double window_lo = kUnset;
    double window_hi = kUnset;
    int grid = 2048;
    double tol = 0.0;
    bool serial = false;

    SolveOptions get() const {
        if (grid < 16) throw InvalidParameter("--grid must be >= 16");
        if (tol < 0.0) throw InvalidParameter("--tol must be >= 0");
        if (max_levels < 1) throw InvalidParameter("--max-levels must be >= 1");
        SolveOptions o;
        o.window_lo = window_lo;
        o.window_hi = window_hi;
        o.grid_points = grid;
        o.tol = tol;
        o.parallel = !serial;
        return o;
    }
};

void add_well(CLI::App* app, WellArgs& w) {
    app->add_option("--r0", w.r0, "well radius in a_B")->required();
    app->add_option("--u0", w.u0, "wall height in E_R, or inf");
}

void add_quantum(CLI::App* app, QuantumArgs& q, bool with_sm = true) {
    if (with_sm) {
        app->add_option("--s", q.s, "monopole number (integer or half-integer)");
        app->add_option("--m", q.m, "magnetic quantum number");
    }
    app->add_option("--l", q.l, "orbital momentum");
}

void add_solver(CLI::App* app, SolverArgs& s, const char* levels_help = "levels per channel") {
    app->add_option("--max-levels", s.max_levels, levels_help);
    app->add_option("--window-lo", s.window_lo, "lower edge of the energy scan (E_R)");
    app->add_option("--window-hi", s.window_hi, "upper edge of the energy scan (E_R)");
    app->add_option("--grid", s.grid, "scan grid points");
    app->add_option("--tol", s.tol, "root tolerance in E_R; 0 refines to machine precision");
    app->add_flag("--serial", s.serial, "scan without threads");
}

json inputs_of(const WellParams& w) { return {{"r0", w.rho0}, {"u0", std::isinf(w.u0) ? json("inf") : json(w.u0)}, {"coulomb", w.coulomb}}; }

json inputs_of(const SolveOptions& o) {
    json j = {{"grid", o.grid_points}, {"tol", o.tol}, {"parallel", o.parallel}};
    if (!std::isnan(o.window_lo)) j["window_lo"] = o.window_lo;
    if (!std::isnan(o.window_hi)) j["window_hi"] = o.window_hi;
    return j;
}

json level_json(const EnergyLevel& lv) {
    return {{"s", lv.qn.s.value()}, {"m", lv.qn.m.value()}, {"l", lv.qn.l.value()},
            {"n_r", lv.qn.n_r},     {"eps", lv.eps},        {"residual", lv.residual}};
}

json document(const std::string& command, json inputs) {
    return {{"command", command}, {"inputs", std::move(inputs)}, {"levels", json::array()},
            {"diagnostics", json::object()}, {"version", kVersion}};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f << text;
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
}

void print_levels(std::ostream& out, const std::vector<EnergyLevel>& levels, const char* energy) {
    out << "n_r " << energy << " residual\n";
    for (const auto& lv : levels) out << lv.qn.n_r << ' ' << num(lv.eps) << ' ' << num(lv.residual) << '\n';
}

std::vector<Track> parse_tracks(const std::string& text) {
    std::vector<Track> tracks;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ';');) {
        if (item.empty()) continue;
        std::vector<std::string> f;
        std::stringstream is(item);
        for (std::string x; std::getline(is, x, ',');) f.push_back(x);
        if (f.size() != 3) throw InvalidParameter("--tracks: expected s,m,l triples separated by ';' (got '" + item + "')");
        tracks.push_back({parse_half(f[0], "--tracks s"), parse_half(f[1], "--tracks m"), parse_half(f[2], "--tracks l")});
    }
    return tracks;
}

/// Expands --config into the flags it stores. Explicit flags come last and win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw InvalidParameter("--config needs a file name");
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return args;

    std::ifstream f(path);
    if (!f) throw IoError("cannot read config '" + path + "'");
    json cfg;
    try {
        cfg = json::parse(f);
    } catch (const json::exception& e) {
        throw InvalidParameter("config '" + path + "': " + e.what());
    }
    if (!cfg.is_object() || !cfg.contains("command") || !cfg["command"].is_string())
        throw InvalidParameter("config '" + path + "' must be an object with a \"command\" string");

    const std::string command = cfg["command"];
    if (!rest.empty() && rest.front().rfind("-", 0) != 0 && rest.front() != command)
        throw InvalidParameter("config is for '" + command + "' but the command line asks for '" + rest.front() + "'");
    if (!rest.empty() && rest.front() == command) rest.erase(rest.begin());

    std::vector<std::string> out{command};
    for (const auto& [key, value] : cfg.items()) {
        if (key == "command") continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) out.push_back("--" + key);
        } else if (value.is_string()) {
            out.push_back("--" + key);
            out.push_back(value.get<std::string>());
        } else if (value.is_number()) {
            out.push_back("--" + key);
            out.push_back(value.is_number_float() ? num(value.get<double>()) : value.dump());
        } else {
            throw InvalidParameter("config key '" + key + "' must be a string, number or boolean");
        }
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

/// The options given for `sub`, as a config document.
json run_config(const CLI::App* sub) {
    json j = {{"command", sub->get_name()}};
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_lnames().empty() || opt->count() == 0) continue;
        const std::string key = opt->get_lnames().front();
        if (key == "help" || key == "dump-config" || key == "json") continue;
        if (kFlags.count(key)) {
            j[key] = true;
            continue;
        }
        const std::string v = opt->results().back();
        long long n = 0;
        const auto ri = std::from_chars(v.data(), v.data() + v.size(), n);
        if (ri.ec == std::errc{} && ri.ptr == v.data() + v.size()) {
            j[key] = n;
            continue;
        }
        double x = 0.0;
        const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
        if (r.ec == std::errc{} && r.ptr == v.data() + v.size() && std::isfinite(x))
            j[key] = x;
        else
            j[key] = v;
    }
    return j;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::validation: return kValidation;
        case ErrorKind::solver: return kSolver;
        case ErrorKind::io: return kIo;
    }
    return kSolver;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of a charge-dyon system in a spherical quantum well", "dyonwell"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_version_flag("--version", kVersion);

    bool as_json = false, dump = false;
    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "print a JSON document instead of text");
        sub->add_flag("--dump-config", dump, "print the options as a config document and exit");
        sub->add_option("--config", "JSON config document with the same keys as the flags");
    };

    WellArgs well;
    QuantumArgs quantum;
    SolverArgs solver;

    auto* solve = app.add_subcommand("solve", "levels of one (s, m, l) channel");
    add_well(solve, well);
    add_quantum(solve, quantum);
    add_solver(solve, solver);
    common(solve);

    auto* free = app.add_subcommand("free", "levels of the well without the Coulomb term");
    add_well(free, well);
    add_quantum(free, quantum, false);
    add_solver(free, solver);
    common(free);

    auto* bind = app.add_subcommand("bind", "binding energies E0 - E for n_r = 0 .. max-levels - 1");
    add_well(bind, well);
    add_quantum(bind, quantum);
    add_solver(bind, solver, "number of n_r values");
    solver.max_levels = 1;
    common(bind);

    std::string preset_name, axis, spacing, observable, tracks, fixed, csv_out, plot_out;
    double lo = kUnset, hi = kUnset;
    int points = 0, sweep_levels = 0;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV and SVG");
    sweep->add_option("--preset", preset_name, "fig1 .. fig5");
    sweep->add_option("--axis", axis, "radius or height")->check(CLI::IsMember({"radius", "height"}));
    sweep->add_option("--lo", lo, "first axis value");
    sweep->add_option("--hi", hi, "last axis value");
    sweep->add_option("--points", points, "axis points");
    sweep->add_option("--spacing", spacing, "linear or log")->check(CLI::IsMember({"linear", "log"}));
    sweep->add_option("--fixed", fixed, "u0 for radius sweeps (or inf), r0 for height sweeps");
    sweep->add_option("--observable", observable, "energy, free_energy or binding")
        ->check(CLI::IsMember({"energy", "free_energy", "binding"}));
    sweep->add_option("--tracks", tracks, "s,m,l triples separated by ';'");
    sweep->add_option("--max-levels", sweep_levels, "levels per track");
    sweep->add_option("--window-lo", solver.window_lo, "lower edge of the energy scan (E_R)");
    sweep->add_option("--window-hi", solver.window_hi, "upper edge of the energy scan (E_R)");
    sweep->add_option("--grid", solver.grid, "scan grid points");
    sweep->add_option("--tol", solver.tol, "root tolerance in E_R");
    sweep->add_option("--out", csv_out, "CSV file; standard output when omitted");
    sweep->add_option("--plot", plot_out, "SVG file");
    common(sweep);

    int n_r = 0, rho_points = 50, theta_points = 5;
    double rho_max = kUnset, phi = 0.0;
    bool use_free = false;
    std::string wf_out;
    auto* wave = app.add_subcommand("wavefunction", "sample psi on a (rho, theta) grid to CSV");
    add_well(wave, well);
    add_quantum(wave, quantum);
    add_solver(wave, solver);
    wave->add_option("--n-r", n_r, "radial quantum number");
    wave->add_flag("--free", use_free, "use the problem without the Coulomb term");
    wave->add_option("--rho-max", rho_max, "outer sample radius; default 2 r0, or r0 for the infinite well");
    wave->add_option("--rho-points", rho_points, "radial samples from 0 to rho-max");
    wave->add_option("--theta-points", theta_points, "polar samples from 0 to pi");
    wave->add_option("--phi", phi, "azimuth");
    wave->add_option("--out", wf_out, "CSV file; standard output when omitted");
    common(wave);

    auto* selftest = app.add_subcommand("selftest", "special-function identities and solver cross-checks");
    common(selftest);

    std::vector<std::string> args;
    try {
        args = expand_config(raw_args);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(e.what()) + "\n" : app.help());
            return kOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kValidation;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    }

    CLI::App* sub = app.get_subcommands().front();
    if (dump) {
        out << run_config(sub).dump(2) << '\n';
        return kOk;
    }

    try {
        if (sub == solve || sub == free) {
            const auto q = quantum.get();
            const WellParams w = well.get(sub == solve);
            const auto opts = solver.get();
            const auto levels = sub == solve ? solve_levels(w, q.s, q.m, q.l, solver.max_levels, opts)
                                             : solve_free_levels(w, q.l, solver.max_levels, opts);
            if (as_json) {
                json in = {{"well", inputs_of(w)}};
                if (sub == solve) in["s"] = q.s.value(), in["m"] = q.m.value();
                in["l"] = q.l.value();
                in["max_levels"] = solver.max_levels;
                in["solver"] = inputs_of(opts);
                json doc = document(sub->get_name(), in);
                for (const auto& lv : levels) doc["levels"].push_back(level_json(lv));
                doc["diagnostics"]["found"] = levels.size();
                out << doc.dump(2) << '\n';
            } else {
                out << "# r0=" << num(w.rho0) << " u0=" << num(w.u0);
                if (sub == solve) out << " s=" << num(q.s) << " m=" << num(q.m);
                out << " l=" << num(q.l) << '\n';
                print_levels(out, levels, sub == solve ? "eps" : "eps0");
                if (levels.empty()) out << "# no levels in the scan window\n";
            }
        } else if (sub == bind) {
            const auto q = quantum.get();
            const WellParams w = well.get(true);
            const auto opts = solver.get();
            const auto levels = solve_levels(w, q.s, q.m, q.l, solver.max_levels, opts);
            json rows = json::array();
            if (!as_json) out << "# r0=" << num(w.rho0) << " u0=" << num(w.u0) << " s=" << num(q.s) << " m=" << num(q.m)
                              << " l=" << num(q.l) << "\nn_r e0 e eb\n";
            for (int i = 0; i < solver.max_levels; ++i) {
                try {
                    const auto b = binding_energy(w, q.s, q.m, q.l, i, opts);
                    rows.push_back({{"n_r", i}, {"status", "OK"}, {"e0", b.e0}, {"e", b.e}, {"eb", b.eb}});
                    if (!as_json) out << i << ' ' << num(b.e0) << ' ' << num(b.e) << ' ' << num(b.eb) << '\n';
                } catch (const FreeLevelAbsent& e) {
                    rows.push_back({{"n_r", i}, {"status", "ABSENT"}, {"reason", e.what()}});
                    if (!as_json) out << i << " ABSENT (" << e.what() << ")\n";
                } catch (const CoulombLevelAbsent& e) {
                    rows.push_back({{"n_r", i}, {"status", "ABSENT"}, {"reason", e.what()}});
                    if (!as_json) out << i << " ABSENT (" << e.what() << ")\n";
                }
            }
            if (as_json) {
                json doc = document("bind", {{"well", inputs_of(w)}, {"s", q.s.value()}, {"m", q.m.value()}, {"l", q.l.value()},
                                             {"max_levels", solver.max_levels}, {"solver", inputs_of(opts)}});
                for (const auto& lv : levels) doc["levels"].push_back(level_json(lv));
                doc["diagnostics"]["binding"] = rows;
                out << doc.dump(2) << '\n';
            }
        } else if (sub == sweep) {
            SweepSpec spec;
            if (!preset_name.empty()) spec = preset(preset_name);
            else if (tracks.empty()) throw InvalidParameter("sweep needs --preset or --tracks");
            if (!axis.empty()) spec.axis = axis == "radius" ? SweepAxis::radius : SweepAxis::height;
            if (!std::isnan(lo)) spec.lo = lo;
            if (!std::isnan(hi)) spec.hi = hi;
            if (points) spec.points = points;
            if (!spacing.empty()) spec.spacing = spacing == "log" ? Spacing::log : Spacing::linear;
            if (!fixed.empty()) spec.fixed = parse_number(fixed, "--fixed");
            if (!observable.empty())
                spec.observable = observable == "energy" ? Observable::energy
                                  : observable == "binding" ? Observable::binding : Observable::free_energy;
            if (!tracks.empty()) spec.tracks = parse_tracks(tracks);
            if (sweep_levels) spec.max_levels = sweep_levels;
            const auto opts = solver.get();
            const auto table = run_sweep(spec, opts);

            std::size_t ok = 0, absent = 0, failed = 0;
            json errors = json::array();
            for (const auto& r : table.rows) {
                if (r.status == RowStatus::ok) ++ok;
                else if (r.status == RowStatus::absent) ++absent;
                else {
                    ++failed;
                    errors.push_back({{"axis", r.axis}, {"l", r.l.value()}, {"n_r", r.n_r}, {"message", r.message}});
                }
            }
            const std::string csv = format_csv(table);
            if (!csv_out.empty()) write_text(csv_out, csv);
            if (!plot_out.empty()) {
                PlotStyle style;
                style.log_x = spec.spacing == Spacing::log;
                style.title = preset_name;
                emit_plot(table, plot_out, style);
            }
            if (as_json) {
                json tr = json::array();
                for (const auto& t : spec.tracks) tr.push_back({{"s", t.s.value()}, {"m", t.m.value()}, {"l", t.l.value()}});
                json doc = document("sweep", {{"preset", preset_name},
                                              {"axis", to_string(spec.axis)},
                                              {"lo", spec.lo},
                                              {"hi", spec.hi},
                                              {"points", spec.points},
                                              {"spacing", spec.spacing == Spacing::log ? "log" : "linear"},
                                              {"fixed", std::isinf(spec.fixed) ? json("inf") : json(spec.fixed)},
                                              {"observable", to_string(spec.observable)},
                                              {"tracks", tr},
                                              {"max_levels", spec.max_levels},
                                              {"solver", inputs_of(opts)}});
                doc["diagnostics"] = {{"rows", table.rows.size()}, {"ok", ok}, {"absent", absent}, {"error", failed},
                                      {"errors", errors}};
                if (!csv_out.empty()) doc["diagnostics"]["csv"] = csv_out;
                if (!plot_out.empty()) doc["diagnostics"]["plot"] = plot_out;
                if (csv_out.empty()) {
                    json rows = json::array();
                    for (const auto& r : table.rows) {
                        rows.push_back({{"axis", r.axis}, {"s", r.s.value()}, {"m", r.m.value()}, {"l", r.l.value()},
                                        {"n_r", r.n_r}, {"value", r.status == RowStatus::ok ? json(r.value) : json(nullptr)},
                                        {"status", to_string(r.status)}});
                    }
                    doc["rows"] = rows;
                }
                out << doc.dump(2) << '\n';
            } else if (csv_out.empty()) {
                out << csv;
            } else {
                out << "# " << table.rows.size() << " rows (" << ok << " ok, " << absent << " absent, " << failed
                    << " error) -> " << csv_out << '\n';
            }
            for (const auto& e : errors) err << "warning: ERROR row at axis " << num(e["axis"].get<double>()) << ": "
                                             << e["message"].get<std::string>() << '\n';
        } else if (sub == wave) {
            auto q = quantum.get();
            q.n_r = n_r;
            q.validate();
            const WellParams w = well.get(!use_free);
            auto opts = solver.get();
            if (rho_points < 1 || theta_points < 1) throw InvalidParameter("--rho-points and --theta-points must be >= 1");
            const auto levels = use_free ? solve_free_levels(w, q.l, n_r + 1, opts)
                                         : solve_levels(w, q.s, q.m, q.l, n_r + 1, opts);
            const EnergyLevel* found = nullptr;
            for (const auto& lv : levels)
                if (lv.qn.n_r == n_r) found = &lv;
            if (!found) {
                const std::string what = "no level n_r = " + std::to_string(n_r) + " for l = " + q.l.str();
                if (use_free) throw FreeLevelAbsent(what);
                throw CoulombLevelAbsent(what);
            }
            EnergyLevel lv = *found;
            lv.qn = q;
            const auto wf = normalize_level(lv, w);
            const double rmax = std::isnan(rho_max) ? (w.infinite() ? w.rho0 : 2.0 * w.rho0) : rho_max;
            if (!(rmax > 0.0)) throw InvalidParameter("--rho-max must be positive");

            std::string csv = "rho,theta,phi,re,im\n";
            json samples = json::array();
            for (int i = 0; i < rho_points; ++i) {
                const double rho = rho_points == 1 ? rmax : rmax * i / (rho_points - 1);
                for (int j = 0; j < theta_points; ++j) {
                    const double theta = theta_points == 1 ? 0.0 : std::numbers::pi * j / (theta_points - 1);
                    const auto psi = eval_wavefunction(wf, q, rho, theta, phi);
                    csv += num(rho) + ',' + num(theta) + ',' + num(phi) + ',' + num(psi.real()) + ',' + num(psi.imag()) + '\n';
                    if (as_json && wf_out.empty()) samples.push_back({rho, theta, phi, psi.real(), psi.imag()});
                }
            }
            if (!wf_out.empty()) write_text(wf_out, csv);
            if (as_json) {
                json doc = document("wavefunction", {{"well", inputs_of(w)}, {"s", q.s.value()}, {"m", q.m.value()},
                                                     {"l", q.l.value()}, {"n_r", n_r}, {"rho_max", rmax},
                                                     {"rho_points", rho_points}, {"theta_points", theta_points},
                                                     {"phi", phi}, {"solver", inputs_of(opts)}});
                doc["levels"].push_back(level_json(lv));
                doc["diagnostics"] = {{"C1", wf.C1}, {"A", wf.A}, {"I1", wf.I1}, {"I2", wf.I2}};
                if (!wf_out.empty()) doc["diagnostics"]["csv"] = wf_out;
                else doc["samples"] = samples;
                out << doc.dump(2) << '\n';
            } else if (wf_out.empty()) {
                out << csv;
            } else {
                out << "# eps=" << num(lv.eps) << " C1=" << num(wf.C1) << " A=" << num(wf.A) << " -> " << wf_out << '\n';
            }
        } else if (sub == selftest) {
            const auto checks = run_selftest();
            bool all = true;
            json list = json::array();
            for (const auto& c : checks) {
                all = all && c.passed;
                list.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"residual", c.residual},
                                {"tolerance", c.tolerance}});
                if (!as_json)
                    out << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " residual=" << num(c.residual)
                        << " tolerance=" << num(c.tolerance) << '\n';
            }
            if (as_json) {
                json doc = document("selftest", json::object());
                doc["diagnostics"] = {{"passed", all}, {"checks", list}};
                out << doc.dump(2) << '\n';
            }
            return all ? kOk : kSolver;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kSolver;
    }
    return kOk;
}

}  // namespace dyonwell::cli
