#include "dyonwell/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "dyonwell/binding.hpp"
#include "dyonwell/errors.hpp"
#include "dyonwell/version.hpp"

namespace dyonwell {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double x) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string fmt(HalfInt h) { return fmt(h.value()); }

double parse_double(std::string_view s, const char* field) {
    double x = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw DomainError(std::string("bad number in column ") + field + ": '" + std::string(s) + "'");
    return x;
}

struct PointResult {
    std::vector<double> values;  ///< by n_r, NaN when absent
    std::string error;
};

PointResult solve_point(const SweepSpec& spec, const Track& t, const WellParams& well, const SolveOptions& opts) {
    PointResult r;
    r.values.assign(spec.max_levels, kNaN);
    auto place = [&](const std::vector<EnergyLevel>& levels) {
        for (const auto& lv : levels)
            if (lv.qn.n_r >= 0 && lv.qn.n_r < spec.max_levels) r.values[lv.qn.n_r] = lv.eps;
    };
    switch (spec.observable) {
        case Observable::energy:
            place(solve_levels(well, t.s, t.m, t.l, spec.max_levels, opts));
            break;
        case Observable::free_energy:
            place(solve_free_levels(well, t.l, spec.max_levels, opts));
            break;
        case Observable::binding: {
            const auto free = solve_free_levels(well, t.l, spec.max_levels, opts);
            if (free.empty()) break;
            WellParams with = well;
            with.coulomb = true;
            const auto bound = solve_levels(with, t.s, t.m, t.l, spec.max_levels, opts);
            for (const auto& f : free) {
                for (const auto& b : bound)
                    if (b.qn.n_r == f.qn.n_r && f.qn.n_r < spec.max_levels) r.values[f.qn.n_r] = f.eps - b.eps;
            }
            break;
        }
    }
    return r;
}

}  // namespace

void SweepSpec::validate() const {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw InvalidParameter("sweep range must satisfy lo < hi");
    if (points < 2) throw InvalidParameter("sweep needs at least 2 points");
    if (!(lo > 0.0)) throw InvalidParameter("sweep range must be positive");
    if (max_levels < 1) throw InvalidParameter("max_levels must be >= 1");
    if (tracks.empty()) throw InvalidParameter("sweep has no tracks");
    for (const auto& t : tracks) QuantumNumbers{t.s, t.m, t.l, 0}.validate();
    well_at(lo).validate();
    if (axis == SweepAxis::height && std::isinf(fixed)) throw InvalidParameter("height sweep needs a finite radius");
}

std::vector<double> SweepSpec::axis_values() const {
    std::vector<double> x(points);
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        x[i] = spacing == Spacing::log ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
    }
    x.front() = lo;
    x.back() = hi;
    return x;
}

WellParams SweepSpec::well_at(double axis_value) const {
    const bool coulomb = observable != Observable::free_energy;
    return axis == SweepAxis::radius ? WellParams{axis_value, fixed, coulomb} : WellParams{fixed, axis_value, coulomb};
}

SweepTable run_sweep(const SweepSpec& spec, const SolveOptions& opts) {
    spec.validate();
    const auto x = spec.axis_values();
    const int nt = static_cast<int>(spec.tracks.size()), np = spec.points;
    SolveOptions inner = opts;
    inner.parallel = false;

    std::vector<PointResult> results(static_cast<std::size_t>(nt) * np);
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < nt * np; ++k) {
        const Track& t = spec.tracks[k / np];
        try {
            results[k] = solve_point(spec, t, spec.well_at(x[k % np]), inner);
        } catch (const std::exception& e) {
            results[k].error = e.what();
        }
    }

    SweepTable table;
    table.spec = spec;
    table.options = opts;
    table.version = kVersion;
    for (int k = 0; k < nt * np; ++k) {
        const Track& t = spec.tracks[k / np];
        const PointResult& r = results[k];
        for (int n = 0; n < spec.max_levels; ++n) {
            SweepRow row{x[k % np], t.s, t.m, t.l, n, kNaN, RowStatus::absent, {}};
            if (!r.error.empty()) {
                row.status = RowStatus::error;
                row.message = r.error;
            } else if (!std::isnan(r.values[n])) {
                row.status = RowStatus::ok;
                row.value = r.values[n];
            }
            table.rows.push_back(std::move(row));
        }
    }
    std::stable_sort(table.rows.begin(), table.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tuple(a.l, a.n_r, a.axis, a.s, a.m) < std::tuple(b.l, b.n_r, b.axis, b.s, b.m);
    });
    return table;
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4", "fig5"}; }

SweepSpec preset(std::string_view name) {
    const HalfInt zero(0), half = HalfInt::from_twice(1);
    SweepSpec s;
    s.tracks = {{zero, zero, HalfInt(0)}, {half, half, half}, {zero, zero, HalfInt(1)}, {half, half, HalfInt::from_twice(3)}};
    s.points = 40;
    s.spacing = Spacing::log;
    s.max_levels = 3;
    if (name == "fig1") {
        s.lo = 0.5, s.hi = 20.0, s.fixed = kInfiniteHeight;
    } else if (name == "fig2") {
        s.lo = 0.1, s.hi = 20.0, s.fixed = 5.0;
    } else if (name == "fig3") {
        s.axis = SweepAxis::height, s.spacing = Spacing::linear;
        s.lo = 0.5, s.hi = 20.0, s.fixed = 3.0;
    } else if (name == "fig4") {
        s.observable = Observable::free_energy;
        s.lo = 0.3, s.hi = 10.0, s.fixed = 5.0;
    } else if (name == "fig5") {
        s.observable = Observable::binding, s.max_levels = 1;
        s.lo = 0.5, s.hi = 20.0, s.fixed = 5.0;
    } else {
        throw InvalidParameter("unknown preset '" + std::string(name) + "' (expected fig1 .. fig5)");
    }
    return s;
}

std::string_view to_string(RowStatus s) {
    switch (s) {
        case RowStatus::ok: return "OK";
        case RowStatus::absent: return "ABSENT";
        case RowStatus::error: return "ERROR";
    }
    return "";
}

std::string_view to_string(SweepAxis a) { return a == SweepAxis::radius ? "RADIUS" : "HEIGHT"; }

std::string_view to_string(Observable o) {
    switch (o) {
        case Observable::energy: return "ENERGY";
        case Observable::free_energy: return "FREE_ENERGY";
        case Observable::binding: return "BINDING";
    }
    return "";
}

std::string format_csv(const SweepTable& table) {
    std::string out = "axis,s,m,l,n_r,value,status\n";
    for (const auto& r : table.rows) {
        out += fmt(r.axis) + ',' + fmt(r.s) + ',' + fmt(r.m) + ',' + fmt(r.l) + ',' + std::to_string(r.n_r) + ',';
        if (r.status == RowStatus::ok) out += fmt(r.value);
        out += ',';
        out += to_string(r.status);
        out += '\n';
    }
    return out;
}

namespace {

std::size_t write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.close();
    if (!f) throw IoError("failed writing '" + path + "'");
    return bytes.size();
}

}  // namespace

std::size_t emit_csv(const SweepTable& table, const std::string& path) { return write_file(path, format_csv(table)); }

std::vector<SweepRow> parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "axis,s,m,l,n_r,value,status") throw DomainError("missing CSV header");
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        std::vector<std::string_view> f;
        std::string_view rest(line);
        for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
            f.push_back(rest.substr(0, pos));
        f.push_back(rest);
        if (f.size() != 7) throw DomainError("expected 7 columns: '" + line + "'");
        SweepRow r;
        r.axis = parse_double(f[0], "axis");
        r.s = HalfInt::from_double(parse_double(f[1], "s"));
        r.m = HalfInt::from_double(parse_double(f[2], "m"));
        r.l = HalfInt::from_double(parse_double(f[3], "l"));
        r.n_r = static_cast<int>(parse_double(f[4], "n_r"));
        if (f[6] == "OK") {
            r.status = RowStatus::ok;
            r.value = parse_double(f[5], "value");
        } else if (f[6] == "ABSENT" || f[6] == "ERROR") {
            r.status = f[6] == "ABSENT" ? RowStatus::absent : RowStatus::error;
            r.value = kNaN;
            if (!f[5].empty()) throw DomainError("value must be empty for status " + std::string(f[6]));
        } else {
            throw DomainError("unknown status '" + std::string(f[6]) + "'");
        }
        rows.push_back(r);
    }
    return rows;
}

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
const char* const kDash[] = {"", "6 3", "2 3", "8 3 2 3"};

std::string num(double x, const char* f = "%.2f") {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string axis_label(const SweepSpec& s) {
    return s.axis == SweepAxis::radius ? "r0 (a_B)" : "U0 (E_R)";
}

std::string value_label(const SweepSpec& s) {
    switch (s.observable) {
        case Observable::energy: return "E (E_R)";
        case Observable::free_energy: return "E0 (E_R)";
        case Observable::binding: return "Eb (E_R)";
    }
    return "";
}

std::vector<double> linear_ticks(double lo, double hi) {
    const double raw = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double k : {1.0, 2.0, 5.0, 10.0})
        if (k * mag >= raw) {
            step = k * mag;
            break;
        }
    std::vector<double> t;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * step; v += step) t.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    return t;
}

}  // namespace

std::string format_plot(const SweepTable& table, const PlotStyle& style) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    std::size_t ok = 0;
    for (const auto& r : table.rows) {
        xmin = std::min(xmin, r.axis), xmax = std::max(xmax, r.axis);
        if (r.status != RowStatus::ok) continue;
        ++ok;
        ymin = std::min(ymin, r.value), ymax = std::max(ymax, r.value);
    }
    if (ok == 0) throw EmptyPlot("table has no OK rows");
    const bool logx = style.log_x && xmin > 0.0;
    if (xmax == xmin) xmin -= 0.5, xmax += 0.5;
    if (logx && xmin <= 0.0) xmin = xmax / 10.0;
    const double pad = ymax > ymin ? 0.05 * (ymax - ymin) : 1.0;
    ymin -= pad, ymax += pad;

    const double left = 70, right = 150, top = 40, bottom = 55;
    const double pw = style.width - left - right, ph = style.height - top - bottom;
    auto tx = [&](double x) {
        const double t = logx ? (std::log(x) - std::log(xmin)) / (std::log(xmax) - std::log(xmin)) : (x - xmin) / (xmax - xmin);
        return left + t * pw;
    };
    auto ty = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.width << "\" height=\"" << style.height
      << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!style.title.empty())
        o << "<text x=\"" << num(left + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << style.title
          << "</text>\n";
    o << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

    std::vector<double> xt;
    if (logx) {
        for (double d = std::pow(10.0, std::floor(std::log10(xmin))); d <= xmax * (1 + 1e-12); d *= 10.0)
            for (double k : {1.0, 2.0, 5.0})
                if (k * d >= xmin * (1 - 1e-12) && k * d <= xmax * (1 + 1e-12)) xt.push_back(k * d);
    } else {
        xt = linear_ticks(xmin, xmax);
    }
    for (double v : xt) {
        o << "<line x1=\"" << num(tx(v)) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(tx(v)) << "\" y2=\""
          << num(top + ph + 5) << "\" stroke=\"black\"/>"
          << "<text x=\"" << num(tx(v)) << "\" y=\"" << num(top + ph + 18) << "\" text-anchor=\"middle\">" << num(v, "%g")
          << "</text>\n";
    }
    for (double v : linear_ticks(ymin, ymax)) {
        o << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(ty(v)) << "\" x2=\"" << num(left) << "\" y2=\""
          << num(ty(v)) << "\" stroke=\"black\"/>"
          << "<text x=\"" << num(left - 8) << "\" y=\"" << num(ty(v) + 4) << "\" text-anchor=\"end\">" << num(v, "%g")
          << "</text>\n";
    }
    o << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(style.height - 12.0) << "\" text-anchor=\"middle\">"
      << axis_label(table.spec) << "</text>\n"
      << "<text x=\"18\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num(top + ph / 2) << ")\">" << value_label(table.spec) << "</text>\n";

    // colour by l, dash by n_r
    std::map<HalfInt, int> colour;
    for (const auto& r : table.rows) colour.emplace(r.l, 0);
    int c = 0;
    for (auto& [l, idx] : colour) idx = c++;

    using Key = std::tuple<HalfInt, int, HalfInt, HalfInt>;
    std::map<Key, std::vector<const SweepRow*>> tracks;
    for (const auto& r : table.rows) tracks[{r.l, r.n_r, r.s, r.m}].push_back(&r);
    for (const auto& [key, rows] : tracks) {
        const auto& [l, nr, s, m] = key;
        const char* col = kPalette[colour[l] % std::size(kPalette)];
        const char* dash = kDash[nr % std::size(kDash)];
        std::vector<std::vector<const SweepRow*>> runs(1);
        for (const SweepRow* r : rows) {
            if (r->status == RowStatus::ok)
                runs.back().push_back(r);
            else if (!runs.back().empty())
                runs.emplace_back();
        }
        o << "<g class=\"track\" data-s=\"" << fmt(s) << "\" data-m=\"" << fmt(m) << "\" data-l=\"" << fmt(l)
          << "\" data-nr=\"" << nr << "\" stroke=\"" << col << "\" fill=\"none\">\n";
        for (const auto& run : runs) {
            if (run.size() == 1) {
                o << "<circle cx=\"" << num(tx(run[0]->axis)) << "\" cy=\"" << num(ty(run[0]->value))
                  << "\" r=\"3\" fill=\"" << col << "\"/>\n";
            } else if (run.size() > 1) {
                o << "<polyline stroke-width=\"1.5\"";
                if (*dash) o << " stroke-dasharray=\"" << dash << '"';
                o << " points=\"";
                for (std::size_t i = 0; i < run.size(); ++i)
                    o << (i ? " " : "") << num(tx(run[i]->axis)) << ',' << num(ty(run[i]->value));
                o << "\"/>\n";
            }
        }
        o << "</g>\n";
    }

    double ly = top + 10;
    for (const auto& [l, idx] : colour) {
        const double lx = left + pw + 15;
        o << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 25) << "\" y2=\"" << num(ly)
          << "\" stroke=\"" << kPalette[idx % std::size(kPalette)] << "\" stroke-width=\"2\"/>"
          << "<text x=\"" << num(lx + 32) << "\" y=\"" << num(ly + 4) << "\">l = " << fmt(l) << "</text>\n";
        ly += 18;
    }
    o << "<text x=\"" << num(left + pw + 15) << "\" y=\"" << num(ly + 8) << "\" font-size=\"10\">dash: n_r</text>\n";
    o << "</svg>\n";
    return o.str();
}

std::size_t emit_plot(const SweepTable& table, const std::string& path, const PlotStyle& style) {
    return write_file(path, format_plot(table, style));
}

}  // namespace dyonwell
