#pragma once

// Parameter sweeps over the well radius or height, with CSV and SVG output.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dyonwell/spectrum.hpp"

namespace dyonwell {

enum class SweepAxis { radius, height };
enum class Observable { energy, free_energy, binding };
enum class Spacing { linear, log };
enum class RowStatus { ok, absent, error };

struct Track {
    HalfInt s;
    HalfInt m;
    HalfInt l;
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::radius;
    double lo = 1.0;
    double hi = 10.0;
    int points = 2;
    Spacing spacing = Spacing::linear;
    double fixed = kInfiniteHeight;  ///< u0 for radius sweeps, rho0 for height sweeps
    std::vector<Track> tracks;
    Observable observable = Observable::energy;
    int max_levels = 1;  ///< per track

    void validate() const;
    std::vector<double> axis_values() const;
    WellParams well_at(double axis_value) const;
};

struct SweepRow {
    double axis = 0.0;
    HalfInt s;
    HalfInt m;
    HalfInt l;
    int n_r = 0;
    double value = 0.0;  ///< NaN unless status is ok
    RowStatus status = RowStatus::ok;
    std::string message;  ///< error text for status error
};

struct SweepTable {
    SweepSpec spec;
    SolveOptions options;
    std::string version;
    std::vector<SweepRow> rows;  ///< sorted by (l, n_r, axis, s, m)
};

/// One row per (track, n_r < max_levels, axis point). Missing levels are
/// `absent`; a point whose solve throws yields `error` rows for that track.
SweepTable run_sweep(const SweepSpec& spec, const SolveOptions& opts = {});

/// Figure setups fig1 .. fig5.
SweepSpec preset(std::string_view name);
std::vector<std::string> preset_names();

std::string_view to_string(RowStatus s);
std::string_view to_string(SweepAxis a);
std::string_view to_string(Observable o);

/// Header axis,s,m,l,n_r,value,status then one LF-terminated line per row.
/// Numbers use the shortest round-trip decimal form; value is empty unless ok.
std::string format_csv(const SweepTable& table);
/// Returns bytes written; IoError when `path` cannot be written.
std::size_t emit_csv(const SweepTable& table, const std::string& path);
/// Rows of a document produced by format_csv. Throws DomainError on malformed input.
std::vector<SweepRow> parse_csv(std::istream& in);

struct PlotStyle {
    int width = 720;
    int height = 480;
    bool log_x = false;
    std::string title;
};

/// SVG with one polyline per (s, m, l, n_r) track; absent or failed points
/// split the line and isolated points get a marker. Throws EmptyPlot without ok rows.
std::string format_plot(const SweepTable& table, const PlotStyle& style = {});
std::size_t emit_plot(const SweepTable& table, const std::string& path, const PlotStyle& style = {});

}  // namespace dyonwell
