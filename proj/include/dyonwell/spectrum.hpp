#pragma once

// Bracketing, refinement and labelling of bound levels.

#include <functional>
#include <limits>
#include <vector>

#include "dyonwell/radial.hpp"
#include "dyonwell/units.hpp"

namespace dyonwell {

enum class LevelKind { coulomb_dyon, free };

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct ScanResult {
    std::vector<Bracket> roots;  ///< ascending
    std::vector<Bracket> poles;  ///< cells where a wall value changed sign
};

using SampleFn = std::function<MatchSample(double)>;

/// Evaluates f at lo, at the cell midpoints lo + (i + 1/2) h, h = (hi - lo) / grid_points,
/// and at hi. While fewer than `max_roots` root brackets are known the midpoints
/// continue past hi as long as they stay below `limit`, and hi is skipped. Root
/// brackets are sample pairs across which the Wronskian changes sign.
/// max_roots = 0 means all.
ScanResult scan_brackets(const SampleFn& f, Bracket window, int grid_points, int max_roots = 0,
                         double limit = -std::numeric_limits<double>::infinity());
/// Same grid evaluated with OpenMP; identical result.
ScanResult scan_brackets_parallel(const SampleFn& f, Bracket window, int grid_points, int max_roots = 0,
                                  double limit = -std::numeric_limits<double>::infinity());

inline constexpr double kDefaultRootTolerance = 1e-10;

/// Root of f inside a sign-changing bracket to |eps - root| <= tol; tol <= 0
/// refines to a few ulps.
double refine_root(const std::function<double(double)>& f, Bracket bracket, double tol = kDefaultRootTolerance);
/// Final sign-changing bracket of the refinement, hi - lo within the same tolerance.
Bracket refine_bracket(const std::function<double(double)>& f, Bracket bracket, double tol = kDefaultRootTolerance);

struct EnergyLevel {
    double eps = 0.0;
    QuantumNumbers qn;
    Bracket bracket;
    double residual = 0.0;  ///< half-width of the refined bracket around eps (E_R)
    LevelKind kind = LevelKind::coulomb_dyon;
};

struct SolveOptions {
    double window_lo = std::numeric_limits<double>::quiet_NaN();  ///< NaN: -2, or 0 without Coulomb
    double window_hi = std::numeric_limits<double>::quiet_NaN();  ///< NaN: u0 - 1e-6, or adaptive for the infinite well
    int grid_points = 2048;
    /// Root tolerance in E_R. Strongly localized states need eps to a few ulps
    /// before the wall values are meaningful, so the default is 0.
    double tol = 0.0;
    bool parallel = true;
};

/// Lowest `max_levels` levels of one (s, m, l) channel, ascending, with n_r
/// equal to the index. Fewer (possibly none) are returned if the window holds fewer,
/// or if the finest grid resolves only a node-consistent prefix of them.
std::vector<EnergyLevel> solve_levels(const WellParams& well, HalfInt s, HalfInt m, HalfInt l, int max_levels,
                                      const SolveOptions& opts = {});

/// Sign changes of u = rho R on (0, rho_max).
int count_nodes(const EnergyLevel& level, const WellParams& well);

}  // namespace dyonwell
