#pragma once

// Reference problem without the Coulomb term and the binding energy
// E_b = E0 - E between matching (l, n_r) levels of the two problems.

#include <vector>

#include "dyonwell/spectrum.hpp"

namespace dyonwell {

struct BindingResult {
    double e0 = 0.0;  ///< level without the Coulomb term
    double e = 0.0;   ///< charge-dyon level
    double eb = 0.0;  ///< e0 - e
    QuantumNumbers qn;
    WellParams well;
};

/// Lowest levels of the reference problem for orbital momentum l; `well.coulomb`
/// is ignored. Empty when the well is below threshold.
std::vector<EnergyLevel> solve_free_levels(const WellParams& well, HalfInt l, int max_levels,
                                           const SolveOptions& opts = {});

/// Pairs the n_r = index levels of both problems. Throws FreeLevelAbsent or
/// CoulombLevelAbsent when either ladder is too short.
BindingResult binding_energy(const WellParams& well, HalfInt s, HalfInt m, HalfInt l, int index,
                             const SolveOptions& opts = {});

}  // namespace dyonwell
