#include "dyonwell/binding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dyonwell/errors.hpp"

namespace dyonwell {

namespace {

const EnergyLevel* find_level(const std::vector<EnergyLevel>& levels, int n_r) {
    const auto it = std::find_if(levels.begin(), levels.end(), [n_r](const EnergyLevel& lv) { return lv.qn.n_r == n_r; });
    return it == levels.end() ? nullptr : &*it;
}

}  // namespace

std::vector<EnergyLevel> solve_free_levels(const WellParams& well, HalfInt l, int max_levels, const SolveOptions& opts) {
    WellParams free = well;
    free.coulomb = false;
    // the radial problem only sees l; any admissible (s, m) of the same class will do
    const HalfInt sm = l.is_integer() ? HalfInt(0) : HalfInt::from_twice(1);
    SolveOptions o = opts;
    if (o.window_lo < 0.0) o.window_lo = std::nan("");
    return solve_levels(free, sm, sm, l, max_levels, o);
}

BindingResult binding_energy(const WellParams& well, HalfInt s, HalfInt m, HalfInt l, int index,
                             const SolveOptions& opts) {
    QuantumNumbers{s, m, l, index}.validate();
    WellParams with = well;
    with.coulomb = true;

    const auto free = solve_free_levels(well, l, index + 1, opts);
    const EnergyLevel* f = find_level(free, index);
    if (!f)
        throw FreeLevelAbsent("no level n_r = " + std::to_string(index) + " for l = " + l.str() +
                              " without the Coulomb term");
    const auto bound = solve_levels(with, s, m, l, index + 1, opts);
    const EnergyLevel* c = find_level(bound, index);
    if (!c) throw CoulombLevelAbsent("no level n_r = " + std::to_string(index) + " for l = " + l.str());

    BindingResult r;
    r.e0 = f->eps;
    r.e = c->eps;
    r.eb = r.e0 - r.e;
    r.qn = {s, m, l, index};
    r.well = with;
    return r;
}

}  // namespace dyonwell
