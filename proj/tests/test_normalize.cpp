#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "dyonwell/errors.hpp"
#include "dyonwell/normalize.hpp"
#include "dyonwell/specfun.hpp"
#include "oracles/oracles.hpp"

using namespace dyonwell;

namespace {

const HalfInt kZero(0);
const HalfInt kHalf = HalfInt::from_twice(1);

std::pair<HalfInt, HalfInt> channel(HalfInt l) { return l.is_integer() ? std::pair{kZero, kZero} : std::pair{kHalf, kHalf}; }

EnergyLevel trial_level(double eps, HalfInt l) {
    EnergyLevel lv;
    lv.eps = eps;
    lv.qn = {l.is_integer() ? kZero : kHalf, l.is_integer() ? kZero : kHalf, l, 0};
    return lv;
}

double rho_max(const RadialWavefunction& wf) {
    if (wf.well.infinite()) return wf.well.rho0;
    const double g2 = std::sqrt(wf.well.u0 - wf.level.eps);
    return outer_radius(wf.well.rho0, g2, wf.well.coulomb ? 1.0 / g2 : 0.0);
}

// int rho^2 f g over (0, rho_max) by composite Gauss-Legendre split at the wall
template <class F>
double radial_quadrature(const RadialWavefunction& wf, F&& f) {
    const double rho0 = wf.well.rho0;
    double total = oracles::gauss_legendre([&](double r) { return r * r * f(r); }, 0.0, rho0, 64);
    if (!wf.well.infinite()) {
        const double rmax = rho_max(wf);
        total += oracles::gauss_legendre([&](double r) { return r * r * f(r); }, rho0, rmax, 400);
    }
    return total;
}

std::vector<RadialWavefunction> sample_wavefunctions() {
    std::vector<RadialWavefunction> out;
    for (const WellParams& w : {WellParams{1.0, 5.0, true}, WellParams{3.0, 2.0, true}, WellParams{6.0, 10.0, true},
                                WellParams{2.0, 8.0, false}, WellParams{1.5, kInfiniteHeight, true}}) {
        for (int tl = 0; tl <= 3; ++tl) {
            const HalfInt l = HalfInt::from_twice(tl);
            const auto [s, m] = channel(l);
            for (const auto& lv : solve_levels(w, s, m, l, 3)) out.push_back(normalize_level(lv, w));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("matching_amplitude examples") {
    const WellParams w{20.0, 5.0, true};
    const auto lv = solve_levels(w, kZero, kZero, kZero, 1).at(0);
    const double ratio = radial_inside(lv.eps, 0.0, 20.0) / radial_outside(lv.eps, 0.0, 20.0, 5.0);
    CHECK(matching_amplitude(lv, w) == doctest::Approx(ratio).epsilon(1e-12));

    // U == 1 when k2 = l + 1
    const WellParams c{2.0, 0.5, true};
    const double eps = -0.5, g1 = std::sqrt(0.5), g2 = 1.0;
    const double m = specfun::kummer_m(1.0 - 1.0 / g1, 2.0, 2.0 * g1 * 2.0).value.real();
    CHECK(matching_amplitude(trial_level(eps, kZero), c) == doctest::Approx(std::exp((g2 - g1) * 2.0) * m).epsilon(1e-12));

    for (const WellParams& g : {WellParams{1.0, 5.0, true}, WellParams{4.0, 3.0, true}}) {
        for (int tl = 0; tl <= 3; ++tl) {
            const HalfInt l = HalfInt::from_twice(tl);
            const auto [s, mm] = channel(l);
            for (const auto& x : solve_levels(g, s, mm, l, 3)) {
                const double a = matching_amplitude(x, g);
                const double r1 = radial_inside(x.eps, l.value(), g.rho0);
                const double r2 = radial_outside(x.eps, l.value(), g.rho0, g.u0);
                CHECK(std::abs(r1 - a * r2) <= 1e-10 * std::abs(r1));
            }
        }
    }

    CHECK_THROWS_AS(matching_amplitude(trial_level(-0.5, kZero), {1.0, kInfiniteHeight, true}), NotApplicable);
}

TEST_CASE("norm_integrals examples") {
    const WellParams w{20.0, 5.0, true};
    const auto lv = solve_levels(w, kZero, kZero, kZero, 1).at(0);
    const auto n = norm_integrals(lv, w);
    const double a = matching_amplitude(lv, w);
    CHECK(n.I1 + a * a * n.I2 == doctest::Approx(0.25).epsilon(1e-8));

    const WellParams box{1.0, kInfiniteHeight, false};
    const auto b = solve_levels(box, kZero, kZero, kZero, 1).at(0);
    const auto nb = norm_integrals(b, box);
    const double pi2 = std::numbers::pi * std::numbers::pi;
    CHECK(nb.I1 == doctest::Approx(1.0 / (2.0 * pi2)).epsilon(1e-10));
    CHECK(nb.I2 == 0.0);
    CHECK(normalize_level(b, box).C1 == doctest::Approx(std::numbers::pi * std::sqrt(2.0)).epsilon(1e-10));

    // a = 0 outside: I2 = Gamma(2l + 3, 2 g2 rho0) / (2 g2)^{2l + 3}
    for (double l : {0.0, 1.0}) {
        const double g2 = 1.0 / (l + 1.0), rho0 = 1.5, u0 = 0.5;
        const WellParams c{rho0, u0, true};
        const auto ni = norm_integrals(trial_level(u0 - g2 * g2, HalfInt::from_double(l)), c);
        const double ref = boost::math::tgamma(2.0 * l + 3.0, 2.0 * g2 * rho0) / std::pow(2.0 * g2, 2.0 * l + 3.0);
        CHECK(ni.I2 == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("normalization holds for solved levels") {
    for (const auto& wf : sample_wavefunctions()) {
        CHECK(wf.C1 > 0.0);
        const double total = wf.C1 * wf.C1 * (wf.I1 + wf.A * wf.A * wf.I2);
        CHECK(std::abs(total - 1.0) < 1e-10);
        const double gl = radial_quadrature(wf, [&](double r) { return std::pow(radial_value(wf, r), 2); });
        CHECK(std::abs(gl - 1.0) < 1e-8);
        if (wf.well.infinite()) CHECK(wf.I2 == 0.0);
    }
}

TEST_CASE("radial functions of one channel are orthogonal") {
    for (const WellParams& w : {WellParams{2.0, 8.0, true}, WellParams{4.0, 3.0, true}, WellParams{2.0, 8.0, false}}) {
        for (int tl = 0; tl <= 3; ++tl) {
            const HalfInt l = HalfInt::from_twice(tl);
            const auto [s, m] = channel(l);
            const auto lv = solve_levels(w, s, m, l, 3);
            std::vector<RadialWavefunction> wf;
            for (const auto& x : lv) wf.push_back(normalize_level(x, w));
            for (std::size_t i = 0; i < wf.size(); ++i) {
                for (std::size_t j = i + 1; j < wf.size(); ++j) {
                    auto wider = wf[i].level.eps > wf[j].level.eps ? wf[i] : wf[j];
                    const double overlap =
                        radial_quadrature(wider, [&](double r) { return radial_value(wf[i], r) * radial_value(wf[j], r); });
                    CHECK(std::abs(overlap) < 1e-6);
                }
            }
        }
    }
}

TEST_CASE("angular normalization") {
    for (int tl = 0; tl <= 9; ++tl) {
        const HalfInt l = HalfInt::from_twice(tl);
        for (int tm = -tl; tm <= tl; tm += 2) {
            for (int ts = -tl; ts <= tl; ts += 2) {
                const HalfInt m = HalfInt::from_twice(tm), s = HalfInt::from_twice(ts);
                const double n = oracles::gauss_legendre(
                    [&](double t) { return std::pow(angular_z(l, m, s, t), 2) * std::sin(t); }, 0.0, std::numbers::pi, 8);
                CHECK(std::abs(n - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("eval_wavefunction") {
    const WellParams w{3.0, 5.0, true};
    const auto lv0 = solve_levels(w, kZero, kZero, kZero, 1).at(0);
    const auto wf0 = normalize_level(lv0, w);
    const QuantumNumbers q0{kZero, kZero, kZero, 0};
    const auto a = eval_wavefunction(wf0, q0, 1.3, 0.2, 0.7);
    const auto b = eval_wavefunction(wf0, q0, 1.3, 2.5, -1.9);
    CHECK(std::abs(a - b) < 1e-14 * std::abs(a));

    const QuantumNumbers q{kHalf, HalfInt::from_twice(-1), HalfInt::from_twice(3), 0};
    const auto lv = solve_levels(w, q.s, q.m, q.l, 1).at(0);
    const auto wf = normalize_level(lv, w);
    for (double phi : {0.0, 1.0, 2.5, 5.0})
        CHECK(std::norm(eval_wavefunction(wf, q, 2.0, 1.1, phi)) ==
              doctest::Approx(std::norm(eval_wavefunction(wf, q, 2.0, 1.1, 0.3))).epsilon(1e-13));

    for (double d : {1e-3, 1e-5, 1e-7}) {
        const auto in = eval_wavefunction(wf, q, 3.0 - d, 0.8, 0.4);
        const auto out = eval_wavefunction(wf, q, 3.0 + d, 0.8, 0.4);
        CHECK(std::abs(in - out) < 10.0 * d * std::abs(in));
    }

    // product of radial, polar and azimuthal quadratures
    const double radial = radial_quadrature(wf, [&](double r) { return std::pow(radial_value(wf, r), 2); });
    const double polar = oracles::gauss_legendre(
        [&](double t) { return std::pow(angular_z(q.l, q.m, q.s, t), 2) * std::sin(t); }, 0.0, std::numbers::pi, 8);
    const double azimuthal = oracles::gauss_legendre(
        [&](double p) { return std::norm(std::polar(1.0 / std::sqrt(2.0 * std::numbers::pi), q.m.value() * p)); }, 0.0,
        2.0 * std::numbers::pi, 4);
    CHECK(std::abs(radial * polar * azimuthal - 1.0) < 1e-8);

    CHECK_THROWS_AS(eval_wavefunction(wf, q0, 1.0, 0.0, 0.0), InvalidQuantumNumbers);
}
