#include "dyonwell/normalize.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <vector>

#include "dyonwell/errors.hpp"
#include "dyonwell/specfun.hpp"

namespace dyonwell {

namespace {

constexpr double kQuadTol = 1e-10;
constexpr int kInsidePanels = 8;
constexpr double kMaxLog = 700.0;

struct Quad {
    double value = 0.0;
    double error = 0.0;

    template <class F>
    void add(F&& f, double a, double b) {
        double err = 0.0;
        const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13, &err);
        value += v;
        error += err;
    }

    double checked(const char* what) const {
        if (!std::isfinite(value) || error > kQuadTol * std::abs(value))
            throw QuadratureError(std::string(what) + " did not converge (estimated error " + std::to_string(error) + ")");
        return value;
    }
};

struct Scaled {
    double ref_log = 0.0, out_log = 0.0, ratio = 0.0;
    double i1 = 0.0, j2 = 0.0;
};

double well_gamma2(const WellParams& well, double eps) { return std::sqrt(well.u0 - eps); }

Scaled scaled_parts(const EnergyLevel& level, const WellParams& well, bool integrals) {
    const MatchingContext ctx(well, level.qn.l);
    const double eps = level.eps, rho0 = well.rho0;
    Scaled s;
    const auto in0 = ctx.inside(eps, rho0);
    s.ref_log = in0.log_scale;
    if (!well.infinite()) {
        const auto out0 = ctx.outside(eps, rho0);
        if (out0.value == 0.0) throw AmplitudeOverflow("outside solution vanishes at the wall");
        s.out_log = out0.log_scale;
        s.ratio = in0.value / out0.value;
    }
    if (!integrals) return s;

    auto inside = [&](double r) {
        if (r == 0.0) return 0.0;
        const auto v = ctx.inside(eps, r);
        const double x = r * v.value * std::exp(v.log_scale - s.ref_log);
        return x * x;
    };
    Quad q1;
    for (int i = 0; i < kInsidePanels; ++i) q1.add(inside, rho0 * i / kInsidePanels, rho0 * (i + 1) / kInsidePanels);
    s.i1 = q1.checked("inside normalization integral");

    if (!well.infinite()) {
        auto outside = [&](double r) {
            const auto v = ctx.outside(eps, r);
            const double x = r * v.value * std::exp(v.log_scale - s.out_log);
            return x * x;
        };
        const double g2 = well_gamma2(well, eps);
        const double rmax = outer_radius(rho0, g2, well.coulomb ? 1.0 / g2 : 0.0);
        Quad q2;
        double a = rho0, d = std::min(1.0 / g2, rho0);
        while (a < rmax) {
            const double b = std::min(rmax, a + d);
            q2.add(outside, a, b);
            a = b;
            d *= 2.0;
        }
        s.j2 = q2.checked("outside normalization integral");
    }
    return s;
}

double representable(double mantissa, double log_scale, const char* what) {
    if (std::abs(log_scale) > kMaxLog) throw AmplitudeOverflow(std::string(what) + " is out of floating-point range");
    return mantissa * std::exp(log_scale);
}

}  // namespace

double matching_amplitude(const EnergyLevel& level, const WellParams& well) {
    if (well.infinite()) throw NotApplicable("the infinite well has no outside solution");
    const auto s = scaled_parts(level, well, false);
    return representable(s.ratio, s.ref_log - s.out_log, "matching amplitude");
}

NormIntegrals norm_integrals(const EnergyLevel& level, const WellParams& well) {
    const auto s = scaled_parts(level, well, true);
    NormIntegrals n;
    n.I1 = s.i1 * std::exp(2.0 * s.ref_log);
    n.I2 = well.infinite() ? 0.0 : s.j2 * std::exp(2.0 * s.out_log);
    return n;
}

RadialWavefunction normalize_level(const EnergyLevel& level, const WellParams& well) {
    const auto s = scaled_parts(level, well, true);
    RadialWavefunction wf;
    wf.level = level;
    wf.well = well;
    wf.ref_log = s.ref_log;
    wf.out_log = s.out_log;
    wf.amplitude_ratio = s.ratio;
    wf.scaled_total = s.i1 + s.ratio * s.ratio * s.j2;
    wf.I1 = s.i1 * std::exp(2.0 * s.ref_log);
    if (!well.infinite()) {
        wf.A = representable(s.ratio, s.ref_log - s.out_log, "matching amplitude");
        wf.I2 = s.j2 * std::exp(2.0 * s.out_log);
    }
    wf.C1 = std::exp(-s.ref_log) / std::sqrt(wf.scaled_total);
    return wf;
}

double radial_value(const RadialWavefunction& wf, double rho) {
    if (!(rho >= 0.0)) throw DomainError("rho must be >= 0");
    const MatchingContext ctx(wf.well, wf.level.qn.l);
    const double norm = 1.0 / std::sqrt(wf.scaled_total);
    if (rho <= wf.well.rho0) {
        const auto v = ctx.inside(wf.level.eps, rho);
        return norm * v.value * std::exp(v.log_scale - wf.ref_log);
    }
    if (wf.well.infinite()) return 0.0;
    const auto v = ctx.outside(wf.level.eps, rho);
    return norm * wf.amplitude_ratio * v.value * std::exp(v.log_scale - wf.out_log);
}

double angular_z(HalfInt l, HalfInt m, HalfInt s, double theta) {
    return std::sqrt((2.0 * l.value() + 1.0) / 2.0) * specfun::wigner_d(l, m, s, theta);
}

std::complex<double> eval_wavefunction(const RadialWavefunction& wf, const QuantumNumbers& qn, double rho,
                                       double theta, double phi) {
    qn.validate();
    if (qn.l != wf.level.qn.l) throw InvalidQuantumNumbers("wavefunction was solved for l = " + wf.level.qn.l.str());
    const double r = radial_value(wf, rho) * angular_z(qn.l, qn.m, qn.s, theta);
    return std::polar(r / std::sqrt(2.0 * std::numbers::pi), qn.m.value() * phi);
}

}  // namespace dyonwell
