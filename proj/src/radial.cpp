#include "dyonwell/radial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "dyonwell/errors.hpp"
#include "dyonwell/specfun.hpp"

namespace dyonwell {

namespace {

using cd = std::complex<double>;

constexpr double kImagTolerance = 1e-9;

void require_rho(double rho) {
    if (!(rho >= 0.0) || !std::isfinite(rho)) throw DomainError("rho must be finite and >= 0");
}

// rho^l and l/rho handled together so that rho = 0 works for l = 0.
double log_rho_power(double l, double rho) { return l == 0.0 ? 0.0 : l * std::log(rho); }
double l_over_rho(double l, double rho) { return l == 0.0 ? 0.0 : l / rho; }

RadialValue at_origin(double l, double slope0) {
    RadialValue r;
    if (l == 0.0) {
        r.value = 1.0;
        r.derivative = slope0;
    } else {
        r.value = 0.0;
        r.derivative = l == 1.0 ? 1.0 : (l < 1.0 ? INFINITY : 0.0);
    }
    return r;
}

struct Pair {
    double value;
    double derivative;
};

// Real (value, derivative) of e^{-g1 rho} M(a; b; 2 g1 rho); the rho^l factor is omitted.
Pair inside_reduced(double eps, double l, double rho) {
    const auto p = reduced_params(eps, kInfiniteHeight);
    const double b = 2.0 * l + 2.0;
    if (eps < 0.0) {
        const double g = p.gamma1.real();
        const auto m = specfun::kummer_m_scaled(l + 1.0 - p.k1.real(), b, 2.0 * g * rho);
        return {m.value, -g * m.value + 2.0 * g * m.derivative};
    }
    const cd g = p.gamma1;
    const auto m = specfun::kummer_m_scaled(cd(l + 1.0) - p.k1, b, 2.0 * g * rho);
    const cd phase = std::exp(-g * rho);
    const cd v = phase * m.value;
    const cd d = phase * (-g * m.value + 2.0 * g * m.derivative);
    const double s = std::abs(g) + 1.0;
    const double re = std::hypot(v.real(), d.real() / s);
    const double im = std::hypot(v.imag(), d.imag() / s);
    if (im > kImagTolerance * re)
        throw ConvergenceError("inside solution not real after continuation", im / re);
    return {v.real(), d.real()};
}

// (value, derivative) of e^{-g2 rho} U(a; b; 2 g2 rho); the rho^l factor is omitted.
Pair outside_reduced(double eps, double l, double rho, double u0) {
    const auto p = reduced_params(eps, u0);
    const double g = p.gamma2;
    const auto u = specfun::tricomi_u_scaled(l + 1.0 - p.k2, 2.0 * l + 2.0, 2.0 * g * rho);
    return {u.value, -g * u.value + 2.0 * g * u.derivative};
}

MatchSample assemble(Pair in, Pair out, double scale) {
    MatchSample s;
    s.inside = in.value;
    s.outside = out.value;
    s.value = in.derivative / in.value - out.derivative / out.value;
    s.wronskian = (in.derivative * out.value - in.value * out.derivative) /
                  (std::hypot(in.value, in.derivative / scale) * std::hypot(out.value, out.derivative / scale) * scale);
    return s;
}

void require_finite_well(double u0) {
    if (std::isinf(u0)) throw NotApplicable("outside region is excluded for an infinite well");
}

}  // namespace

double RadialValue::unscaled() const { return value * std::exp(log_scale); }

RadialValue coulomb_inside(double eps, double l, double rho) {
    require_rho(rho);
    const auto p = reduced_params(eps, kInfiniteHeight);
    const double b = 2.0 * l + 2.0;
    if (rho == 0.0) {
        // d/drho of e^{-g rho} M(a; b; 2 g rho) at 0 is -g + 2 g a / b = -1 / (l + 1)
        return at_origin(l, -1.0 / (l + 1.0));
    }
    RadialValue r;
    if (eps < 0.0) {
        const double g = p.gamma1.real();
        const auto m = specfun::kummer_m_scaled(l + 1.0 - p.k1.real(), b, 2.0 * g * rho);
        r.value = m.value;
        r.derivative = (-g + l_over_rho(l, rho)) * m.value + 2.0 * g * m.derivative;
        r.log_scale = m.log_scale - g * rho + log_rho_power(l, rho);
        return r;
    }
    const cd g = p.gamma1;
    const auto m = specfun::kummer_m_scaled(cd(l + 1.0) - p.k1, b, 2.0 * g * rho);
    const cd phase = std::exp(-g * rho);
    const cd v = phase * m.value;
    const cd d = phase * ((-g + l_over_rho(l, rho)) * m.value + 2.0 * g * m.derivative);
    const double s = std::abs(g) + 1.0 + l_over_rho(l, rho);
    const double re = std::hypot(v.real(), d.real() / s);
    const double im = std::hypot(v.imag(), d.imag() / s);
    if (im > kImagTolerance * re)
        throw ConvergenceError("inside solution not real after continuation", im / re);
    r.value = v.real();
    r.derivative = d.real();
    r.log_scale = m.log_scale + log_rho_power(l, rho);
    return r;
}

RadialValue coulomb_outside(double eps, double l, double rho, double u0) {
    require_finite_well(u0);
    if (!(rho > 0.0)) throw DomainError("outside solution needs rho > 0");
    const auto p = reduced_params(eps, u0);
    const double g = p.gamma2;
    const auto u = specfun::tricomi_u_scaled(l + 1.0 - p.k2, 2.0 * l + 2.0, 2.0 * g * rho);
    RadialValue r;
    r.value = u.value;
    r.derivative = (-g + l / rho) * u.value + 2.0 * g * u.derivative;
    r.log_scale = u.log_scale - g * rho + log_rho_power(l, rho);
    return r;
}

RadialValue free_inside(double eps0, double l, double rho) {
    require_rho(rho);
    if (!(eps0 > 0.0)) throw DomainError("free inside solution needs eps0 > 0");
    const double k0 = std::sqrt(eps0);
    const auto j = specfun::spherical_j_pair(l, k0 * rho);
    return {j.j, k0 * j.jp, 0.0};
}

RadialValue free_outside(double eps0, double l, double rho, double u0) {
    require_finite_well(u0);
    if (!(rho > 0.0)) throw DomainError("outside solution needs rho > 0");
    if (!(eps0 < u0)) throw NotBound("eps0 must lie below u0");
    const double k = std::sqrt(u0 - eps0);
    const auto kk = specfun::bessel_k_scaled(l + 0.5, k * rho);
    return {kk.k, k * kk.kp - kk.k / (2.0 * rho), -k * rho - 0.5 * std::log(rho)};
}

double radial_inside(double eps, double l, double rho) { return coulomb_inside(eps, l, rho).unscaled(); }

double radial_outside(double eps, double l, double rho, double u0) {
    return coulomb_outside(eps, l, rho, u0).unscaled();
}

double log_derivative_inside(double eps, double l, double rho0) {
    const auto r = coulomb_inside(eps, l, rho0);
    if (r.value == 0.0) throw PoleAtTrialEnergy("inside solution vanishes at the wall", PoleAtTrialEnergy::Side::inside);
    return r.log_derivative();
}

double log_derivative_outside(double eps, double l, double rho0, double u0) {
    const auto r = coulomb_outside(eps, l, rho0, u0);
    if (r.value == 0.0) throw PoleAtTrialEnergy("outside solution vanishes at the wall", PoleAtTrialEnergy::Side::outside);
    return r.log_derivative();
}

double infinite_well_condition(double eps, double l, double rho0) {
    if (!(rho0 > 0.0)) throw DomainError("rho0 must be > 0");
    const auto p = reduced_params(eps, kInfiniteHeight);
    const double b = 2.0 * l + 2.0;
    if (eps < 0.0) {
        const double g = p.gamma1.real();
        const auto m = specfun::kummer_m_scaled(l + 1.0 - p.k1.real(), b, 2.0 * g * rho0);
        return m.value * std::exp(m.log_scale - g * rho0);
    }
    const auto m = specfun::kummer_m_scaled(cd(l + 1.0) - p.k1, b, 2.0 * p.gamma1 * rho0);
    const cd v = std::exp(-p.gamma1 * rho0) * m.value;
    return v.real() * std::exp(m.log_scale);
}

double free_matching_function(double eps0, double l, double rho0, double u0) {
    const auto in = free_inside(eps0, l, rho0);
    if (in.value == 0.0) throw PoleAtTrialEnergy("j_l vanishes at the wall", PoleAtTrialEnergy::Side::inside);
    return in.log_derivative() - free_outside(eps0, l, rho0, u0).log_derivative();
}

double outer_radius(double rho0, double gamma2, double k2) {
    double rmax = rho0 + std::max(30.0 / gamma2, 10.0 * rho0);
    // With the Coulomb tail the outside decays as rho^{k2 - 1} e^{-g2 rho}; push
    // past the turning region until the envelope has dropped by e^{-30}.
    if (k2 > 0.0) {
        const double peak = std::max(rho0, k2 / gamma2);
        auto drop = [&](double r) { return gamma2 * (r - peak) - k2 * std::log(r / peak); };
        while (drop(rmax) < 30.0) rmax *= 1.25;
    }
    return rmax;
}

MatchingContext::MatchingContext(WellParams well, HalfInt l) : well_(well), l_(l) {
    well_.validate();
    if (l_ < HalfInt(0)) throw InvalidQuantumNumbers("l must be >= 0");
}

RadialValue MatchingContext::inside(double eps, double rho) const {
    return well_.coulomb ? coulomb_inside(eps, l_.value(), rho) : free_inside(eps, l_.value(), rho);
}

RadialValue MatchingContext::outside(double eps, double rho) const {
    return well_.coulomb ? coulomb_outside(eps, l_.value(), rho, well_.u0)
                         : free_outside(eps, l_.value(), rho, well_.u0);
}

MatchSample MatchingContext::sample(double eps) const {
    const double l = l_.value();
    const double rho0 = well_.rho0;
    if (well_.infinite()) {
        MatchSample s;
        Pair in;
        if (well_.coulomb) {
            s.value = infinite_well_condition(eps, l, rho0);
            in = inside_reduced(eps, l, rho0);
        } else {
            const auto f = free_inside(eps, l, rho0);
            s.value = f.value;
            in = {f.value, f.derivative};
        }
        s.wronskian = in.value / std::hypot(in.value, in.derivative / (1.0 + std::sqrt(std::abs(eps))));
        return s;
    }
    if (!(eps < well_.u0)) throw NotBound("trial energy must lie below u0");
    const double scale = 1.0 + std::sqrt(std::abs(eps)) + std::sqrt(well_.u0 - eps);
    if (!well_.coulomb) {
        const auto in = free_inside(eps, l, rho0);
        const auto out = free_outside(eps, l, rho0, well_.u0);
        return assemble({in.value, in.derivative}, {out.value, out.derivative}, scale);
    }
    return assemble(inside_reduced(eps, l, rho0), outside_reduced(eps, l, rho0, well_.u0), scale);
}

double matching_function(double eps, const MatchingContext& ctx) {
    const auto s = ctx.sample(eps);
    if (s.inside == 0.0)
        throw PoleAtTrialEnergy("inside solution vanishes at the wall", PoleAtTrialEnergy::Side::inside);
    if (s.outside == 0.0)
        throw PoleAtTrialEnergy("outside solution vanishes at the wall", PoleAtTrialEnergy::Side::outside);
    return s.value;
}

}  // namespace dyonwell
