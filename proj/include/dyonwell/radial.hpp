#pragma once

// Radial solutions inside (rho < rho0) and outside (rho >= rho0) the well
// and the matching functions whose zeros in energy are the bound levels.
//
// Coulomb problem (c = 1):
//   inside   R1 = e^{-g1 rho} rho^l M(l + 1 - k1; 2l + 2; 2 g1 rho)
//   outside  R2 = e^{-g2 rho} rho^l U(l + 1 - k2; 2l + 2; 2 g2 rho)
// Reference problem without the Coulomb term (c = 0):
//   inside   R1 = j_l(k0 rho),            k0 = sqrt(eps0)
//   outside  R2 = rho^{-1/2} K_{l+1/2}(k rho),  k = sqrt(u0 - eps0)

#include "dyonwell/units.hpp"

namespace dyonwell {

/// R and dR/drho sharing the factor exp(log_scale).
struct RadialValue {
    double value = 0.0;
    double derivative = 0.0;
    double log_scale = 0.0;

    double log_derivative() const { return derivative / value; }
    double unscaled() const;
};

/// A matching-function value together with sign-carrying copies of the
/// inside and outside radial values at the wall. A sign change of either
/// across an energy interval means the log-derivative passed through a pole.
///
/// `wronskian` is (R1' R2 - R1 R2') / (|R1| |R2|) at the wall with each
/// solution normalized as a (value, derivative) vector. It has the zeros of
/// `value` and no poles; for the infinite well it is the normalized R1(rho0).
struct MatchSample {
    double value = 0.0;
    double inside = 1.0;
    double outside = 1.0;
    double wronskian = 0.0;
};

/// Immutable description of one radial eigenproblem: the well and the
/// orbital number. Dispatches to the right matching condition.
class MatchingContext {
public:
    MatchingContext(WellParams well, HalfInt l);

    const WellParams& well() const { return well_; }
    HalfInt l() const { return l_; }

    MatchSample sample(double eps) const;
    double operator()(double eps) const { return sample(eps).value; }

    /// Unnormalized inside and outside solutions for the context's problem.
    RadialValue inside(double eps, double rho) const;
    RadialValue outside(double eps, double rho) const;

private:
    WellParams well_;
    HalfInt l_;
};

RadialValue coulomb_inside(double eps, double l, double rho);
RadialValue coulomb_outside(double eps, double l, double rho, double u0);
RadialValue free_inside(double eps0, double l, double rho);
RadialValue free_outside(double eps0, double l, double rho, double u0);

double radial_inside(double eps, double l, double rho);
double radial_outside(double eps, double l, double rho, double u0);

/// Full d ln R / d rho at the wall.
double log_derivative_inside(double eps, double l, double rho0);
double log_derivative_outside(double eps, double l, double rho0, double u0);

/// Log-derivative difference at the wall with the common l/rho0 term
/// dropped from both sides:
///   [-g1 + 2 g1 M'/M] - [-g2 + 2 g2 U'/U],
/// M' = (a1/b) M(a1 + 1; b + 1), U' = -a2 U(a2 + 1; b + 1).
double matching_function(double eps, const MatchingContext& ctx);

/// e^{-g1 rho0} M(l + 1 - k1; 2l + 2; 2 g1 rho0), real for every eps.
/// Its zeros are the levels of the impenetrable well.
double infinite_well_condition(double eps, double l, double rho0);

/// j_l'/j_l * k0 - d ln(rho^{-1/2} K_{l+1/2}(k rho))/d rho at rho0.
double free_matching_function(double eps0, double l, double rho0, double u0);

/// Radius beyond which the outside solution is negligible.
double outer_radius(double rho0, double gamma2, double k2);

struct ShootingResult {
    double mismatch = 0.0;   ///< u'/u (outward) - u'/u (inward) at rho0; u(rho0) for the infinite well
    double wronskian = 0.0;  ///< pole-free u_out' u_in - u_out u_in' with unit-normalized states
};

/// Independent ODE integration of u'' = [l(l+1)/rho^2 - eps - 2c/rho + u(rho)] u.
ShootingResult shooting_oracle(double eps, double l, double rho0, double u0, bool coulomb);

}  // namespace dyonwell
