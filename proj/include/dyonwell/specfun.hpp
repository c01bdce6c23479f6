#pragma once

// Special functions needed by the radial and angular problems.
//
// Kummer M(a;b;z) and Tricomi U(a;b;x) are evaluated together with their
// z-derivative. Large values are returned in scaled form
// (true value = mantissa * exp(log_scale)) so that callers forming ratios
// never overflow.

#include <complex>

#include "dyonwell/units.hpp"

namespace dyonwell::specfun {

template <class T>
struct SpecFunResult {
    T value;
    double est_error;  ///< relative error estimate
};

/// f and f' scaled by a common exp(log_scale).
template <class T>
struct Scaled {
    T value;
    T derivative;
    double log_scale = 0.0;
    double est_error = 0.0;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

// Confluent hypergeometric function of the first kind.
SpecFunResult<std::complex<double>> kummer_m(std::complex<double> a, double b,
                                             std::complex<double> z);
Scaled<std::complex<double>> kummer_m_scaled(std::complex<double> a, double b,
                                             std::complex<double> z);
Scaled<double> kummer_m_scaled(double a, double b, double x);

// Confluent hypergeometric function of the second kind, real arguments, x > 0.
SpecFunResult<double> tricomi_u(double a, double b, double x);
Scaled<double> tricomi_u_scaled(double a, double b, double x);

/// J_nu(x) and J'_nu(x) for nu >= 0, x >= 0.
struct BesselJ {
    double j;
    double jp;
};
BesselJ bessel_j_pair(double nu, double x);
double bessel_j(double nu, double x);

/// Spherical Bessel j_l(x) = sqrt(pi / 2x) J_{l+1/2}(x) for integer or half-integer l.
double spherical_j(double l, double x);
/// j_l(x) together with its derivative.
BesselJ spherical_j_pair(double l, double x);

/// e^x K_nu(x) and e^x K'_nu(x).
struct BesselK {
    double k;
    double kp;
};
BesselK bessel_k_scaled(double nu, double x);
double bessel_k(double nu, double x);

/// Wigner small-d function d^l_{m s}(theta).
double wigner_d(HalfInt l, HalfInt m, HalfInt s, double theta);

}  // namespace dyonwell::specfun
