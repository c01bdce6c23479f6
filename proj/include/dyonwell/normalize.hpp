#pragma once

// Matching amplitude, normalization integrals and the assembled
// wavefunction psi = R(rho) Z(theta) e^{i m phi} / sqrt(2 pi).

#include <complex>

#include "dyonwell/spectrum.hpp"

namespace dyonwell {

struct NormIntegrals {
    double I1 = 0.0;  ///< int_0^rho0 rho^2 R1^2
    double I2 = 0.0;  ///< int_rho0^rho_max rho^2 R2^2, R2 without the amplitude
};

struct RadialWavefunction {
    EnergyLevel level;
    WellParams well;
    double A = 0.0;   ///< R1(rho0) / R2(rho0); 0 for the infinite well
    double C1 = 0.0;
    double I1 = 0.0;
    double I2 = 0.0;

    // Same quantities relative to the inside scale at the wall, always finite.
    double ref_log = 0.0;        ///< log scale of R1 at rho0
    double out_log = 0.0;        ///< log scale of R2 at rho0
    double amplitude_ratio = 0.0;  ///< A e^{out_log - ref_log}
    double scaled_total = 0.0;   ///< (I1 + A^2 I2) e^{-2 ref_log}
};

/// A with R1(rho0) = A R2(rho0). Throws AmplitudeOverflow if A is not representable.
double matching_amplitude(const EnergyLevel& level, const WellParams& well);

NormIntegrals norm_integrals(const EnergyLevel& level, const WellParams& well);

/// Amplitude, integrals and C1 = (I1 + A^2 I2)^{-1/2}.
RadialWavefunction normalize_level(const EnergyLevel& level, const WellParams& well);

/// Normalized R(rho): C1 R1 inside, C1 A R2 outside.
double radial_value(const RadialWavefunction& wf, double rho);

/// Z(theta) = sqrt((2l + 1) / 2) d^l_{m s}(theta), unit norm under sin(theta) d theta.
double angular_z(HalfInt l, HalfInt m, HalfInt s, double theta);

std::complex<double> eval_wavefunction(const RadialWavefunction& wf, const QuantumNumbers& qn, double rho,
                                       double theta, double phi);

}  // namespace dyonwell
