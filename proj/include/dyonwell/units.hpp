#pragma once

// Reduced units used everywhere in the library: lengths in Bohr radii
// a_B = hbar^2 / (mu e^2), energies in Rydbergs E_R = mu e^4 / (2 hbar^2).
// In these units the radial equation reads
//   R'' + (2/rho) R' + [eps + 2c/rho - u(rho) - l(l+1)/rho^2] R = 0,
// with c = 1 for the charge-dyon problem and c = 0 for the reference
// problem without the Coulomb term.

#include <compare>
#include <complex>
#include <limits>
#include <string>
#include <vector>

namespace dyonwell {

/// Integer or half-integer number stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int value) : twice_(2 * value) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    /// Throws InvalidQuantumNumbers unless `value` is a multiple of 1/2.
    static HalfInt from_double(double value);

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const;

private:
    int twice_ = 0;
};

/// True when both are integers or both are half-integers.
constexpr bool same_class(HalfInt a, HalfInt b) { return (a.twice() - b.twice()) % 2 == 0; }

struct QuantumNumbers {
    HalfInt s;
    HalfInt m;
    HalfInt l;
    int n_r = 0;

    /// Class consistency, the orbital ladder, |m| <= l, n_r >= 0.
    void validate() const;
    /// n = l + 1 + n_r.
    HalfInt principal() const { return l + HalfInt(1 + n_r); }
};

inline constexpr double kInfiniteHeight = std::numeric_limits<double>::infinity();

struct WellParams {
    double rho0 = 1.0;              ///< well radius, a_B
    double u0 = kInfiniteHeight;    ///< wall height, E_R; +inf for the impenetrable well
    bool coulomb = true;            ///< false selects the reference problem without e^2/r

    bool infinite() const { return u0 == kInfiniteHeight; }
    /// Throws InvalidParameter naming the offending field.
    void validate() const;
};

struct ReducedParams {
    std::complex<double> gamma1;  ///< sqrt(-eps); +i branch for eps > 0
    double gamma2 = 0.0;          ///< sqrt(u0 - eps); +inf for the infinite well
    std::complex<double> k1;      ///< 1 / gamma1
    double k2 = 0.0;              ///< 1 / gamma2
};

/// Throws NotBound when eps >= u0 and DomainError at eps == 0.
ReducedParams reduced_params(double eps, double u0);

/// l_min, l_min + 1, ... with l_min = (|m - s| + |m + s|) / 2.
std::vector<HalfInt> allowed_l(HalfInt m, HalfInt s, int count);

struct FreeLevel {
    double eps;
    long degeneracy;
};

/// Unconfined charge-dyon level: eps_n = -1/n^2, g = (n - s)(n + s).
FreeLevel free_spectrum_and_degeneracy(HalfInt n, HalfInt s);

}  // namespace dyonwell
