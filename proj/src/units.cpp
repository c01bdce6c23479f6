#include "dyonwell/units.hpp"

#include <cmath>
#include <sstream>

#include "dyonwell/errors.hpp"

namespace dyonwell {

HalfInt HalfInt::from_double(double value) {
    const double twice = 2.0 * value;
    if (!std::isfinite(twice) || std::abs(twice) > 1e6 || twice != std::round(twice)) {
        std::ostringstream os;
        os << value << " is not an integer or half-integer";
        throw InvalidQuantumNumbers(os.str());
    }
    return from_twice(static_cast<int>(std::lround(twice)));
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

void QuantumNumbers::validate() const {
    if (!same_class(s, m) || !same_class(s, l)) {
        throw InvalidQuantumNumbers("s=" + s.str() + ", m=" + m.str() + ", l=" + l.str() +
                                    " must all be integers or all half-integers");
    }
    const HalfInt l_min = HalfInt::from_twice(((m - s).abs().twice() + (m + s).abs().twice()) / 2);
    if (l < l_min) {
        throw InvalidQuantumNumbers("l=" + l.str() + " is below the lowest admitted value " +
                                    l_min.str());
    }
    if (m.abs() > l) throw InvalidQuantumNumbers("|m| exceeds l");
    if (n_r < 0) throw InvalidQuantumNumbers("n_r must be non-negative");
}

void WellParams::validate() const {
    if (!(rho0 > 0.0) || !std::isfinite(rho0)) {
        std::ostringstream os;
        os << "rho0 must be positive and finite (got " << rho0 << ")";
        throw InvalidParameter(os.str());
    }
    if (!(u0 > 0.0)) {
        std::ostringstream os;
        os << "u0 must be positive (got " << u0 << ")";
        throw InvalidParameter(os.str());
    }
}

ReducedParams reduced_params(double eps, double u0) {
    if (!(eps < u0)) {
        std::ostringstream os;
        os << "eps=" << eps << " is not below the wall height u0=" << u0;
        throw NotBound(os.str());
    }
    if (eps == 0.0) throw DomainError("eps = 0 degenerates gamma1 = 0");

    ReducedParams p;
    if (eps < 0.0) {
        p.gamma1 = std::sqrt(-eps);
        p.k1 = 1.0 / p.gamma1.real();
    } else {
        const double kappa = std::sqrt(eps);
        p.gamma1 = {0.0, kappa};
        p.k1 = {0.0, -1.0 / kappa};
    }
    if (std::isinf(u0)) {
        p.gamma2 = kInfiniteHeight;
        p.k2 = 0.0;
    } else {
        p.gamma2 = std::sqrt(u0 - eps);
        p.k2 = 1.0 / p.gamma2;
    }
    return p;
}

std::vector<HalfInt> allowed_l(HalfInt m, HalfInt s, int count) {
    if (!same_class(m, s)) {
        throw InvalidQuantumNumbers("m=" + m.str() + " and s=" + s.str() +
                                    " must both be integers or both half-integers");
    }
    if (count < 1) throw InvalidParameter("count must be at least 1");
    const HalfInt l_min = HalfInt::from_twice(((m - s).abs().twice() + (m + s).abs().twice()) / 2);
    std::vector<HalfInt> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(l_min + HalfInt(i));
    return out;
}

FreeLevel free_spectrum_and_degeneracy(HalfInt n, HalfInt s) {
    if (!same_class(n, s)) throw InvalidQuantumNumbers("n and s must be of the same class");
    if (n <= s.abs()) throw InvalidQuantumNumbers("n must exceed |s|");
    const double nv = n.value();
    const long g = static_cast<long>((n - s).twice()) * (n + s).twice() / 4;
    return {-1.0 / (nv * nv), g};
}

}  // namespace dyonwell
