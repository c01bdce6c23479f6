#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dyonwell/errors.hpp"
#include "dyonwell/specfun.hpp"

namespace dyonwell::specfun {

double log_gamma(double x) {
    if (!(x > 0.0)) {
        std::ostringstream os;
        os << "log_gamma requires x > 0 (got " << x << ")";
        throw DomainError(os.str());
    }
    return std::lgamma(x);
}

namespace {

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

// d^l_{ms}(theta) = sum_k (-1)^{k-s+m} sqrt[(l+m)!(l-m)!(l+s)!(l-s)!]
//                   / [(l+s-k)! k! (l-k-m)! (k-s+m)!]
//                   cos(theta/2)^{2l-2k+s-m} sin(theta/2)^{2k-s+m}
double wigner_d(HalfInt l, HalfInt m, HalfInt s, double theta) {
    if (!same_class(l, m) || !same_class(l, s) || m.abs() > l || s.abs() > l) {
        throw InvalidQuantumNumbers("wigner_d(l=" + l.str() + ", m=" + m.str() + ", s=" + s.str() +
                                    ") is not a valid index combination");
    }
    const int lpm = (l + m).twice() / 2;
    const int lmm = (l - m).twice() / 2;
    const int lps = (l + s).twice() / 2;
    const int lms = (l - s).twice() / 2;
    const int s_m = (s - m).twice() / 2;

    double c = std::cos(0.5 * theta);
    double sn = std::sin(0.5 * theta);
    if (theta == 0.0) {
        c = 1.0;
        sn = 0.0;
    } else if (theta == std::numbers::pi) {
        c = 0.0;
        sn = 1.0;
    }

    const double log_pre =
        0.5 * (log_factorial(lpm) + log_factorial(lmm) + log_factorial(lps) + log_factorial(lms));
    const int k_lo = std::max(0, s_m);
    const int k_hi = std::min(lps, lmm);
    double sum = 0.0;
    for (int k = k_lo; k <= k_hi; ++k) {
        const double log_term = log_pre - log_factorial(lps - k) - log_factorial(k) -
                                log_factorial(lmm - k) - log_factorial(k - s_m);
        const int pc = l.twice() - 2 * k + s_m;
        const int ps = 2 * k - s_m;
        const double sign = ((k - s_m) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::exp(log_term) * std::pow(c, pc) * std::pow(sn, ps);
    }
    return sum;
}

}  // namespace dyonwell::specfun
