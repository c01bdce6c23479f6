// Kummer M(a;b;z) and Tricomi U(a;b;x).
//
// Both functions solve z w'' + (b - z) w' - a w = 0. Where the direct power
// or asymptotic series is accurate it is used as is; elsewhere the solution
// is carried along a straight path by local Taylor expansions of the ODE
// (the only finite singular point is z = 0, so the local radius of
// convergence is |z|). M is continued outward from near the origin, U is
// continued inward from large x where its asymptotic expansion is exact to
// rounding. In each direction the continued solution is never the recessive
// one, so rounding errors stay bounded.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "dyonwell/errors.hpp"
#include "dyonwell/specfun.hpp"

namespace dyonwell::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSeriesTerms = 5000;
constexpr int kMaxTaylorTerms = 400;
constexpr long kMaxSteps = 2'000'000;
constexpr double kMaxStep = 2.0;
constexpr double kSeriesLossLimit = 1e3;
constexpr double kAsymptoticRadius = 30.0;

double mag(double v) { return std::abs(v); }
double mag(const std::complex<double>& v) { return std::abs(v); }

template <class T>
struct SeriesOutcome {
    bool converged = false;
    double loss = 0.0;
    T value{};
    T derivative{};
};

// Power series of M and M' = sum_n (a)_n/(b)_n n z^{n-1}/n!.
template <class T>
SeriesOutcome<T> kummer_series(T a, double b, T z) {
    SeriesOutcome<T> out;
    T term = 1.0;
    T sum = 1.0;
    T dsum = 0.0;
    double abs_sum = 1.0;
    double abs_dsum = 0.0;
    const double peak = mag(z) + mag(a);
    for (int n = 1; n < kMaxSeriesTerms; ++n) {
        const T dterm = term * (a + double(n - 1)) / (b + double(n - 1));
        term = dterm * z / double(n);
        sum += term;
        dsum += dterm;
        abs_sum += mag(term);
        abs_dsum += mag(dterm);
        if (dterm == T(0.0)) {
            out.converged = true;
            break;
        }
        if (n > peak && mag(term) <= kEps * mag(sum) && mag(dterm) <= kEps * mag(dsum)) {
            out.converged = true;
            break;
        }
    }
    const double value_loss = mag(sum) > 0.0 ? abs_sum / mag(sum) : std::numeric_limits<double>::infinity();
    const double deriv_den = std::max(mag(dsum), 1e-2 * mag(sum));
    const double deriv_loss = abs_dsum > 0.0 ? abs_dsum / deriv_den : 1.0;
    out.loss = std::max(value_loss, deriv_loss);
    out.value = sum;
    out.derivative = dsum;
    return out;
}

// One Taylor step of z w'' + (b - z) w' - a w = 0 from c to c + h.
// p_k = w^(k)(c) h^k / k! obey
//   p_{k+2} = [(k + a) p_k h^2 - (k + 1)(k + b - c) p_{k+1} h] / (c (k + 1)(k + 2)).
// Returns the relative rounding estimate of the step.
template <class T>
double taylor_step(T a, double b, T c, T h, T& w, T& dw) {
    T p0 = w;
    T p1 = dw * h;
    T val = p0 + p1;
    T der = p1;
    double abs_val = mag(p0) + mag(p1);
    const T h2 = h * h;
    bool done = false;
    for (int k = 0; k < kMaxTaylorTerms; ++k) {
        const double kd = k;
        const T p2 = ((kd + a) * p0 * h2 - (kd + 1.0) * (kd + b - c) * p1 * h) /
                     (c * ((kd + 1.0) * (kd + 2.0)));
        val += p2;
        der += (kd + 2.0) * p2;
        abs_val += mag(p2);
        if (k > 2 && (mag(p1) + mag(p2)) * (kd + 3.0) <= 0.5 * kEps * std::max(mag(val), mag(der))) {
            done = true;
            break;
        }
        p0 = p1;
        p1 = p2;
    }
    if (!done) throw ConvergenceError("Taylor step did not converge", 1.0);
    w = val;
    dw = der / h;
    return kEps * (mag(val) > 0.0 ? abs_val / mag(val) : 1.0);
}

template <class T>
void renormalize(Scaled<T>& s) {
    const double big = std::max(mag(s.value), mag(s.derivative));
    if (big > 0.0 && std::isfinite(big)) {
        s.value /= big;
        s.derivative /= big;
        s.log_scale += std::log(big);
    }
}

template <class T>
Scaled<T> kummer_continue(T a, double b, T z) {
    const double target = mag(z);
    const double r0 = std::min(1.0, 2.0 / (1.0 + mag(a)));
    const T dir = z / target;
    auto start = kummer_series(a, b, dir * r0);
    if (!start.converged || start.loss > kSeriesLossLimit) {
        throw ConvergenceError("Kummer start series failed", start.loss * kEps);
    }
    Scaled<T> s{start.value, start.derivative, 0.0, start.loss * kEps};
    double pos = r0;
    long steps = 0;
    const double abs_a = mag(a);
    while (pos < target) {
        double hmax = std::min(0.5 * pos, kMaxStep);
        if (abs_a > 0.0) hmax = std::min(hmax, std::sqrt(pos / abs_a));
        const double h = std::min(hmax, target - pos);
        const T c = dir * pos;
        s.est_error += taylor_step(a, b, c, dir * h, s.value, s.derivative);
        pos = (target - pos <= hmax) ? target : pos + h;
        renormalize(s);
        if (++steps > kMaxSteps) throw ConvergenceError("Kummer continuation too long", s.est_error);
    }
    return s;
}

using cd = std::complex<double>;

// ln Gamma(z) up to a multiple of 2 pi i (only ever exponentiated).
cd log_gamma_complex(cd z) {
    constexpr double kPi = 3.14159265358979323846;
    if (z.real() < 0.5) return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_complex(1.0 - z);
    cd shift = 0.0;
    while (std::abs(z) < 18.0) {
        shift += std::log(z);
        z += 1.0;
    }
    // Stirling series with Bernoulli numbers B_2 .. B_16.
    constexpr double kB[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6, -3617.0 / 510};
    const cd inv = 1.0 / z;
    const cd inv2 = inv * inv;
    cd p = inv;
    cd corr = 0.0;
    for (int k = 1; k <= 8; ++k) {
        corr += kB[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + corr - shift;
}

bool near_gamma_pole(cd v) {
    return v.real() <= 0.5 && std::abs(v.imag()) < 1e-8 && std::abs(v.real() - std::round(v.real())) < 1e-8;
}

// Large-|z| expansion for Re z >= 0, Im z >= 0:
//   M(a;b;z) ~ Gamma(b) [ e^{i pi a} z^{-a} / Gamma(b-a) sum (a)_n (a-b+1)_n / n! (-z)^{-n}
//                       + e^z z^{a-b} / Gamma(a)  sum (b-a)_n (1-a)_n / n! z^{-n} ]
bool kummer_asymptotic_value(cd a, double b, cd z, cd& mantissa, double& log_scale, double& loss) {
    if (near_gamma_pole(a) || near_gamma_pole(b - a)) return false;
    auto run = [&](cd p, cd q, cd x, cd& sum, double& sum_loss) {
        cd term = 1.0;
        sum = 1.0;
        double abs_sum = 1.0;
        for (int n = 0; n < kMaxSeriesTerms; ++n) {
            const cd ratio = (p + double(n)) * (q + double(n)) / ((n + 1.0) * x);
            const cd next = term * ratio;
            if (std::abs(next) == 0.0) break;
            if (std::abs(ratio) >= 1.0 && n > std::abs(p) + std::abs(q)) return false;
            term = next;
            sum += term;
            abs_sum += std::abs(term);
            if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
            if (n + 1 == kMaxSeriesTerms) return false;
        }
        sum_loss = abs_sum / std::abs(sum);
        return true;
    };
    constexpr double kPi = 3.14159265358979323846;
    cd s1, s2;
    double l1 = 0.0, l2 = 0.0;
    if (!run(a, a - b + 1.0, -z, s1, l1) || !run(b - a, 1.0 - a, z, s2, l2)) return false;
    const cd lz = std::log(z);
    const cd lgb = std::lgamma(b);
    const cd e1 = cd(0.0, kPi) * a - a * lz - log_gamma_complex(b - a) + lgb;
    const cd e2 = z + (a - b) * lz - log_gamma_complex(a) + lgb;
    log_scale = std::max(e1.real(), e2.real());
    mantissa = std::exp(e1 - log_scale) * s1 + std::exp(e2 - log_scale) * s2;
    const double mag_sum = std::exp(e1.real() - log_scale) * std::abs(s1) * l1 +
                           std::exp(e2.real() - log_scale) * std::abs(s2) * l2;
    loss = mag_sum / std::abs(mantissa);
    return std::isfinite(loss);
}

bool kummer_asymptotic(cd a, double b, cd z, Scaled<cd>& out) {
    if (z.imag() < 0.0) {
        if (!kummer_asymptotic(std::conj(a), b, std::conj(z), out)) return false;
        out.value = std::conj(out.value);
        out.derivative = std::conj(out.derivative);
        return true;
    }
    cd m, mp;
    double sm = 0.0, smp = 0.0, loss_m = 0.0, loss_mp = 0.0;
    if (!kummer_asymptotic_value(a, b, z, m, sm, loss_m)) return false;
    if (!kummer_asymptotic_value(a + 1.0, b + 1.0, z, mp, smp, loss_mp)) return false;
    if (loss_m > 100.0 || loss_mp > 100.0) return false;
    out.value = m;
    out.derivative = a / b * mp * std::exp(smp - sm);
    out.log_scale = sm;
    out.est_error = kEps * (1.0 + std::max(loss_m, loss_mp)) * 10.0;
    return std::isfinite(std::abs(out.derivative));
}

template <class T>
Scaled<T> kummer_impl(T a, double b, T z) {
    if (b <= 0.0 && b == std::floor(b)) {
        std::ostringstream os;
        os << "Kummer M undefined for b = " << b;
        throw DomainError(os.str());
    }
    if (std::real(z) < 0.0) {
        // M(a;b;z) = e^z M(b-a;b;-z)
        Scaled<T> t = kummer_impl<T>(T(b) - a, b, -z);
        Scaled<T> s;
        T phase = 1.0;
        if constexpr (!std::is_same_v<T, double>) phase = std::exp(T(0.0, std::imag(z)));
        s.value = t.value * phase;
        s.derivative = (t.value - t.derivative) * phase;
        s.log_scale = t.log_scale + std::real(z);
        s.est_error = t.est_error;
        return s;
    }
    auto series = kummer_series(a, b, z);
    if (series.converged && series.loss <= kSeriesLossLimit) {
        return {series.value, series.derivative, 0.0, series.loss * kEps};
    }
    if constexpr (std::is_same_v<T, cd>) {
        Scaled<cd> asym;
        if (std::abs(z) >= kAsymptoticRadius && kummer_asymptotic(a, b, z, asym)) return asym;
    }
    return kummer_continue(a, b, z);
}

// U ~ x^{-a} sum (a)_n (a-b+1)_n / n! (-1/x)^n and
// U' = -a U(a+1;b+1;x) ~ -a x^{-a-1} sum (a+1)_n (a-b+1)_n / n! (-1/x)^n.
bool tricomi_asymptotic(double a, double b, double x, Scaled<double>& out) {
    const double c = a - b + 1.0;
    auto run = [&](double first, double& sum, double& loss) {
        double term = 1.0;
        sum = 1.0;
        double abs_sum = 1.0;
        for (int n = 0; n < kMaxSeriesTerms; ++n) {
            const double ratio = (first + n) * (c + n) / ((n + 1.0) * -x);
            const double next = term * ratio;
            if (next == 0.0) {
                loss = abs_sum / std::abs(sum);
                return true;
            }
            // Past the smallest term: the expansion starts to diverge.
            if (std::abs(ratio) >= 1.0 && n > std::abs(first) + std::abs(c)) return false;
            term = next;
            sum += term;
            abs_sum += std::abs(term);
            if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) {
                loss = abs_sum / std::abs(sum);
                return true;
            }
        }
        return false;
    };
    double s0 = 0.0, s1 = 0.0, loss0 = 0.0, loss1 = 1.0;
    if (!run(a, s0, loss0)) return false;
    if (a != 0.0 && !run(a + 1.0, s1, loss1)) return false;
    if (!(loss0 <= 10.0) || !(loss1 <= 10.0)) return false;
    out.value = s0;
    out.derivative = a == 0.0 ? 0.0 : -a * s1 / x;
    out.log_scale = -a * std::log(x);
    out.est_error = kEps * std::max(loss0, loss1);
    return true;
}

Scaled<double> tricomi_impl(double a, double b, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << "Tricomi U requires x > 0 (got " << x << ")";
        throw DomainError(os.str());
    }
    double xs = std::max(x, 40.0);
    Scaled<double> s;
    while (!tricomi_asymptotic(a, b, xs, s)) {
        xs *= 1.5;
        if (xs > 1e8) throw ConvergenceError("Tricomi U asymptotic start not reached", 1.0);
    }
    if (xs == x) return s;
    renormalize(s);
    double pos = xs;
    long steps = 0;
    const double abs_a = std::abs(a);
    while (pos > x) {
        double hmax = std::min(0.5 * pos, kMaxStep);
        if (abs_a > 0.0) hmax = std::min(hmax, std::sqrt(pos / abs_a));
        const double h = std::min(hmax, pos - x);
        s.est_error += taylor_step<double>(a, b, pos, -h, s.value, s.derivative);
        pos = (pos - x <= hmax) ? x : pos - h;
        renormalize(s);
        if (++steps > kMaxSteps) throw ConvergenceError("Tricomi continuation too long", s.est_error);
    }
    return s;
}

}  // namespace

Scaled<std::complex<double>> kummer_m_scaled(std::complex<double> a, double b, std::complex<double> z) {
    return kummer_impl<std::complex<double>>(a, b, z);
}

Scaled<double> kummer_m_scaled(double a, double b, double x) { return kummer_impl<double>(a, b, x); }

SpecFunResult<std::complex<double>> kummer_m(std::complex<double> a, double b, std::complex<double> z) {
    const auto s = kummer_m_scaled(a, b, z);
    if (s.log_scale > 700.0) throw RangeError("Kummer M overflows double range");
    return {s.value * std::exp(s.log_scale), s.est_error};
}

Scaled<double> tricomi_u_scaled(double a, double b, double x) { return tricomi_impl(a, b, x); }

SpecFunResult<double> tricomi_u(double a, double b, double x) {
    const auto s = tricomi_impl(a, b, x);
    if (s.log_scale > 700.0) throw RangeError("Tricomi U overflows double range");
    return {s.value * std::exp(s.log_scale), s.est_error};
}

}  // namespace dyonwell::specfun
