#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "dyonwell/errors.hpp"
#include "dyonwell/radial.hpp"

namespace dyonwell {

namespace {

using State = std::array<double, 2>;
namespace odeint = boost::numeric::odeint;

constexpr double kAbsTol = 1e-14;
constexpr double kRelTol = 1e-13;
constexpr double kChunk = 0.5;
constexpr double kChunkGrowth = 30.0;  // max e-folds between renormalizations

struct Equation {
    double ll1, eps, c, u0, rho0;
    double q(double r) const {
        const double wall = (r > rho0 && std::isfinite(u0)) ? u0 : 0.0;
        return ll1 / (r * r) - eps - 2.0 * c / r + wall;
    }
    void operator()(const State& y, State& dy, double r) const {
        dy[0] = y[1];
        dy[1] = q(r) * y[0];
    }
};

void normalize(State& y) {
    const double n = std::hypot(y[0], y[1]);
    if (!(n > 0.0) || !std::isfinite(n)) throw IntegrationError("state lost during integration");
    y[0] /= n;
    y[1] /= n;
}

// Integrate from a to b (either direction), renormalizing every chunk.
void propagate(const Equation& eq, State& y, double a, double b) {
    const double dir = b > a ? 1.0 : -1.0;
    const double qmax = std::abs(eq.eps) + (std::isfinite(eq.u0) ? std::abs(eq.u0) : 0.0) + 1.0;
    const double chunk = std::min(kChunk, kChunkGrowth / std::sqrt(qmax));
    auto stepper = odeint::make_controlled(kAbsTol, kRelTol, odeint::runge_kutta_dopri5<State>());
    double r = a;
    while (dir * (b - r) > 0.0) {
        const double next = dir * (b - r) > chunk ? r + dir * chunk : b;
        try {
            odeint::integrate_adaptive(stepper, eq, y, r, next, dir * 1e-2 * chunk);
        } catch (const std::exception& e) {
            throw IntegrationError(e.what());
        }
        normalize(y);
        r = next;
    }
}

// Frobenius series u = r^{l+1} sum a_n r^n at the starting radius.
State frobenius_start(double l, double eps, double c, double r) {
    double am2 = 0.0, am1 = 1.0;
    double s = 1.0, ds = 0.0, rn = 1.0;
    int quiet = 0;
    for (int n = 1; n < 400 && quiet < 2; ++n) {
        const double an = (-2.0 * c * am1 - eps * am2) / (n * (n + 2.0 * l + 1.0));
        const double dterm = n * an * rn;
        rn *= r;
        const double term = an * rn;
        s += term;
        ds += dterm;
        am2 = am1;
        am1 = an;
        // odd terms vanish identically when c = 0
        quiet = std::abs(term) < 1e-18 * std::abs(s) && std::abs(dterm) <= 1e-18 * std::abs(ds) ? quiet + 1 : 0;
    }
    return {r * s, (l + 1.0) * s + r * ds};
}

}  // namespace

ShootingResult shooting_oracle(double eps, double l, double rho0, double u0, bool coulomb) {
    if (!(rho0 > 0.0)) throw DomainError("rho0 must be > 0");
    if (!(eps < u0)) throw NotBound("trial energy must lie below u0");
    const double c = coulomb ? 1.0 : 0.0;
    const Equation eq{l * (l + 1.0), eps, c, u0, rho0};

    const double start = std::min(0.25 * rho0, 1.0 / (1.0 + std::sqrt(std::abs(eps)) + 2.0 * c));
    State out = frobenius_start(l, eps, c, start);
    normalize(out);
    propagate(eq, out, start, rho0);

    ShootingResult res;
    if (std::isinf(u0)) {
        res.mismatch = out[0];
        res.wronskian = out[0];
        return res;
    }

    const double g2 = std::sqrt(u0 - eps);
    const double rmax = outer_radius(rho0, g2, c / g2);
    State in{1.0, -std::sqrt(std::max(eq.q(rmax), 0.0))};
    normalize(in);
    propagate(eq, in, rmax, rho0);

    res.mismatch = out[1] / out[0] - in[1] / in[0];
    res.wronskian = out[1] * in[0] - out[0] * in[1];
    return res;
}

}  // namespace dyonwell
