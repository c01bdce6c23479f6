#include "dyonwell/selftest.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dyonwell/binding.hpp"
#include "dyonwell/normalize.hpp"
#include "dyonwell/specfun.hpp"

namespace dyonwell {

namespace {

using cd = std::complex<double>;

SelfCheck make(std::string suite, std::string name, double residual, double tol) {
    return {std::move(suite), std::move(name), residual, tol, residual <= tol};
}

double kummer_transformation() {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ui(0.05, 5.0), uy(0.1, 150.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double l = 0.5 * (i % 8), b = 2.0 * l + 2.0;
        const cd a(l + 1.0, ui(rng)), z(0.0, uy(rng));
        const auto lhs = specfun::kummer_m_scaled(a, b, z);
        const auto rhs = specfun::kummer_m_scaled(cd(b) - a, b, -z);
        const cd lv = lhs.value * std::exp(lhs.log_scale);
        const cd rv = std::exp(z) * rhs.value * std::exp(rhs.log_scale);
        worst = std::max(worst, std::abs(lv - rv) / std::abs(lv));
    }
    return worst;
}

double mu_wronskian() {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> ua(0.05, 6.0), ux(0.05, 80.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng), x = ux(rng), b = 2.0 + (i % 8);
        const auto m = specfun::kummer_m_scaled(a, b, x);
        const auto u = specfun::tricomi_u_scaled(a, b, x);
        const double w = m.value * u.derivative - m.derivative * u.value;
        const double log_expected = std::lgamma(b) - std::lgamma(a) - b * std::log(x) + x;
        worst = std::max(worst, std::abs(-w * std::exp(m.log_scale + u.log_scale - log_expected) - 1.0));
    }
    return worst;
}

double macdonald_closed_form() {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> ux(0.01, 300.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int n = i % 8;
        const double x = ux(rng);
        double sum = 0.0;
        for (int k = 0; k <= n; ++k)
            sum += std::exp(std::lgamma(n + k + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)) / std::pow(2.0 * x, k);
        // both sides carry e^{-x}; compare the scaled forms
        const double closed = std::sqrt(std::numbers::pi / (2.0 * x)) * sum;
        worst = std::max(worst, std::abs(specfun::bessel_k_scaled(n + 0.5, x).k - closed) / closed);
    }
    return worst;
}

double spherical_j_closed_form() {
    double worst = 0.0;
    for (int i = 0; i < 120; ++i) {
        const int l = i % 6;
        const long double x = l + 1.0 + 49.0 * (i / 120.0);
        long double jm = std::sin(x) / x, j = jm / x - std::cos(x) / x, jl = l == 0 ? jm : j;
        for (int n = 1; n < l; ++n) {
            const long double next = (2.0L * n + 1.0L) / x * j - jm;
            jm = j;
            j = next;
            jl = j;
        }
        worst = std::max(worst, std::abs(specfun::spherical_j(l, static_cast<double>(x)) - static_cast<double>(jl)) *
                                    static_cast<double>(x));
    }
    return worst;
}

double wigner_orthogonality() {
    double worst = 0.0;
    for (int tl = 0; tl <= 7; ++tl) {
        for (int tm = -tl; tm <= tl; tm += 2) {
            for (int ts = -tl; ts <= tl; ts += 2) {
                const HalfInt m = HalfInt::from_twice(tm), s = HalfInt::from_twice(ts);
                for (int tl2 = tl; tl2 <= 7; tl2 += 2) {
                    const HalfInt l1 = HalfInt::from_twice(tl), l2 = HalfInt::from_twice(tl2);
                    const double integral = boost::math::quadrature::gauss<double, 30>::integrate(
                        [&](double x) {
                            const double th = std::acos(x);
                            return specfun::wigner_d(l1, m, s, th) * specfun::wigner_d(l2, m, s, th);
                        },
                        -1.0, 1.0);
                    const double expected = tl == tl2 ? 2.0 / (tl + 1.0) : 0.0;
                    worst = std::max(worst, std::abs(integral - expected));
                }
            }
        }
    }
    return worst;
}

double continuation_realness() {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ue(0.01, 20.0), ur(0.01, 25.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double eps = ue(rng), rho = ur(rng), l = 0.5 * (i % 5);
        const double kappa = std::sqrt(eps);
        const auto s = specfun::kummer_m_scaled(cd(l + 1.0, 1.0 / kappa), 2.0 * l + 2.0, cd(0.0, 2.0 * kappa * rho));
        const cd v = std::exp(cd(0.0, -kappa * rho)) * s.value;
        worst = std::max(worst, std::abs(v.imag()) / std::abs(v));
    }
    return worst;
}

double shooting_root(double l, double rho0, double u0, bool coulomb, Bracket b) {
    auto f = [&](double e) { return shooting_oracle(e, l, rho0, u0, coulomb).mismatch; };
    double lo = b.lo, hi = b.hi, flo = f(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi), fm = f(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

HalfInt channel_sm(HalfInt l) { return l.is_integer() ? HalfInt(0) : HalfInt::from_twice(1); }

}  // namespace

std::vector<SelfCheck> identity_checks() {
    return {
        make("identities", "Kummer transformation M(a;b;z) = e^z M(b-a;b;-z)", kummer_transformation(), 1e-10),
        make("identities", "M/U Wronskian", mu_wronskian(), 1e-8),
        make("identities", "K_{n+1/2} closed form", macdonald_closed_form(), 1e-12),
        make("identities", "j_l closed form", spherical_j_closed_form(), 1e-12),
        make("identities", "Wigner d orthogonality", wigner_orthogonality(), 1e-10),
        make("identities", "realness of the eps > 0 continuation", continuation_realness(), 1e-10),
    };
}

std::vector<SelfCheck> oracle_checks() {
    double coulomb = 0.0, free = 0.0, box = 0.0, norm = 0.0;
    for (double rho0 : {1.0, 3.0}) {
        for (double u0 : {2.0, 5.0}) {
            for (int tl = 0; tl <= 3; ++tl) {
                const HalfInt l = HalfInt::from_twice(tl), sm = channel_sm(l);
                const WellParams w{rho0, u0, true};
                for (const auto& lv : solve_levels(w, sm, sm, l, 2)) {
                    coulomb = std::max(coulomb, std::abs(lv.eps - shooting_root(l.value(), rho0, u0, true, lv.bracket)));
                    const auto wf = normalize_level(lv, w);
                    norm = std::max(norm, std::abs(wf.C1 * wf.C1 * (wf.I1 + wf.A * wf.A * wf.I2) - 1.0));
                }
                for (const auto& lv : solve_free_levels(w, l, 2))
                    free = std::max(free, std::abs(lv.eps - shooting_root(l.value(), rho0, u0, false, lv.bracket)));
            }
        }
    }
    for (double rho0 : {0.5, 1.0, 2.0}) {
        for (int tl = 0; tl <= 3; ++tl) {
            const HalfInt l = HalfInt::from_twice(tl);
            const auto levels = solve_free_levels({rho0, kInfiniteHeight, false}, l, 3);
            for (std::size_t n = 0; n < levels.size(); ++n) {
                const double x = boost::math::cyl_bessel_j_zero(l.value() + 0.5, static_cast<int>(n) + 1);
                const double ref = (x / rho0) * (x / rho0);
                box = std::max(box, std::abs(levels[n].eps - ref) / ref);
            }
        }
    }
    return {
        make("oracles", "matching roots vs shooting integration", coulomb, 1e-6),
        make("oracles", "free matching roots vs shooting integration", free, 1e-8),
        make("oracles", "infinite well vs Bessel zeros (relative)", box, 1e-8),
        make("oracles", "normalization C1^2 (I1 + A^2 I2) = 1", norm, 1e-10),
    };
}

std::vector<SelfCheck> run_selftest() {
    auto all = identity_checks();
    for (auto& c : oracle_checks()) all.push_back(std::move(c));
    return all;
}

}  // namespace dyonwell
