// Bessel J and Macdonald K of real order.
//
// Steed's continued fractions for x >= 2 and Temme's series for x < 2, with
// the order reduced to |mu| <= 1/2 and recovered by recurrence (downward
// for J, upward for K). Spherical Bessel functions of integer and
// half-integer index are built on top.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dyonwell/errors.hpp"
#include "dyonwell/specfun.hpp"

namespace dyonwell::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr double kFpMin = 1e-300;
constexpr double kXMin = 2.0;
constexpr int kMaxIt = 100000;

// Taylor coefficients of 1 / Gamma(1 + z) about z = 0.
constexpr std::array<double, 17> kRecipGamma = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
};

struct TemmeGammas {
    double gam1;   // (1/G(1-mu) - 1/G(1+mu)) / (2 mu)
    double gam2;   // (1/G(1-mu) + 1/G(1+mu)) / 2
    double gampl;  // 1/G(1+mu)
    double gammi;  // 1/G(1-mu)
};

TemmeGammas temme_gammas(double mu) {
    TemmeGammas g{};
    g.gampl = 1.0 / std::tgamma(1.0 + mu);
    g.gammi = 1.0 / std::tgamma(1.0 - mu);
    if (std::abs(mu) < 0.1) {
        double odd = 0.0, even = 0.0, p = 1.0;
        for (std::size_t k = 0; k < kRecipGamma.size(); ++k) {
            if (k % 2 == 0) {
                even += kRecipGamma[k] * p;
            } else {
                odd += kRecipGamma[k] * p / mu;
            }
            p *= mu;
        }
        if (mu == 0.0) odd = kRecipGamma[1];
        g.gam1 = -odd;
        g.gam2 = even;
    } else {
        g.gam1 = (g.gammi - g.gampl) / (2.0 * mu);
        g.gam2 = 0.5 * (g.gammi + g.gampl);
    }
    return g;
}

void check_order(double nu, double x) {
    if (!(x >= 0.0) || !(nu >= 0.0) || !std::isfinite(x) || !std::isfinite(nu)) {
        std::ostringstream os;
        os << "Bessel J requires nu >= 0 and x >= 0 (got nu=" << nu << ", x=" << x << ")";
        throw DomainError(os.str());
    }
}

}  // namespace

BesselJ bessel_j_pair(double nu, double x) {
    check_order(nu, x);
    if (x == 0.0) {
        if (nu == 0.0) return {1.0, 0.0};
        if (nu == 1.0) return {0.0, 0.5};
        return {0.0, nu < 1.0 ? std::numeric_limits<double>::infinity() : 0.0};
    }
    const int nl = x < kXMin ? static_cast<int>(nu + 0.5) : std::max(0, static_cast<int>(nu - x + 1.5));
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / kPi;

    // CF1: J'_nu / J_nu.
    int isign = 1;
    double h = nu * xi;
    if (h < kFpMin) h = kFpMin;
    double b = xi2 * nu;
    double d = 0.0;
    double c = h;
    int i = 0;
    for (; i < kMaxIt; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = b - 1.0 / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) isign = -isign;
        if (std::abs(del - 1.0) < kEps) break;
    }
    if (i == kMaxIt) throw ConvergenceError("Bessel J continued fraction", 1.0);

    double rjl = isign * kFpMin;
    double rjpl = h * rjl;
    const double rjl1 = rjl;
    const double rjp1 = rjpl;
    double fact = nu * xi;
    for (int l = nl - 1; l >= 0; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if (rjl == 0.0) rjl = kEps;
    const double f = rjpl / rjl;

    double rjmu = 0.0;
    if (x < kXMin) {
        const double x2 = 0.5 * x;
        const double pimu = kPi * xmu;
        const double fct = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        double dd = -std::log(x2);
        double e = xmu * dd;
        const double fct2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
        const auto g = temme_gammas(xmu);
        double ff = 2.0 / kPi * fct * (g.gam1 * std::cosh(e) + g.gam2 * fct2 * dd);
        e = std::exp(e);
        double p = e / (g.gampl * kPi);
        double q = 1.0 / (e * kPi * g.gammi);
        const double pimu2 = 0.5 * pimu;
        const double fct3 = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
        const double r = kPi * pimu2 * fct3 * fct3;
        double cc = 1.0;
        dd = -x2 * x2;
        double sum = ff + r * q;
        double sum1 = p;
        int k = 1;
        for (; k < kMaxIt; ++k) {
            ff = (k * ff + p + q) / (k * k - xmu2);
            cc *= dd / k;
            p /= k - xmu;
            q /= k + xmu;
            const double del = cc * (ff + r * q);
            sum += del;
            const double del1 = cc * p - k * del;
            sum1 += del1;
            if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
        }
        if (k == kMaxIt) throw ConvergenceError("Bessel Y series", 1.0);
        const double rymu = -sum;
        const double ry1 = -sum1 * xi2;
        const double rymup = xmu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + iq = (J' + iY') / (J + iY).
        double a = 0.25 - xmu2;
        double p = -0.5 * xi;
        double q = 1.0;
        const double br = 2.0 * x;
        double bi = 2.0;
        double fct = a * xi / (p * p + q * q);
        double cr = br + q * fct;
        double ci = bi + p * fct;
        double den = br * br + bi * bi;
        double dr = br / den;
        double di = -bi / den;
        double dlr = cr * dr - ci * di;
        double dli = cr * di + ci * dr;
        double temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        int k = 1;
        for (; k < kMaxIt; ++k) {
            a += 2 * k;
            bi += 2.0;
            dr = a * dr + br;
            di = a * di + bi;
            if (std::abs(dr) + std::abs(di) < kFpMin) dr = kFpMin;
            fct = a / (cr * cr + ci * ci);
            cr = br + cr * fct;
            ci = bi - ci * fct;
            if (std::abs(cr) + std::abs(ci) < kFpMin) cr = kFpMin;
            den = dr * dr + di * di;
            dr /= den;
            di /= -den;
            dlr = cr * dr - ci * di;
            dli = cr * di + ci * dr;
            temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (std::abs(dlr - 1.0) + std::abs(dli) < kEps) break;
        }
        if (k == kMaxIt) throw ConvergenceError("Bessel J second continued fraction", 1.0);
        const double gam = (p - f) / q;
        rjmu = std::sqrt(w / ((p - f) * gam + q));
        rjmu = std::copysign(rjmu, rjl);
    }
    const double scale = rjmu / rjl;
    return {rjl1 * scale, rjp1 * scale};
}

double bessel_j(double nu, double x) { return bessel_j_pair(nu, x).j; }

BesselJ spherical_j_pair(double l, double x) {
    if (!(x >= 0.0) || !(l >= 0.0)) {
        std::ostringstream os;
        os << "spherical j requires l >= 0 and x >= 0 (got l=" << l << ", x=" << x << ")";
        throw DomainError(os.str());
    }
    if (x < 1.0) {
        // j_l(x) = (sqrt(pi)/2) sum_k (-x^2/4)^k (x/2)^l / (k! Gamma(l + k + 3/2))
        if (x == 0.0) {
            if (l == 0.0) return {1.0, 0.0};
            if (l == 1.0) return {0.0, 1.0 / 3.0};
            return {0.0, l < 1.0 ? std::numeric_limits<double>::infinity() : 0.0};
        }
        const double pre = 0.5 * std::sqrt(kPi) * std::exp(l * std::log(0.5 * x) - std::lgamma(l + 1.5));
        const double y = -0.25 * x * x;
        double term = 1.0, sum = 1.0, dsum = l;
        for (int k = 1; k < 200; ++k) {
            term *= y / (k * (l + k + 0.5));
            sum += term;
            dsum += term * (l + 2.0 * k);
            if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        }
        return {pre * sum, pre * dsum / x};
    }
    const auto jp = bessel_j_pair(l + 0.5, x);
    const double pre = std::sqrt(0.5 * kPi / x);
    return {pre * jp.j, pre * (jp.jp - 0.5 * jp.j / x)};
}

double spherical_j(double l, double x) { return spherical_j_pair(l, x).j; }

BesselK bessel_k_scaled(double nu, double x) {
    if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(nu)) {
        std::ostringstream os;
        os << "Bessel K requires x > 0 (got " << x << ")";
        throw DomainError(os.str());
    }
    nu = std::abs(nu);
    const int nl = static_cast<int>(nu + 0.5);
    const double xmu = nu - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    double rkmu = 0.0;
    double rk1 = 0.0;
    if (x < kXMin) {
        const double x2 = 0.5 * x;
        const double pimu = kPi * xmu;
        const double fct = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        double d = -std::log(x2);
        double e = xmu * d;
        const double fct2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
        const auto g = temme_gammas(xmu);
        double ff = fct * (g.gam1 * std::cosh(e) + g.gam2 * fct2 * d);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / g.gampl;
        double q = 0.5 / (e * g.gammi);
        double c = 1.0;
        d = x2 * x2;
        double sum1 = p;
        int k = 1;
        for (; k < kMaxIt; ++k) {
            ff = (k * ff + p + q) / (k * k - xmu2);
            c *= d / k;
            p /= k - xmu;
            q /= k + xmu;
            const double del = c * ff;
            sum += del;
            const double del1 = c * (p - k * ff);
            sum1 += del1;
            if (std::abs(del) < std::abs(sum) * kEps) break;
        }
        if (k == kMaxIt) throw ConvergenceError("Bessel K series", 1.0);
        const double ex = std::exp(x);
        rkmu = sum * ex;
        rk1 = sum1 * xi2 * ex;
    } else {
        // Steed's CF2 (Temme's normalization), exp(-x) factored out.
        double b = 2.0 * (1.0 + x);
        double d = 1.0 / b;
        double h = d;
        double delh = d;
        double q1 = 0.0;
        double q2 = 1.0;
        const double a1 = 0.25 - xmu2;
        double q = a1;
        double c = a1;
        double a = -a1;
        double s = 1.0 + q * delh;
        int k = 1;
        for (; k < kMaxIt; ++k) {
            a -= 2 * k;
            c = -a * c / (k + 1.0);
            const double qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            h += delh;
            const double dels = q * delh;
            s += dels;
            if (std::abs(dels / s) < kEps) break;
        }
        if (k == kMaxIt) throw ConvergenceError("Bessel K continued fraction", 1.0);
        h = a1 * h;
        rkmu = std::sqrt(kPi / (2.0 * x)) / s;
        rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
    }
    for (int k = 1; k <= nl; ++k) {
        const double rktemp = (xmu + k) * xi2 * rk1 + rkmu;
        rkmu = rk1;
        rk1 = rktemp;
    }
    return {rkmu, nu * xi * rkmu - rk1};
}

double bessel_k(double nu, double x) {
    const auto k = bessel_k_scaled(nu, x);
    return k.k * std::exp(-x);
}

}  // namespace dyonwell::specfun
