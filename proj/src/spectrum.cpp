#include "dyonwell/spectrum.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "dyonwell/errors.hpp"

namespace dyonwell {

namespace {

constexpr long kBlock = 256;
constexpr int kMaxGridDoublings = 4;
constexpr double kPhaseStep = std::numbers::pi / 8.0;
constexpr int kSubdivisions = 8;
constexpr int kMaxDepth = 3;

bool negative(double x) { return x < 0.0; }

void evaluate_serial(const SampleFn& f, const std::vector<double>& xs, std::vector<MatchSample>& ys) {
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);
}

void evaluate_parallel(const SampleFn& f, const std::vector<double>& xs, std::vector<MatchSample>& ys) {
    const long n = static_cast<long>(xs.size());
    std::vector<std::exception_ptr> errors(xs.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        try {
            ys[i] = f(xs[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <class Evaluate>
ScanResult scan_impl(const SampleFn& f, Bracket window, int grid_points, int max_roots, double limit,
                     Evaluate evaluate) {
    if (!(window.hi > window.lo) || !std::isfinite(window.lo) || !std::isfinite(window.hi))
        throw EmptyWindow("scan window (" + std::to_string(window.lo) + ", " + std::to_string(window.hi) + ")");
    if (grid_points < 16) throw InvalidParameter("grid_points must be >= 16");
    const double h = (window.hi - window.lo) / grid_points;
    auto point = [&](long i) {
        const double x = window.lo + (i + 0.5) * h;
        return x == 0.0 ? 1e-3 * h : x;
    };

    ScanResult res;
    std::vector<double> xs;
    std::vector<MatchSample> ys;
    bool have_prev = false;
    double xp = 0.0;
    MatchSample sp;
    const double first = window.lo == 0.0 ? 1e-3 * h : window.lo;
    bool done = false;
    for (long start = 0; !done; start += kBlock) {
        xs.clear();
        if (start == 0) xs.push_back(first);
        for (long i = start; i < start + kBlock; ++i) {
            const double x = point(i);
            if (i >= grid_points && !(x < limit)) {
                // close the last half cell unless the scan already ran past hi
                if (x - h < window.hi) xs.push_back(window.hi == 0.0 ? -1e-3 * h : window.hi);
                done = true;
                break;
            }
            xs.push_back(x);
        }
        if (xs.empty()) break;
        ys.resize(xs.size());
        evaluate(f, xs, ys);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const auto& s = ys[i];
            if (have_prev) {
                if (negative(sp.wronskian) != negative(s.wronskian)) res.roots.push_back({xp, xs[i]});
                if (negative(sp.inside) != negative(s.inside) || negative(sp.outside) != negative(s.outside))
                    res.poles.push_back({xp, xs[i]});
            }
            have_prev = true;
            xp = xs[i];
            sp = s;
        }
        if (max_roots > 0 && static_cast<int>(res.roots.size()) >= max_roots) break;
    }
    return res;
}

struct NodePoint {
    double r;
    bool negative;
    double log_abs;  // ln|u|
    double log_deriv;  // u'/u
};

class NodeCounter {
public:
    NodeCounter(const EnergyLevel& level, const WellParams& well)
        : ctx_(well, level.qn.l), well_(well), eps_(level.eps), l_(level.qn.l.value()),
          c_(well.coulomb ? 1.0 : 0.0) {}

    int count() {
        const double rho0 = well_.rho0;
        // Past the last inside turning point the eigenfunction is monotone up to the
        // wall, while rounding of eps feeds the growing mode there.
        const double stop = inside_stop();
        const double start = std::min(rho0 * 1e-6, 0.5 * stop);
        if (well_.infinite()) return stop > start ? march(start, std::min(stop, rho0 * (1.0 - 1e-7)), false) : 0;
        int n = 0;
        if (stop < rho0) {
            if (stop > start) n = march(start, stop, false);
            const auto last = stop > start ? eval(stop, false) : eval(start, false);
            const auto out = ctx_.outside(eps_, rho0);
            outside_flip_ = last.negative != (out.value < 0);
        } else {
            const auto in = ctx_.inside(eps_, rho0);
            const auto out = ctx_.outside(eps_, rho0);
            const double s = 1.0 + std::sqrt(std::abs(eps_)) + std::sqrt(well_.u0 - eps_);
            const bool by_value = std::abs(in.value) > 0.1 * std::hypot(in.value, in.derivative / s);
            outside_flip_ = by_value ? (in.value < 0) != (out.value < 0) : (in.derivative < 0) != (out.derivative < 0);
            n = march(start, rho0, false);
        }
        // beyond the last classical turning point a decaying solution has no zeros
        const double delta = well_.u0 - eps_, ll1 = l_ * (l_ + 1.0);
        const double disc = c_ * c_ - delta * ll1;
        if (disc >= 0.0) {
            const double rt = (c_ + std::sqrt(disc)) / delta;
            if (rt > rho0) n += march(rho0, 1.1 * rt, true);
        }
        return n;
    }

private:
    // Largest radius <= rho0 where eps + 2c/r - l(l+1)/r^2 >= 0, or 0 if none.
    double inside_stop() const {
        const double rho0 = well_.rho0, ll1 = l_ * (l_ + 1.0);
        if (eps_ + 2.0 * c_ / rho0 - ll1 / (rho0 * rho0) >= 0.0) return rho0;
        if (eps_ >= 0.0) return 0.0;
        const double disc = c_ * c_ + eps_ * ll1;
        if (disc < 0.0) return 0.0;
        return std::min(rho0, (c_ + std::sqrt(disc)) / (-eps_));
    }

    double wavenumber(double r, bool outside) const {
        const double q = eps_ + 2.0 * c_ / r - l_ * (l_ + 1.0) / (r * r) - (outside ? well_.u0 : 0.0);
        return std::sqrt(std::max(q, 0.0));
    }

    NodePoint eval(double r, bool outside) const {
        const auto v = outside ? ctx_.outside(eps_, r) : ctx_.inside(eps_, r);
        const bool neg = (v.value < 0) != (outside && outside_flip_);
        return {r, neg, std::log(std::abs(v.value)) + v.log_scale + std::log(r), 1.0 / r + v.derivative / v.value};
    }

    int march(double a, double b, bool outside) {
        const double cap = (b - a) / 64.0;
        int n = 0;
        NodePoint p = eval(a, outside);
        double r = a;
        while (r < b) {
            double h = cap;
            for (int it = 0; it < 2; ++it) {
                const double k = std::max(wavenumber(r, outside), wavenumber(std::min(b, r + h), outside));
                h = std::min(cap, k > 0.0 ? kPhaseStep / k : cap);
            }
            const double next = b - r <= h * 1.000001 ? b : r + h;
            const NodePoint q = eval(next, outside);
            n += crossings(p, q, outside, 0);
            p = q;
            r = next;
        }
        return n;
    }

    int crossings(const NodePoint& p, const NodePoint& q, bool outside, int depth) {
        if (p.negative != q.negative) return 1;
        if (!(p.log_deriv < 0.0 && q.log_deriv > 0.0)) return 0;
        // |u| has an interior minimum in this cell: look closer
        if (depth < kMaxDepth) {
            int n = 0;
            NodePoint a = p;
            for (int i = 1; i <= kSubdivisions; ++i) {
                const NodePoint b = i == kSubdivisions ? q : eval(p.r + (q.r - p.r) * i / kSubdivisions, outside);
                n += crossings(a, b, outside, depth + 1);
                a = b;
            }
            return n;
        }
        // cubic Hermite model of |u| over the cell, normalized to |u(p)| = 1
        const double h = q.r - p.r;
        const double y0 = 1.0, y1 = std::exp(q.log_abs - p.log_abs);
        const double d0 = p.log_deriv * h, d1 = y1 * q.log_deriv * h;
        double lowest = std::min(y0, y1);
        for (int i = 1; i < 64; ++i) {
            const double t = i / 64.0, t2 = t * t, t3 = t2 * t;
            const double y = (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * d0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * d1;
            lowest = std::min(lowest, y);
        }
        if (lowest <= 0.0)
            throw NodeResolutionError("two nodes within a cell near rho = " + std::to_string(p.r));
        return 0;
    }

    MatchingContext ctx_;
    WellParams well_;
    double eps_, l_, c_;
    bool outside_flip_ = false;
};

}  // namespace

ScanResult scan_brackets(const SampleFn& f, Bracket window, int grid_points, int max_roots, double limit) {
    return scan_impl(f, window, grid_points, max_roots, limit, evaluate_serial);
}

ScanResult scan_brackets_parallel(const SampleFn& f, Bracket window, int grid_points, int max_roots,
                                  double limit) {
    return scan_impl(f, window, grid_points, max_roots, limit, evaluate_parallel);
}

Bracket refine_bracket(const std::function<double(double)>& f, Bracket bracket, double tol) {
    const double flo = f(bracket.lo), fhi = f(bracket.hi);
    if (flo == 0.0) return {bracket.lo, bracket.lo};
    if (fhi == 0.0) return {bracket.hi, bracket.hi};
    if ((flo < 0) == (fhi < 0))
        throw BadBracket("no sign change on (" + std::to_string(bracket.lo) + ", " + std::to_string(bracket.hi) + ")");
    std::uintmax_t iters = 200;
    auto done = [tol](double a, double b) {
        return std::abs(b - a) <= std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)));
    };
    const auto r = boost::math::tools::toms748_solve(f, bracket.lo, bracket.hi, flo, fhi, done, iters);
    if (!done(r.first, r.second)) throw ConvergenceError("root refinement stalled", std::abs(r.second - r.first));
    return {r.first, r.second};
}

double refine_root(const std::function<double(double)>& f, Bracket bracket, double tol) {
    const Bracket b = refine_bracket(f, bracket, tol);
    return 0.5 * (b.lo + b.hi);
}

std::vector<EnergyLevel> solve_levels(const WellParams& well, HalfInt s, HalfInt m, HalfInt l, int max_levels,
                                      const SolveOptions& opts) {
    QuantumNumbers{s, m, l, 0}.validate();
    well.validate();
    if (max_levels < 1) throw InvalidParameter("max_levels must be >= 1");
    const MatchingContext ctx(well, l);

    const bool user_lo = !std::isnan(opts.window_lo);
    Bracket window{user_lo ? opts.window_lo : (well.coulomb ? -2.0 : 0.0), opts.window_hi};
    double limit = -std::numeric_limits<double>::infinity();
    if (std::isnan(window.hi)) {
        if (well.infinite()) {
            const double guess = std::pow((max_levels + 0.5 * l.value() + 1.0) * std::numbers::pi / well.rho0, 2);
            window.hi = 1.2 * guess + 1.0;
            limit = 64.0 * window.hi;
        } else {
            window.hi = well.u0 - 1e-6;
        }
    }
    if (!well.infinite() && !(window.hi < well.u0)) throw EmptyWindow("scan window must lie below u0");

    const SampleFn f = [&ctx](double e) { return ctx.sample(e); };
    auto w = [&ctx](double e) { return ctx.sample(e).wronskian; };
    const LevelKind kind = well.coulomb ? LevelKind::coulomb_dyon : LevelKind::free;

    std::vector<EnergyLevel> resolved;
    int grid = opts.grid_points;
    for (int attempt = 0; attempt <= kMaxGridDoublings; ++attempt, grid *= 2) {
        const auto scan = opts.parallel ? scan_brackets_parallel(f, window, grid, max_levels, limit)
                                        : scan_brackets(f, window, grid, max_levels, limit);
        std::vector<EnergyLevel> levels;
        bool consistent = true;
        const std::size_t count = std::min<std::size_t>(max_levels, scan.roots.size());
        for (std::size_t i = 0; i < count && consistent; ++i) {
            EnergyLevel lv;
            lv.bracket = scan.roots[i];
            const Bracket fine = refine_bracket(w, lv.bracket, opts.tol);
            lv.eps = 0.5 * (fine.lo + fine.hi);
            lv.qn = {s, m, l, 0};
            lv.residual = 0.5 * (fine.hi - fine.lo);
            lv.kind = kind;
            const int nr = count_nodes(lv, well);
            const int expected = user_lo && !levels.empty() ? levels.front().qn.n_r + static_cast<int>(i)
                                                            : static_cast<int>(i);
            if (nr != expected && !(user_lo && i == 0)) {
                consistent = false;
                break;
            }
            lv.qn.n_r = nr;
            levels.push_back(lv);
        }
        if (consistent) return levels;
        if (levels.size() > resolved.size()) resolved = std::move(levels);
    }
    if (!resolved.empty()) return resolved;
    throw NodeResolutionError("node counts disagree with level order for l = " + l.str() + " in (" +
                              std::to_string(window.lo) + ", " + std::to_string(window.hi) + ")");
}

int count_nodes(const EnergyLevel& level, const WellParams& well) { return NodeCounter(level, well).count(); }

}  // namespace dyonwell
