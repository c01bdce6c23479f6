#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dyonwell/errors.hpp"
#include "dyonwell/spectrum.hpp"
#include "oracles/oracles.hpp"

using namespace dyonwell;

namespace {

const HalfInt kZero(0);
const HalfInt kHalf = HalfInt::from_twice(1);

SampleFn sampler(const MatchingContext& ctx) {
    return [&ctx](double e) { return ctx.sample(e); };
}

bool contains(const Bracket& b, double x) { return b.lo <= x && x <= b.hi; }

// (s, m) pair of the lowest channel admitting orbital number l
std::pair<HalfInt, HalfInt> channel(HalfInt l) { return l.is_integer() ? std::pair{kZero, kZero} : std::pair{kHalf, kHalf}; }

}  // namespace

TEST_CASE("scan_brackets examples") {
    const MatchingContext hyd({20.0, 5.0, true}, kZero);
    const auto scan = scan_brackets(sampler(hyd), {-1.2, -0.1}, 512);
    REQUIRE(scan.roots.size() >= 2);
    CHECK(contains(scan.roots[0], -1.0));
    CHECK(contains(scan.roots[1], -0.25));
    CHECK(!scan.poles.empty());

    const SampleFn flat = [](double) { return MatchSample{1.0, 1.0, 1.0, 1.0}; };
    CHECK(scan_brackets(flat, {-1.0, 1.0}, 64).roots.empty());

    const double u0 = 5.0, th = std::numbers::pi / (2.0 * std::sqrt(u0));
    const MatchingContext below({0.95 * th, u0, false}, kZero);
    CHECK(scan_brackets(sampler(below), {0.0, u0 - 1e-9}, 2048).roots.empty());

    CHECK_THROWS_AS(scan_brackets(flat, {1.0, 1.0}, 64), EmptyWindow);
    CHECK_THROWS_AS(scan_brackets(flat, {0.0, 1.0}, 8), InvalidParameter);
}

TEST_CASE("serial and parallel scans agree") {
    for (double rho0 : {0.5, 3.0, 20.0}) {
        for (int tl = 0; tl <= 3; ++tl) {
            const MatchingContext ctx({rho0, 5.0, true}, HalfInt::from_twice(tl));
            const auto a = scan_brackets(sampler(ctx), {-2.0, 5.0 - 1e-6}, 700);
            const auto b = scan_brackets_parallel(sampler(ctx), {-2.0, 5.0 - 1e-6}, 700);
            REQUIRE(a.roots.size() == b.roots.size());
            REQUIRE(a.poles.size() == b.poles.size());
            for (std::size_t i = 0; i < a.roots.size(); ++i) {
                CHECK(a.roots[i].lo == b.roots[i].lo);
                CHECK(a.roots[i].hi == b.roots[i].hi);
            }
        }
    }
}

TEST_CASE("scan continues past the window until enough roots are found") {
    const MatchingContext ctx({1.0, kInfiniteHeight, false}, kZero);
    const auto scan = scan_brackets(sampler(ctx), {0.0, 5.0}, 64, 3, 500.0);
    REQUIRE(scan.roots.size() == 3);
    CHECK(contains(scan.roots[2], 9.0 * std::numbers::pi * std::numbers::pi));
}

TEST_CASE("refine_root examples") {
    const MatchingContext hyd({20.0, 5.0, true}, kZero);
    auto w = [&](double e) { return hyd.sample(e).wronskian; };
    CHECK(std::abs(refine_root(w, {-1.1, -0.9}) + 1.0) < 1e-10);

    const double rho0 = 1.3;
    const MatchingContext box({rho0, kInfiniteHeight, false}, kHalf);
    const double x = oracles::spherical_bessel_zeros(0.5, 1)[0];
    const double target = std::pow(x / rho0, 2);
    auto wb = [&](double e) { return box.sample(e).wronskian; };
    CHECK(std::abs(refine_root(wb, {0.9 * target, 1.1 * target}) - target) < 1e-10);

    CHECK(std::abs(refine_root([](double t) { return t - 0.5; }, {0.0, 1.0}) - 0.5) < 1e-10);
    CHECK_THROWS_AS(refine_root([](double t) { return t + 0.5; }, {0.0, 1.0}), BadBracket);
}

TEST_CASE("solve_levels examples") {
    auto lv = solve_levels({20.0, 5.0, true}, kZero, kZero, kZero, 2);
    REQUIRE(lv.size() == 2);
    CHECK(std::abs(lv[0].eps + 1.0) < 1e-4);
    CHECK(std::abs(lv[1].eps + 0.25) < 1e-4);
    CHECK(lv[0].kind == LevelKind::coulomb_dyon);
    CHECK(contains(lv[0].bracket, lv[0].eps));

    lv = solve_levels({20.0, 5.0, true}, kHalf, kHalf, kHalf, 1);
    REQUIRE(lv.size() == 1);
    CHECK(std::abs(lv[0].eps + 4.0 / 9.0) < 1e-4);

    lv = solve_levels({1.0, kInfiniteHeight, false}, kZero, kZero, kZero, 1);
    REQUIRE(lv.size() == 1);
    CHECK(lv[0].eps == doctest::Approx(std::numbers::pi * std::numbers::pi).epsilon(1e-10));
    CHECK(lv[0].kind == LevelKind::free);

    const double u0 = 5.0, th = std::numbers::pi / (2.0 * std::sqrt(u0));
    CHECK(solve_levels({0.9 * th, u0, false}, kZero, kZero, kZero, 1).empty());

    CHECK_THROWS_AS(solve_levels({1.0, 5.0, true}, kHalf, kZero, kZero, 1), InvalidQuantumNumbers);
    CHECK_THROWS_AS(solve_levels({1.0, 5.0, true}, kZero, kZero, kZero, 0), InvalidParameter);
}

TEST_CASE("a window edge at zero energy is never sampled") {
    SolveOptions o;
    o.window_hi = 0.0;
    const auto lv = solve_levels({3.0, 5.0, true}, kZero, kZero, kZero, 5, o);
    REQUIRE(lv.size() == 1);
    CHECK(lv[0].eps == doctest::Approx(solve_levels({3.0, 5.0, true}, kZero, kZero, kZero, 1)[0].eps).epsilon(1e-14));
}

TEST_CASE("deep Coulomb ladder returns the resolved prefix") {
    const WellParams w{3.0, 2.0, true};
    const auto lv = solve_levels(w, kZero, kZero, kZero, 200);
    REQUIRE(lv.size() >= 10);
    CHECK(lv.size() < 200);
    for (std::size_t i = 0; i < lv.size(); ++i) {
        CHECK(lv[i].qn.n_r == static_cast<int>(i));
        CHECK(lv[i].eps < w.u0);
        if (i > 0) CHECK(lv[i].eps > lv[i - 1].eps);
    }
}

TEST_CASE("count_nodes examples") {
    const WellParams big{20.0, 5.0, true};
    const auto lv = solve_levels(big, kZero, kZero, kZero, 2);
    REQUIRE(lv.size() == 2);
    CHECK(count_nodes(lv[0], big) == 0);
    CHECK(count_nodes(lv[1], big) == 1);

    const WellParams box{1.0, kInfiniteHeight, false};
    const auto b = solve_levels(box, kZero, kZero, kZero, 3);
    REQUIRE(b.size() == 3);
    CHECK(count_nodes(b[2], box) == 2);
    CHECK(b[2].eps == doctest::Approx(9.0 * std::numbers::pi * std::numbers::pi).epsilon(1e-10));
}

TEST_CASE("levels interlace in node count") {
    for (double rho0 : {0.5, 2.0, 6.0}) {
        for (double u0 : {2.0, 10.0, kInfiniteHeight}) {
            for (int tl = 0; tl <= 3; ++tl) {
                const HalfInt l = HalfInt::from_twice(tl);
                const auto [s, m] = channel(l);
                const auto lv = solve_levels({rho0, u0, true}, s, m, l, 4);
                for (std::size_t i = 0; i < lv.size(); ++i) {
                    CHECK(lv[i].qn.n_r == static_cast<int>(i));
                    if (i > 0) CHECK(lv[i].eps > lv[i - 1].eps);
                    if (std::isfinite(u0)) CHECK(lv[i].eps < u0);
                }
            }
        }
    }
}

TEST_CASE("infinite-well levels decrease with radius") {
    for (int tl = 0; tl <= 3; ++tl) {
        const HalfInt l = HalfInt::from_twice(tl);
        const auto [s, m] = channel(l);
        std::vector<double> prev;
        for (double rho0 = 0.5; rho0 <= 12.0; rho0 *= 1.35) {
            const auto lv = solve_levels({rho0, kInfiniteHeight, true}, s, m, l, 3);
            REQUIRE(lv.size() == 3);
            for (std::size_t i = 0; i < prev.size(); ++i) CHECK(lv[i].eps <= prev[i]);
            prev.clear();
            for (const auto& x : lv) prev.push_back(x.eps);
        }
    }
}

TEST_CASE("finite-well levels rise with wall height") {
    for (int tl = 0; tl <= 3; ++tl) {
        const HalfInt l = HalfInt::from_twice(tl);
        const auto [s, m] = channel(l);
        std::vector<double> prev;
        for (double u0 = 0.5; u0 <= 20.0; u0 *= 1.4) {
            const auto lv = solve_levels({3.0, u0, true}, s, m, l, 2);
            for (std::size_t i = 0; i < std::min(prev.size(), lv.size()); ++i) CHECK(lv[i].eps >= prev[i]);
            prev.clear();
            for (const auto& x : lv) prev.push_back(x.eps);
        }
    }
}

TEST_CASE("2S and 2P become degenerate in a wide well") {
    const WellParams w{25.0, 5.0, true};
    const auto s = solve_levels(w, kZero, kZero, kZero, 2);
    const auto p = solve_levels(w, kZero, kZero, HalfInt(1), 1);
    REQUIRE(s.size() == 2);
    REQUIRE(p.size() == 1);
    CHECK(std::abs(s[1].eps - p[0].eps) <= 1e-4);
}

TEST_CASE("levels agree with shooting") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ur(0.4, 8.0), uu(1.0, 12.0);
    for (int i = 0; i < 12; ++i) {
        const double rho0 = ur(rng), u0 = uu(rng);
        const HalfInt l = HalfInt::from_twice(i % 4);
        const auto [s, m] = channel(l);
        const bool coulomb = i % 3 != 0;
        for (const auto& lv : solve_levels({rho0, u0, coulomb}, s, m, l, 3)) {
            if (lv.eps > u0 - 1e-3) continue;
            auto mis = [&](double e) { return shooting_oracle(e, l.value(), rho0, u0, coulomb).wronskian; };
            const double hi = std::min(lv.eps + 1e-6, u0 - 1e-9);
            CHECK(mis(lv.eps - 1e-6) * mis(hi) < 0.0);
        }
    }
}
