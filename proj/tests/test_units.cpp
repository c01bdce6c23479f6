#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dyonwell/errors.hpp"
#include "dyonwell/units.hpp"

using namespace dyonwell;

namespace {
const HalfInt kHalf = HalfInt::from_twice(1);
}

TEST_CASE("reduced_params") {
    auto p = reduced_params(-1.0, 5.0);
    CHECK(p.gamma1.real() == doctest::Approx(1.0));
    CHECK(p.gamma2 == doctest::Approx(2.449489743).epsilon(1e-10));
    CHECK(p.k1.real() == doctest::Approx(1.0));
    CHECK(p.k2 == doctest::Approx(0.4082482905).epsilon(1e-10));

    p = reduced_params(-0.25, kInfiniteHeight);
    CHECK(p.gamma1.real() == 0.5);
    CHECK(p.k1.real() == 2.0);
    CHECK(std::isinf(p.gamma2));

    p = reduced_params(1.0, 5.0);
    CHECK(p.gamma1 == std::complex<double>(0.0, 1.0));
    CHECK(p.k1 == std::complex<double>(0.0, -1.0));
    CHECK(p.gamma2 == 2.0);

    CHECK_THROWS_AS(reduced_params(5.0, 5.0), NotBound);
    CHECK_THROWS_AS(reduced_params(6.0, 5.0), NotBound);
    CHECK_THROWS_AS(reduced_params(0.0, 5.0), DomainError);
}

TEST_CASE("reduced_params identities") {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> ue(-3.0, 10.0), uu(0.1, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const double u0 = uu(rng);
        const double eps = std::min(ue(rng), u0 - 1e-3);
        if (eps == 0.0) continue;
        const auto p = reduced_params(eps, u0);
        CHECK(std::abs(p.k1 * p.gamma1 - 1.0) < 4e-16);
        CHECK(std::abs(p.k2 * p.gamma2 - 1.0) < 4e-16);
        CHECK(std::abs(p.gamma1 * p.gamma1 + eps) < 1e-14 * (1.0 + std::abs(eps)));
        CHECK(std::abs(p.gamma2 * p.gamma2 - (u0 - eps)) < 1e-14 * (1.0 + u0));
    }
}

TEST_CASE("allowed_l ladder") {
    auto ls = allowed_l(HalfInt(0), HalfInt(0), 3);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == HalfInt(0));
    CHECK(ls[2] == HalfInt(2));

    ls = allowed_l(kHalf, kHalf, 2);
    CHECK(ls[0] == kHalf);
    CHECK(ls[1] == HalfInt::from_twice(3));

    ls = allowed_l(HalfInt(-1), HalfInt(1), 2);
    CHECK(ls[0] == HalfInt(1));
    CHECK(ls[1] == HalfInt(2));

    CHECK_THROWS_AS(allowed_l(HalfInt(0), kHalf, 2), InvalidQuantumNumbers);

    for (int tm = -7; tm <= 7; ++tm) {
        for (int ts = -7 + ((tm + 7) % 2); ts <= 7; ts += 2) {
            const auto m = HalfInt::from_twice(tm), s = HalfInt::from_twice(ts);
            const auto v = allowed_l(m, s, 5);
            CHECK(v.front() == std::max(m.abs(), s.abs()));
            for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] - v[i - 1] == HalfInt(1));
        }
    }
}

TEST_CASE("free spectrum and degeneracy") {
    auto f = free_spectrum_and_degeneracy(HalfInt(1), HalfInt(0));
    CHECK(f.eps == -1.0);
    CHECK(f.degeneracy == 1);
    f = free_spectrum_and_degeneracy(HalfInt::from_twice(3), kHalf);
    CHECK(f.eps == doctest::Approx(-4.0 / 9.0).epsilon(1e-15));
    CHECK(f.degeneracy == 2);
    f = free_spectrum_and_degeneracy(HalfInt(2), HalfInt(0));
    CHECK(f.eps == -0.25);
    CHECK(f.degeneracy == 4);
    CHECK_THROWS_AS(free_spectrum_and_degeneracy(kHalf, kHalf), InvalidQuantumNumbers);
    CHECK_THROWS_AS(free_spectrum_and_degeneracy(HalfInt(0), HalfInt(0)), InvalidQuantumNumbers);

    for (int ts = 0; ts <= 6; ++ts) {
        const auto s = HalfInt::from_twice(ts);
        double prev = -2.0;
        for (int k = 1; k < 10; ++k) {
            const auto n = s + HalfInt(k);
            const auto lv = free_spectrum_and_degeneracy(n, s);
            CHECK(lv.degeneracy > 0);
            CHECK(lv.eps > prev);
            prev = lv.eps;
        }
    }
}

TEST_CASE("quantum number validation") {
    QuantumNumbers q{kHalf, kHalf, kHalf, 0};
    CHECK_NOTHROW(q.validate());
    CHECK(q.principal() == HalfInt::from_twice(3));
    q.l = HalfInt(1);
    CHECK_THROWS_AS(q.validate(), InvalidQuantumNumbers);
    q = {HalfInt(1), HalfInt(0), HalfInt(0), 0};
    CHECK_THROWS_AS(q.validate(), InvalidQuantumNumbers);
    CHECK_THROWS_AS(HalfInt::from_double(0.3), InvalidQuantumNumbers);
    CHECK(HalfInt::from_double(1.5).twice() == 3);

    WellParams w{-1.0, 5.0, true};
    CHECK_THROWS_AS(w.validate(), InvalidParameter);
    w = {1.0, -5.0, true};
    CHECK_THROWS_AS(w.validate(), InvalidParameter);
}
