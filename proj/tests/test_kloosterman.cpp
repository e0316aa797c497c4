#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "klooster/kloosterman.hpp"

using namespace klooster;

// 2 + 2cos(4 pi / 5) and 4cos(2 pi/7) + 2cos(4 pi/7), worked out by hand from
// the defining sums.
constexpr double kS115 = 0.3819660112501051;
constexpr double kS117 = 2.0489173395223055;

TEST_CASE("single sums match hand-computed values") {
    CHECK(kloosterman_sum(1, 1, PrimeModulus(5)) == doctest::Approx(kS115).epsilon(1e-13));
    CHECK(kloosterman_sum(1, 1, PrimeModulus(7)) == doctest::Approx(kS117).epsilon(1e-13));
}

TEST_CASE("sum depends on (a,b) only through ab") {
    const PrimeModulus p(101);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(1, 100);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t a = dist(rng), b = dist(rng);
        const std::int64_t ab = a * b % 101;
        CHECK(kloosterman_sum(a, b, p) ==
              doctest::Approx(kloosterman_sum(ab, 1, p)).epsilon(1e-12));
        CHECK(kloosterman_sum(a, b, p) ==
              doctest::Approx(kloosterman_sum(b, a, p)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(kloosterman_sum(0, 1, p), std::invalid_argument);
    CHECK_THROWS_AS(kloosterman_sum(1, 202, p), std::invalid_argument);
}

TEST_CASE("table matches single sums and stays real") {
    const PrimeModulus p(211);
    const KloostermanTable t = KloostermanTable::direct(p);
    CHECK(t.prime() == 211);
    CHECK(t.values().size() == 210);
    CHECK(t.max_imag_residual() < 1e-9 * std::sqrt(211.0));
    for (std::int64_t a : {1, 2, 105, 210})
        CHECK(t.value(a) == doctest::Approx(kloosterman_sum(a, 1, p)).epsilon(1e-12));
    // sum_a S(a,1;p) = -1 + p [a = 0 term] => V1 = 1; quick smoke of the table
    double v1 = 0.0;
    for (const double v : t.values()) v1 += v;
    CHECK(v1 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("parallel and serial tables are bit-identical") {
    for (std::int64_t pv : {409, 1009}) {
        const PrimeModulus p(pv);
        const KloostermanTable a = KloostermanTable::direct(p);
        const KloostermanTable b = KloostermanTable::direct_serial(p);
        REQUIRE(a.values().size() == b.values().size());
        for (std::size_t i = 0; i < a.values().size(); ++i)
            CHECK(a.values()[i] == b.values()[i]);  // exact: same per-row order
    }
}

TEST_CASE("transform path agrees with the direct path") {
    for (std::int64_t pv : {5, 7, 211, 1009}) {
        const PrimeModulus p(pv);
        const KloostermanTable a = KloostermanTable::direct_serial(p);
        const KloostermanTable b = KloostermanTable::bluestein(p);
        const double tol = 1e-7 * std::sqrt(static_cast<double>(pv));
        double worst = 0.0;
        for (std::size_t i = 0; i < a.values().size(); ++i)
            worst = std::max(worst, std::fabs(a.values()[i] - b.values()[i]));
        CHECK(worst < tol);
    }
}

TEST_CASE("from_values validates shape and the Weil bound") {
    const PrimeModulus p(101);
    const KloostermanTable t = KloostermanTable::direct(p);
    std::vector<double> vals(t.values());
    const KloostermanTable u = KloostermanTable::from_values(p, vals);
    CHECK(u.value(17) == t.value(17));

    std::vector<double> short_vals(99, 0.0);
    CHECK_THROWS_AS(KloostermanTable::from_values(p, std::move(short_vals)),
                    std::invalid_argument);

    std::vector<double> bad(t.values());
    bad[42] = 2.1 * std::sqrt(101.0);  // beyond the Weil bound
    CHECK_THROWS_AS(KloostermanTable::from_values(p, std::move(bad)), std::invalid_argument);
}

TEST_CASE("angles invert the cosine form") {
    const PrimeModulus p(101);
    const KloostermanTable t = KloostermanTable::direct(p);
    const AngleTable th(t);
    const double scale = 2.0 * std::sqrt(101.0);
    for (std::int64_t a = 1; a <= 100; ++a) {
        CHECK(th.theta(a) >= 0.0);
        CHECK(th.theta(a) <= std::acos(-1.0));
        CHECK(std::fabs(scale * std::cos(th.theta(a)) - t.value(a)) < 1e-9 * std::sqrt(101.0));
    }
    // First angle at p = 5: acos(S(1,1;5) / (2 sqrt 5))
    const KloostermanTable t5 = KloostermanTable::direct(PrimeModulus(5));
    const AngleTable th5(t5);
    CHECK(th5.theta(1) == doctest::Approx(1.4852821).epsilon(1e-6));
}

TEST_CASE("bound comparison report") {
    for (std::int64_t pv : {5, 7}) {
        const WeilReport w = weil_verify(KloostermanTable::direct(PrimeModulus(pv)));
        CHECK(w.pass);
        CHECK_FALSE(w.canonical_order);  // 2 sqrt p is the largest bound here
        CHECK(w.weil_bound > w.tolev_bound);
    }
    for (std::int64_t pv : {11, 101, 1009}) {
        const WeilReport w = weil_verify(KloostermanTable::direct(PrimeModulus(pv)));
        CHECK(w.pass);
        CHECK(w.canonical_order);
        CHECK(w.weil_bound <= w.tolev_bound);
        CHECK(w.tolev_bound <= w.kloosterman_bound);
        CHECK(w.max_ratio <= 1.0);
        CHECK(w.max_ratio > 0.5);  // the extreme value is never tiny
    }
}
