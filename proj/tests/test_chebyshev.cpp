#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "klooster/chebyshev.hpp"

using namespace klooster;

TEST_CASE("second-kind polynomials: closed forms and the sine quotient") {
    CHECK(cheb_u(0, 0.3) == 1.0);
    CHECK(cheb_u(1, 0.3) == doctest::Approx(0.6));
    CHECK(cheb_u(2, 0.3) == doctest::Approx(4 * 0.09 - 1));
    CHECK(cheb_u(3, 0.3) == doctest::Approx(8 * 0.027 - 4 * 0.3));
    for (double th : {0.3, 1.0, 2.5}) {
        for (int k : {1, 4, 7, 12}) {
            CHECK(cheb_u(k, std::cos(th)) ==
                  doctest::Approx(std::sin((k + 1) * th) / std::sin(th)).epsilon(1e-11));
        }
    }
}

TEST_CASE("exact factorials and binomials") {
    CHECK(factorial_exact(0) == 1);
    CHECK(factorial_exact(5) == 120);
    CHECK(factorial_exact(20) == 2432902008176640000LL);
    CHECK_THROWS_AS(factorial_exact(21), std::invalid_argument);
    CHECK(binomial_exact(17, 8) == 24310);
    CHECK(binomial_exact(6, 0) == 1);
    CHECK_THROWS_AS(binomial_exact(3, 5), std::invalid_argument);
}

TEST_CASE("pure powers reconstruct from the finite U expansion") {
    for (int k = 0; k <= 5; ++k) {
        const PowerExpansion even = even_power_coeffs(k);
        const PowerExpansion odd = odd_power_coeffs(k);
        for (int i = 0; i <= 40; ++i) {
            const double x = -1.0 + i / 20.0;
            CHECK(std::fabs(even.reconstruct(x) - std::pow(x, 2 * k)) < 1e-12);
            CHECK(std::fabs(odd.reconstruct(x) - std::pow(x, 2 * k + 1)) < 1e-12);
        }
    }
}

TEST_CASE("quarter-scaled odd coefficients fail reconstruction by exactly 4x") {
    const PowerExpansion q0 = odd_power_coeffs_quarter_scaled(0);
    CHECK(q0.reconstruct(1.0) == doctest::Approx(0.25).epsilon(1e-14));  // x rebuilt as x/4
    for (int k = 0; k <= 4; ++k) {
        const PowerExpansion q = odd_power_coeffs_quarter_scaled(k);
        const PowerExpansion c = odd_power_coeffs(k);
        double worst = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double x = -1.0 + i / 20.0;
            worst = std::max(worst, std::fabs(q.reconstruct(x) - std::pow(x, 2 * k + 1)));
            CHECK(q.reconstruct(x) == doctest::Approx(c.reconstruct(x) / 4.0).epsilon(1e-12));
        }
        CHECK(worst > 0.5);  // rejected at tolerance 1e-10 by a wide margin
    }
}

TEST_CASE("absolute-power leading coefficient") {
    CHECK(abs_power_a0(0) == doctest::Approx(0.424413181578388).epsilon(1e-12));   // 4/(3 pi)
    CHECK(abs_power_a0(1) == doctest::Approx(0.169765272631355).epsilon(1e-11));
    CHECK(abs_power_a0(2) == doctest::Approx(0.097008727217917).epsilon(1e-11));
    CHECK(abs_power_a0(3) == doctest::Approx(0.064672484811945).epsilon(1e-11));
    // The general closed form degenerates to a0 at index zero
    for (int k = 0; k <= 4; ++k)
        CHECK(abs_coeff_closed_form(k, 0) == doctest::Approx(abs_power_a0(k)).epsilon(1e-12));
}

TEST_CASE("tail coefficients: closed form vs quadrature and k=0 explicit form") {
    CHECK(abs_coeff_closed_form(0, 2) == doctest::Approx(4.0 / (5.0 * std::acos(-1.0))).epsilon(1e-12));
    // k = 0: c at even index l is (2/pi)(-1)^{l/2-1} * 2 / ((l-1)(l+3))
    for (int l = 2; l <= 40; l += 2) {
        const double sign = (l / 2) % 2 == 1 ? 1.0 : -1.0;
        const double expect = (2.0 / std::acos(-1.0)) * sign * 2.0 / ((l - 1.0) * (l + 3.0));
        CHECK(abs_coeff_closed_form(0, l) == doctest::Approx(expect).epsilon(1e-12));
    }
    // Simpson quadrature of (4/pi) int_0^{pi/2} sin t cos^{2k+1} t sin((l+1)t) dt
    auto quad = [](int k, int ell) {
        const double pi = std::acos(-1.0);
        const int n = 20000;
        const double h = (pi / 2) / n;
        double s = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double t = i * h;
            const double f = std::sin(t) * std::pow(std::cos(t), 2 * k + 1) * std::sin((ell + 1) * t);
            s += f * (i == 0 || i == n ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0));
        }
        return 4.0 / pi * s * h / 3.0;
    };
    for (auto [k, ell] : {std::pair{1, 4}, {2, 10}, {3, 8}, {4, 26}})
        CHECK(abs_coeff_closed_form(k, ell) == doctest::Approx(quad(k, ell)).epsilon(1e-7));
}

TEST_CASE("factorial-form expression disagrees with the true coefficients") {
    // Representative deltas: far too large at small ell, then factorially
    // small while the true coefficients only decay algebraically.
    CHECK(std::fabs(abs_coeff_factorial_form(0, 2) - abs_coeff_closed_form(0, 2)) > 0.01);
    CHECK(std::fabs(abs_coeff_factorial_form(3, 8) - abs_coeff_closed_form(3, 8)) > 100.0);
    CHECK(std::fabs(abs_coeff_closed_form(0, 12)) >
          1000.0 * std::fabs(abs_coeff_factorial_form(0, 12)));
    CHECK_THROWS_AS(abs_coeff_factorial_form(1, 2), std::invalid_argument);  // needs ell >= 2k+2
}

TEST_CASE("algebraic (not factorial) coefficient decay") {
    for (int k = 1; k <= 3; ++k) {
        // |c| at doubled index shrinks by about 2^{-(2k+2)}
        const double r =
            std::fabs(abs_coeff_closed_form(k, 320) / abs_coeff_closed_form(k, 160));
        const double expect = std::pow(0.5, 2 * k + 2);
        CHECK(r == doctest::Approx(expect).epsilon(0.08));
    }
}

TEST_CASE("truncated absolute expansion and its measured remainder") {
    const AbsExpansion e0 = abs_power_coeffs(0, 12);
    CHECK(e0.sup_remainder == doctest::Approx(0.0245939).epsilon(0.03));
    const AbsExpansion e1 = abs_power_coeffs(1, 13);
    CHECK(e1.sup_remainder == doctest::Approx(1.77142e-4).epsilon(0.03));
    const AbsExpansion e2 = abs_power_coeffs(2, 14);
    CHECK(e2.sup_remainder == doctest::Approx(3.29155e-6).epsilon(0.03));
    const AbsExpansion e3 = abs_power_coeffs(3, 15);
    CHECK(e3.sup_remainder == doctest::Approx(1.02306e-7).epsilon(0.03));

    // Pointwise: the truncation error never exceeds tail_bound.
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (const AbsExpansion* e : {&e0, &e1, &e2, &e3}) {
        for (int i = 0; i < 300; ++i) {
            const double x = dist(rng);
            const double err = std::fabs(std::pow(std::fabs(x), 2 * e->k + 1) - e->evaluate(x));
            CHECK(err <= e->tail_bound);
        }
    }
    CHECK_THROWS_AS(abs_power_coeffs(2, 2), std::invalid_argument);  // L < k+1
}

TEST_CASE("envelope constants") {
    const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42};
    const double d_expect[] = {0.0, 1.5, 7.0, 29.5, 121.0, 491.0};
    for (int k = 0; k <= 5; ++k) {
        const EnvelopeConstants ec = envelope_constants(k, k + 12, 5000.0);
        CHECK(ec.C == catalan[k]);
        CHECK(ec.D == doctest::Approx(d_expect[k]).epsilon(1e-9));
        CHECK(ec.E == doctest::Approx(std::pow(4.0, k)).epsilon(1e-12));
        CHECK(ec.E_quarter == doctest::Approx(std::pow(4.0, k) / 4.0).epsilon(1e-12));
    }
    const EnvelopeConstants f0 = envelope_constants(0, 12, 5000.0);
    CHECK(f0.katz_part == doctest::Approx(2.0 * 1.0162).epsilon(2e-3));
    CHECK(f0.F > 5.0);
    CHECK(f0.F < 6.5);
    const EnvelopeConstants f1 = envelope_constants(1, 13, 5000.0);
    CHECK(f1.katz_part == doctest::Approx(8.0 * 0.4626).epsilon(2e-3));
    CHECK(f1.F > 3.6);
    CHECK(f1.F < 3.8);
    CHECK(envelope_constants(2, 14, 5000.0).F < 16.0);
    CHECK(envelope_constants(3, 15, 5000.0).F < 62.0);
    // k >= 1 majorants are p-uniform: no pmax dependence
    CHECK(envelope_constants(1, 13, 50000.0).F == doctest::Approx(f1.F).epsilon(1e-12));
    // k = 0 grows with sqrt(pmax)
    CHECK(envelope_constants(0, 12, 20000.0).F > f0.F);
}
