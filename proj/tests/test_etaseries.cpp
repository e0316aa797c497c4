#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>

#include "doctest.h"
#include "klooster/etaseries.hpp"

using namespace klooster;

TEST_CASE("q-expansion head") {
    const QSeries s = QSeries::eta_product(20);
    const std::int64_t expect[] = {1,  -2, -3, 4,  6,  6,   -16, -8, 9,  -12,
                                   12, -12, 38, 32, -18, 16, -126, -18, 20, 24};
    CHECK(s.length() == 20);
    for (std::int64_t n = 1; n <= 20; ++n) CHECK(s.coeff(n) == expect[n - 1]);
    CHECK_THROWS_AS(s.coeff(0), std::out_of_range);
    CHECK_THROWS_AS(s.coeff(21), std::out_of_range);
}

TEST_CASE("Hecke multiplicativity of the coefficients") {
    const QSeries s = QSeries::eta_product(200);
    // coprime indices multiply
    CHECK(s.coeff(6) == s.coeff(2) * s.coeff(3));
    CHECK(s.coeff(10) == s.coeff(2) * s.coeff(5));
    CHECK(s.coeff(21) == s.coeff(3) * s.coeff(7));
    CHECK(s.coeff(55) == s.coeff(5) * s.coeff(11));
    CHECK(s.coeff(187) == s.coeff(11) * s.coeff(17));
    // good primes q (q not dividing 6): c(q^2) = c(q)^2 - q^3
    for (std::int64_t q : {5, 7, 11, 13})
        CHECK(s.coeff(q * q) == s.coeff(q) * s.coeff(q) - q * q * q);
    // bad primes 2, 3: c(q^2) = c(q)^2
    CHECK(s.coeff(4) == s.coeff(2) * s.coeff(2));
    CHECK(s.coeff(9) == s.coeff(3) * s.coeff(3));
}

TEST_CASE("prime coefficients with the Ramanujan-Petersson bound") {
    const QSeries s = QSeries::eta_product(500);
    const std::map<std::int64_t, std::int64_t> frozen{
        {11, 12}, {13, 38}, {17, -126}, {19, 20},  {23, 168},
        {29, 30}, {31, -88}, {37, 254},  {41, 42}, {43, -52}};
    for (const auto& [p, b] : frozen) CHECK(newform_coeff(PrimeModulus(p), s) == b);
    for (std::int64_t p = 11; p <= 499; ++p) {
        if (!is_odd_prime(p)) continue;
        const double b = static_cast<double>(newform_coeff(PrimeModulus(p), s));
        CHECK(std::fabs(b) < 2.0 * std::pow(static_cast<double>(p), 1.5));
    }
}

TEST_CASE("interface guards") {
    const QSeries s = QSeries::eta_product(50);
    CHECK_THROWS_AS(newform_coeff(PrimeModulus(7), s), std::invalid_argument);   // p must be > 7
    CHECK_THROWS_AS(newform_coeff(PrimeModulus(53), s), std::invalid_argument);  // series too short
    CHECK_THROWS_AS(QSeries::eta_product(0), std::invalid_argument);
    CHECK(QSeries::eta_product(1).coeff(1) == 1);
}
