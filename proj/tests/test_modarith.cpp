#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <random>
#include <set>

#include "doctest.h"
#include "klooster/kahan.hpp"
#include "klooster/modarith.hpp"

using namespace klooster;

TEST_CASE("odd-prime recognition") {
    CHECK(is_odd_prime(5));
    CHECK(is_odd_prime(7));
    CHECK(is_odd_prime(9973));
    CHECK(is_odd_prime(10007));
    CHECK(is_odd_prime(4999));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_FALSE(is_odd_prime(2));  // even
    CHECK_FALSE(is_odd_prime(9));
    CHECK_FALSE(is_odd_prime(1000001));  // 101 * 9901
    CHECK_FALSE(is_odd_prime(3215031751));  // strong pseudoprime to bases 2,3,5,7
    CHECK(is_odd_prime(2147483647));        // 2^31 - 1
}

TEST_CASE("PrimeModulus validates") {
    CHECK(PrimeModulus(5).value() == 5);
    CHECK(PrimeModulus(9973).value() == 9973);
    CHECK_THROWS_AS(PrimeModulus(3), std::invalid_argument);  // below the supported range
    CHECK_THROWS_AS(PrimeModulus(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(91), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(-7), std::invalid_argument);
}

TEST_CASE("mul_mod and pow_mod against wide arithmetic") {
    std::mt19937_64 rng(20260821);
    const std::int64_t m = 4611686018427387847;  // prime near 2^62
    std::uniform_int_distribution<std::int64_t> dist(0, m - 1);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t a = dist(rng), b = dist(rng);
        const auto ref = static_cast<std::int64_t>(
            static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
            static_cast<unsigned __int128>(m));
        CHECK(mul_mod(a, b, m) == ref);
    }
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(7, 0, 13) == 1);
    // Fermat: a^(p-1) = 1 mod p
    for (std::int64_t a : {2, 3, 9972, 5000})
        CHECK(pow_mod(a, 9972, 9973) == 1);
}

TEST_CASE("InverseTable inverts every unit") {
    const PrimeModulus p(997);
    const InverseTable inv(p);
    CHECK(inv.at(1) == 1);
    CHECK(inv.at(996) == 996);  // -1 is self-inverse
    for (std::int64_t a = 1; a <= 996; ++a) CHECK(mul_mod(a, inv.at(a), 997) == 1);
}

TEST_CASE("legendre symbol") {
    // Quadratic residues mod 13: {1,3,4,9,10,12}
    const std::set<std::int64_t> qr{1, 3, 4, 9, 10, 12};
    for (std::int64_t a = 1; a <= 12; ++a) CHECK(legendre(a, 13) == (qr.count(a) ? 1 : -1));
    CHECK(legendre(0, 13) == 0);
    CHECK(legendre(26, 13) == 0);
    // Modulus 3 is allowed (used by the V3/V5 identities): (p|3) = +1 iff p = 1 mod 3
    CHECK(legendre(7, 3) == 1);
    CHECK(legendre(11, 3) == -1);
    CHECK(legendre(13, 3) == 1);
    // Euler criterion cross-check at p = 31
    for (std::int64_t a = 1; a <= 30; ++a) {
        const std::int64_t e = pow_mod(a, 15, 31);
        CHECK(legendre(a, 31) == (e == 1 ? 1 : -1));
    }
}

TEST_CASE("primitive root has full order") {
    for (std::int64_t pv : {5, 7, 41, 997, 9973}) {
        const PrimeModulus p(pv);
        const std::int64_t g = primitive_root(p);
        // g^((p-1)/q) != 1 for every prime q | p-1
        std::int64_t m = pv - 1;
        for (std::int64_t q = 2; q * q <= m; ++q) {
            if (m % q != 0) continue;
            CHECK(pow_mod(g, (pv - 1) / q, pv) != 1);
            while (m % q == 0) m /= q;
        }
        if (m > 1) CHECK(pow_mod(g, (pv - 1) / m, pv) != 1);
        CHECK(pow_mod(g, pv - 1, pv) == 1);
    }
}

TEST_CASE("unit roots: exact conjugate mirroring and accuracy") {
    CHECK(std::abs(unit_root(0, 8) - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(unit_root(2, 8) - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(unit_root(4, 8) - std::complex<double>(-1, 0)) < 1e-15);

    const UnitRootTable roots(101);
    for (std::int64_t t = 1; t <= 100; ++t) {
        // Bitwise mirror symmetry makes x <-> p-x pairing cancel exactly.
        CHECK(roots.at(101 - t) == std::conj(roots.at(t)));
        CHECK(std::abs(std::abs(roots.at(t)) - 1.0) < 1e-15);
        CHECK(std::abs(roots.at(t) - unit_root(t, 101)) < 1e-15);
    }
    // Group law spot check: e(a/n) e(b/n) = e((a+b)/n)
    CHECK(std::abs(roots.at(40) * roots.at(70) - roots.at(9)) < 1e-14);
}

TEST_CASE("compensated summation survives cancellation-heavy input") {
    KahanSum<double> s;
    s.add(1.0);
    for (int i = 0; i < 10000; ++i) s.add(1e-16);
    // Naive summation would stay exactly at 1.0; Kahan keeps the 1e-12.
    CHECK(s.value() == doctest::Approx(1.0 + 1e-12).epsilon(1e-6));

    KahanSum<double> alt;
    for (int i = 0; i < 1000000; ++i) alt.add(i % 2 == 0 ? 0.1 : -0.1);
    CHECK(std::fabs(alt.value()) < 1e-12);
}
