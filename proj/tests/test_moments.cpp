#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <map>

#include "doctest.h"
#include "klooster/moments.hpp"

using namespace klooster;

namespace {

const MomentReport* find_row(const std::vector<MomentReport>& rows, const std::string& name) {
    for (const auto& r : rows)
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("quadratic-form trace by residue class") {
    // 17 = 3*4 + 5*1 (case {2,8} mod 15): value 2p - 12u^2 = 34 - 48 = -14
    const QuadFormTrace t17 = quad_form_trace(PrimeModulus(17));
    CHECK(t17.tag == QuadFormCase::three_five);
    CHECK(t17.value == -14);
    CHECK(t17.representations >= 1);
    // 19 = 4 + 15 (case {1,4} mod 15): value 4x^2 - 2p = 16 - 38 = -22
    const QuadFormTrace t19 = quad_form_trace(PrimeModulus(19));
    CHECK(t19.tag == QuadFormCase::one_fifteen);
    CHECK(t19.value == -22);
    // 31 = 16 + 15: value 64 - 62 = 2
    CHECK(quad_form_trace(PrimeModulus(31)).value == 2);
    // inert classes {7,11,13,14} mod 15
    for (std::int64_t p : {7, 11, 13, 29, 43}) {
        const QuadFormTrace t = quad_form_trace(PrimeModulus(p));
        CHECK(t.tag == QuadFormCase::inert);
        CHECK(t.value == 0);
    }
    CHECK_THROWS_AS(quad_form_trace(PrimeModulus(5)), std::invalid_argument);
    // |value| < 2p holds wherever a representation exists
    for (std::int64_t p = 7; p <= 1000; ++p) {
        if (!is_odd_prime(p)) continue;
        const QuadFormTrace t = quad_form_trace(PrimeModulus(p));
        CHECK(std::llabs(t.value) < 2 * p);
    }
}

TEST_CASE("first four moment identities at assorted primes") {
    for (std::int64_t pv : {13, 101, 499}) {
        const KloostermanTable table = KloostermanTable::direct(PrimeModulus(pv));
        const auto rows = verify_exact_identities(table, nullptr);
        const double p = static_cast<double>(pv);
        const int e3 = legendre(pv, 3);
        const std::map<std::string, double> expect{
            {"V1", 1.0},
            {"V2", p * p - p - 1},
            {"V3", e3 * p * p + 2 * p + 1},
            {"V4", 2 * p * p * p - 3 * p * p - 3 * p - 1}};
        for (const auto& [name, pred] : expect) {
            const MomentReport* r = find_row(rows, name);
            REQUIRE(r != nullptr);
            CHECK(*r->predicted == pred);
            CHECK(*r->residual < 0.1);
            CHECK(r->pass);
        }
    }
}

TEST_CASE("fifth moments match the trace identity") {
    const std::map<std::int64_t, double> frozen{{11, -4674.0}, {13, 9686.0},   {17, -22184.0},
                                               {19, 21376.0}, {23, -27944.0}, {29, -93234.0},
                                               {31, 126016.0}};
    for (const auto& [pv, v5] : frozen) {
        const KloostermanTable table = KloostermanTable::direct(PrimeModulus(pv));
        const MomentReport* r = find_row(verify_exact_identities(table, nullptr), "V5");
        REQUIRE(r != nullptr);
        CHECK(*r->predicted == v5);
        CHECK(*r->residual < 0.1);
    }
}

TEST_CASE("sixth moment via the newform coefficient") {
    const QSeries eta = QSeries::eta_product(200);
    // p = 11: 5 p^4 - 10 p^3 - (12+9) p^2 - 5p - 1 = 57298
    const KloostermanTable t11 = KloostermanTable::direct(PrimeModulus(11));
    const MomentReport* r = find_row(verify_exact_identities(t11, &eta), "V6");
    REQUIRE(r != nullptr);
    CHECK(*r->predicted == 57298.0);
    CHECK(r->pass);
    // Without the series the row is absent
    CHECK(find_row(verify_exact_identities(t11, nullptr), "V6") == nullptr);
    // p = 7 has no sixth-moment identity row even with a series
    const KloostermanTable t7 = KloostermanTable::direct(PrimeModulus(7));
    CHECK(find_row(verify_exact_identities(t7, &eta), "V6") == nullptr);
}

TEST_CASE("rounding budget stays far below the gate at the size cap") {
    const KloostermanTable table = KloostermanTable::direct(PrimeModulus(4999));
    for (int k = 1; k <= 6; ++k) {
        const MomentValue mv = signed_moment(table, k);
        CHECK(mv.err_est > 0.0);
        CHECK(mv.err_est < 0.25);
    }
    CHECK_NOTHROW(verify_exact_identities(table, nullptr));
    CHECK(signed_moment(table, 0).value == doctest::Approx(4998.0));
}

TEST_CASE("angle power sums against the spectral bound") {
    const KloostermanTable t7 = KloostermanTable::direct(PrimeModulus(7));
    const auto rows7 = angle_power_sums(AngleTable(t7), 3);
    REQUIRE(rows7.size() == 3);
    CHECK(std::fabs(rows7[2].sum) == doctest::Approx(2.6996).epsilon(1e-3));
    for (const auto& r : rows7) CHECK(r.pass);

    const KloostermanTable t101 = KloostermanTable::direct(PrimeModulus(101));
    for (const auto& r : angle_power_sums(AngleTable(t101), 30)) {
        CHECK(r.bound == doctest::Approx((r.k + 1) * std::sqrt(101.0) / 2.0));
        CHECK(r.pass);
    }
}

TEST_CASE("moment envelopes hold with real margins") {
    const KloostermanTable table = KloostermanTable::direct(PrimeModulus(101));
    const auto rows = asymptotic_envelopes(table, 4, 3, 5000.0);
    // families: even k=1..4, odd k=0..4, abs k=0..3
    REQUIRE(rows.size() == 13);
    for (const auto& r : rows) {
        CHECK(r.pass);
        CHECK(*r.residual <= r.envelope_radius);
    }
    // V2 vs main term p(p-1): residual is exactly 1
    const MomentReport* even1 = nullptr;
    for (const auto& r : rows)
        if (r.name == "even_envelope" && r.k == 2) even1 = &r;
    REQUIRE(even1 != nullptr);
    CHECK(even1->envelope_main == doctest::Approx(101.0 * 100.0));
    CHECK(*even1->residual == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sign statistics: split identity and count floors") {
    for (std::int64_t pv : {101, 499, 1009}) {
        const SignStatistics s = sign_statistics(KloostermanTable::direct(PrimeModulus(pv)));
        CHECK(s.pass);
        CHECK(s.zero_count == 0);
        CHECK(s.pos_count + s.neg_count == pv - 1);
        CHECK(s.pos_sum == doctest::Approx((s.v1 + s.w1) / 2).epsilon(1e-9));
        CHECK(s.pos_sum + s.neg_sum == doctest::Approx(1.0).epsilon(1e-6));  // V1 = 1
        CHECK(static_cast<double>(s.pos_count) >= s.pos_sum * s.pos_sum / s.v2 - 1e-6);
        CHECK(static_cast<double>(s.neg_count) >= s.neg_sum * s.neg_sum / s.v2 - 1e-6);
    }
}
