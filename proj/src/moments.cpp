#include "klooster/moments.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "klooster/chebyshev.hpp"
#include "klooster/kahan.hpp"

namespace klooster {

namespace {

MomentValue moment_impl(const KloostermanTable& table, int k, bool absolute) {
    if (k < 0 || k > 16) throw std::invalid_argument("moment: k out of range [0,16]");
    const double c = 2.0 * std::sqrt(static_cast<double>(table.prime()));
    KahanSum<long double> acc;
    KahanSum<double> rms;       // sum t^{2(k-1)}, drives the input-noise term
    KahanSum<double> abs_pow;   // sum |t|^k, drives the accumulation term
    for (const double v : table.values()) {
        const double t = v / c;  // |t| <= 1 by the Weil bound
        long double pw = 1.0L;
        for (int i = 0; i < k; ++i) pw *= static_cast<long double>(t);
        acc.add(absolute ? std::fabs(pw) : pw);
        if (k >= 1) {
            double e = 1.0;
            for (int i = 0; i < k - 1; ++i) e *= t;
            rms.add(e * e);
            abs_pow.add(std::fabs(e * t));
        }
    }
    // Rescale by the same stored divisor so its own rounding cancels exactly
    // against the normalization step.
    long double scale = 1.0L;
    for (int i = 0; i < k; ++i) scale *= static_cast<long double>(c);
    MomentValue mv;
    mv.value = static_cast<double>(acc.value() * scale);
    if (k >= 1) {
        const double u = DBL_EPSILON / 2.0;      // half-ulp input noise per sample
        const double u_ld = LDBL_EPSILON / 2.0;  // long double accumulation floor
        mv.err_est = static_cast<double>(
            (2.0L * k * u * std::sqrt(rms.value()) + 2.0L * u_ld * abs_pow.value()) * scale);
    }
    return mv;
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt64: negative");
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (s > 0 && s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

constexpr double kExactCap = 9007199254740992.0;  // 2^53: largest exact double integer

}  // namespace

MomentValue signed_moment(const KloostermanTable& table, int k) {
    return moment_impl(table, k, false);
}

MomentValue abs_moment(const KloostermanTable& table, int k) {
    return moment_impl(table, k, true);
}

QuadFormTrace quad_form_trace(const PrimeModulus& p) {
    const std::int64_t pv = p.value();
    if (pv <= 5) throw std::invalid_argument("quad_form_trace: need p > 5");
    QuadFormTrace t;
    t.p = pv;
    const std::int64_t r = pv % 15;
    std::int64_t candidate = 0;
    bool have = false;
    auto record = [&](std::int64_t v) {
        if (have && v != candidate)
            throw std::runtime_error("quad_form_trace: inconsistent representations at p = " +
                                     std::to_string(pv));
        candidate = v;
        have = true;
        ++t.representations;
    };
    if (r == 2 || r == 8) {
        t.tag = QuadFormCase::three_five;
        for (std::int64_t u = 1; 3 * u * u < pv; ++u) {
            const std::int64_t rem = pv - 3 * u * u;
            if (rem % 5 != 0) continue;
            const std::int64_t v = isqrt64(rem / 5);
            if (v >= 1 && 5 * v * v == rem) record(2 * pv - 12 * u * u);
        }
    } else if (r == 1 || r == 4) {
        t.tag = QuadFormCase::one_fifteen;
        for (std::int64_t y = 1; 15 * y * y < pv; ++y) {
            const std::int64_t rem = pv - 15 * y * y;
            const std::int64_t x = isqrt64(rem);
            if (x >= 1 && x * x == rem) record(4 * x * x - 2 * pv);
        }
    } else {
        // Remaining residues coprime to 15: {7, 11, 13, 14}.
        t.tag = QuadFormCase::inert;
        t.value = 0;
        return t;
    }
    if (!have)
        throw std::runtime_error("quad_form_trace: no representation found at p = " +
                                 std::to_string(pv));
    if (!(candidate < 2 * pv && candidate > -2 * pv))
        throw std::runtime_error("quad_form_trace: |value| >= 2p at p = " + std::to_string(pv));
    t.value = candidate;
    return t;
}

std::vector<MomentReport> verify_exact_identities(const KloostermanTable& table,
                                                  const QSeries* eta) {
    const std::int64_t p = table.prime();
    const __int128 P = p;
    const int e3 = legendre(p, 3);
    std::vector<MomentReport> out;

    auto emit = [&](const char* name, int k, __int128 predicted) {
        const __int128 cap = static_cast<__int128>(1) << 53;
        if (predicted >= cap || predicted <= -cap) return;  // not exactly representable
        const MomentValue mv = signed_moment(table, k);
        if (mv.err_est > 0.25)
            throw PrecisionError(std::string("moment ") + name + " at p = " + std::to_string(p) +
                                 ": rounding budget " + std::to_string(mv.err_est) +
                                 " exceeds 0.25");
        MomentReport r;
        r.name = name;
        r.p = p;
        r.k = k;
        r.kind = "signed";
        r.value = mv.value;
        r.predicted = static_cast<double>(static_cast<long double>(predicted));
        r.residual = std::fabs(mv.value - *r.predicted);
        r.pass = *r.residual < 0.1;
        out.push_back(std::move(r));
    };

    emit("V1", 1, 1);
    emit("V2", 2, P * P - P - 1);
    emit("V3", 3, e3 * P * P + 2 * P + 1);
    emit("V4", 4, 2 * P * P * P - 3 * P * P - 3 * P - 1);
    if (p > 5) {
        const QuadFormTrace t = quad_form_trace(PrimeModulus(p));
        emit("V5", 5, e3 * 4 * P * P * P + (t.value + 5) * P * P + 4 * P + 1);
    }
    if (p > 7 && eta != nullptr && eta->length() >= p) {
        const std::int64_t b = newform_coeff(PrimeModulus(p), *eta);
        emit("V6", 6, 5 * P * P * P * P - 10 * P * P * P - (static_cast<__int128>(b) + 9) * P * P - 5 * P - 1);
    }
    return out;
}

std::vector<AngleSumRow> angle_power_sums(const AngleTable& angles, int kmax) {
    if (kmax < 1 || kmax > 64) throw std::invalid_argument("angle_power_sums: kmax out of [1,64]");
    const std::int64_t p = angles.prime();
    const double sq = std::sqrt(static_cast<double>(p));
    std::vector<KahanSum<long double>> sums(static_cast<std::size_t>(kmax) + 1);
    for (const double th : angles.thetas()) {
        const double x = std::cos(th);
        double um = 1.0, u = 2.0 * x;
        sums[1].add(static_cast<long double>(u));
        for (int k = 2; k <= kmax; ++k) {
            const double next = 2.0 * x * u - um;
            um = u;
            u = next;
            sums[static_cast<std::size_t>(k)].add(static_cast<long double>(u));
        }
    }
    std::vector<AngleSumRow> rows;
    rows.reserve(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        AngleSumRow r;
        r.p = p;
        r.k = k;
        r.sum = static_cast<double>(sums[static_cast<std::size_t>(k)].value());
        r.bound = (k + 1) * sq / 2.0;
        r.pass = std::fabs(r.sum) <= r.bound;
        rows.push_back(r);
    }
    return rows;
}

std::vector<MomentReport> asymptotic_envelopes(const KloostermanTable& table, int kmax_even,
                                               int kmax_abs, double pmax_for_abs) {
    if (kmax_even < 1 || kmax_even > 4)
        throw std::invalid_argument("asymptotic_envelopes: kmax_even out of [1,4]");
    if (kmax_abs < 0 || kmax_abs > 3)
        throw std::invalid_argument("asymptotic_envelopes: kmax_abs out of [0,3]");
    const std::int64_t p = table.prime();
    if (static_cast<double>(p) > pmax_for_abs)
        throw std::invalid_argument("asymptotic_envelopes: p exceeds pmax_for_abs");
    const long double pl = static_cast<long double>(p);
    std::vector<MomentReport> out;

    auto push = [&](const char* name, int order, const char* kind, double value,
                    long double main, long double radius) {
        MomentReport r;
        r.name = name;
        r.p = p;
        r.k = order;
        r.kind = kind;
        r.value = value;
        r.envelope_main = static_cast<double>(main);
        r.envelope_radius = static_cast<double>(radius);
        r.residual = std::fabs(value - r.envelope_main);
        r.pass = *r.residual <= r.envelope_radius;
        out.push_back(std::move(r));
    };

    for (int k = 0; k <= std::max(kmax_even, kmax_abs); ++k) {
        const EnvelopeConstants ec = envelope_constants(k, k + 12, pmax_for_abs);
        if (k >= 1 && k <= kmax_even)
            push("even_envelope", 2 * k, "signed", signed_moment(table, 2 * k).value,
                 static_cast<long double>(ec.C) * std::pow(pl, k) * (pl - 1),
                 static_cast<long double>(ec.D) * std::pow(pl, k + 0.5L));
        if (k <= kmax_even)
            push("odd_envelope", 2 * k + 1, "signed", signed_moment(table, 2 * k + 1).value, 0.0L,
                 static_cast<long double>(ec.E) * std::pow(pl, k + 1));
        if (k <= kmax_abs)
            push("abs_envelope", 2 * k + 1, "abs", abs_moment(table, 2 * k + 1).value,
                 std::pow(2.0L, 2 * k + 1) * static_cast<long double>(abs_power_a0(k)) *
                     std::pow(pl, k + 0.5L) * (pl - 1),
                 static_cast<long double>(ec.F) * std::pow(pl, k + 1));
    }
    return out;
}

SignStatistics sign_statistics(const KloostermanTable& table) {
    SignStatistics s;
    s.p = table.prime();
    KahanSum<double> pos, neg;
    for (const double v : table.values()) {
        if (std::fabs(v) < 1e-9) {
            ++s.zero_count;
        } else if (v > 0.0) {
            ++s.pos_count;
            pos.add(v);
        } else {
            ++s.neg_count;
            neg.add(v);
        }
    }
    s.pos_sum = pos.value();
    s.neg_sum = neg.value();
    s.v1 = signed_moment(table, 1).value;
    s.w1 = abs_moment(table, 1).value;
    s.v2 = signed_moment(table, 2).value;

    const double half = (s.v1 + s.w1) / 2.0;
    s.split_ok = std::fabs(s.pos_sum - half) <= 1e-6 * std::max(1.0, std::fabs(half));
    s.cauchy_pos = static_cast<double>(s.pos_count) + 1e-6 >= s.pos_sum * s.pos_sum / s.v2;
    s.cauchy_neg = static_cast<double>(s.neg_count) + 1e-6 >= s.neg_sum * s.neg_sum / s.v2;

    const double p15 = std::pow(static_cast<double>(s.p), 1.5);
    s.pos_sum_ratio = s.pos_sum / p15;
    s.abs_sum_ratio = s.w1 / p15;
    s.pos_count_ratio = static_cast<double>(s.pos_count) / static_cast<double>(s.p);
    s.pass = s.split_ok && s.cauchy_pos && s.cauchy_neg && s.zero_count == 0;
    return s;
}

}  // namespace klooster
