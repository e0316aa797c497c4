#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "klooster/etaseries.hpp"
#include "klooster/kloosterman.hpp"

namespace klooster {

// Raised when a computed rounding-error budget is too large to certify an
// integer-identity check at the requested tolerance.
class PrecisionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct MomentValue {
    double value = 0.0;    // compensated long-double accumulation, rounded once
    double err_est = 0.0;  // a-posteriori rounding bound (input roundoff + accumulation)
};

// V_k = sum_{a=1}^{p-1} S(a,1;p)^k and W_k = sum |S(a,1;p)|^k. Values are
// normalized to t_a = S_a / (2 sqrt p) in [-1,1] before powering (and rescaled
// by the same stored divisor afterwards, so the divisor's own rounding cancels
// in the exact-identity residuals); accumulation is compensated in long
// double. err_est models the k-th-power amplification of the half-ulp input
// noise in RMS plus the long-double accumulation floor.
MomentValue signed_moment(const KloostermanTable& table, int k);
MomentValue abs_moment(const KloostermanTable& table, int k);

enum class QuadFormCase { three_five, one_fifteen, inert };

// Trace term entering the fifth-moment identity, decided by p mod 15:
//   {2,8}: p = 3u^2+5v^2, value 2p-12u^2;  {1,4}: p = x^2+15y^2, value 4x^2-2p;
//   {7,11,13,14}: 0. Every representation found must give the same value and
//   |value| < 2p (both checked).
struct QuadFormTrace {
    std::int64_t p = 0;
    QuadFormCase tag = QuadFormCase::inert;
    std::int64_t value = 0;
    int representations = 0;  // count of (u,v) / (x,y) pairs with positive entries
};
QuadFormTrace quad_form_trace(const PrimeModulus& p);  // requires p > 5

// One checked row: value vs a prediction (exact identities) or vs an envelope
// main term plus radius (asymptotic checks). Fields unused by a given check
// stay empty / zero.
struct MomentReport {
    std::string name;          // "V1".."V6", "even_envelope", "odd_envelope", "abs_envelope", "moment"
    std::int64_t p = 0;
    int k = 0;
    std::string kind;          // "signed" or "abs"
    double value = 0.0;
    std::optional<double> predicted;
    std::optional<double> residual;
    double envelope_main = 0.0;
    double envelope_radius = 0.0;
    bool pass = true;
};

// Exact integer identities for V_1..V_6:
//   V1 = 1
//   V2 = p^2 - p - 1
//   V3 = (p|3) p^2 + 2p + 1                ((p|3) = Legendre symbol of p mod 3)
//   V4 = 2p^3 - 3p^2 - 3p - 1
//   V5 = (p|3) 4p^3 + (T+5) p^2 + 4p + 1   (p > 5, T = quad_form_trace)
//   V6 = 5p^4 - 10p^3 - (b+9) p^2 - 5p - 1 (p > 7, b = newform_coeff; needs eta)
// A row is emitted when its side conditions hold and |predicted| < 2^53 (so
// the prediction itself is exactly representable); tolerance 0.1, and a
// PrecisionError is thrown if err_est > 0.25 for an emitted row. Pass
// eta = nullptr to skip V6.
std::vector<MomentReport> verify_exact_identities(const KloostermanTable& table,
                                                  const QSeries* eta);

// sum_a U_k(cos theta_a) for k = 1..kmax against the bound (k+1) sqrt(p) / 2.
struct AngleSumRow {
    std::int64_t p = 0;
    int k = 0;
    double sum = 0.0;
    double bound = 0.0;
    bool pass = true;
};
std::vector<AngleSumRow> angle_power_sums(const AngleTable& angles, int kmax);

// Envelope checks (constants from envelope_constants()):
//   even rows k = 1..kmax_even, odd rows k = 0..kmax_even,
//   absolute rows k = 0..kmax_abs with truncation L = k+12 and the given pmax.
std::vector<MomentReport> asymptotic_envelopes(const KloostermanTable& table, int kmax_even,
                                               int kmax_abs, double pmax_for_abs);

// Positive/negative split of {S(a,1;p)}. pos_sum - |neg_sum| telescopes to
// V1 = 1 and pos_sum + |neg_sum| = W1, so pos_sum = (V1 + W1)/2; the
// Cauchy-Schwarz floor count >= sum^2 / V2 holds per sign class. Scaled
// ratios are reported against the constants 4/(3pi) (sum/p^{3/2}),
// 8/(3pi) (W1/p^{3/2}) and 16/(9 pi^2) (count/p) that the equidistribution
// heuristic predicts in the large-p limit.
struct SignStatistics {
    std::int64_t p = 0;
    std::int64_t pos_count = 0, neg_count = 0, zero_count = 0;
    double pos_sum = 0.0, neg_sum = 0.0;  // neg_sum <= 0
    double v1 = 0.0, w1 = 0.0, v2 = 0.0;
    bool split_ok = false;     // |pos_sum - (v1+w1)/2| <= 1e-6 rel
    bool cauchy_pos = false;   // pos_count >= pos_sum^2 / v2
    bool cauchy_neg = false;
    double pos_sum_ratio = 0.0;    // pos_sum / p^{3/2}
    double abs_sum_ratio = 0.0;    // w1 / p^{3/2}
    double pos_count_ratio = 0.0;  // pos_count / p
    bool pass = false;
};
SignStatistics sign_statistics(const KloostermanTable& table);

}  // namespace klooster
