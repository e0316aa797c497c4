#pragma once

#include <cstdint>
#include <vector>

#include "klooster/modarith.hpp"

namespace klooster {

// Truncated integer q-expansion with exact int64 coefficients.
class QSeries {
  public:
    // Coefficients 1..N of q prod_{n>=1} [(1-q^n)(1-q^{2n})(1-q^{3n})(1-q^{6n})]^2,
    // the weight-4 level-6 newform given by (eta(z)eta(2z)eta(3z)eta(6z))^2.
    // Built by repeated in-place multiplication by each sparse factor
    // (1 - q^m)^2 = 1 - 2q^m + q^{2m}; every intermediate stays an exact
    // integer and every arithmetic step is overflow-checked.
    static QSeries eta_product(std::int64_t n_max);

    std::int64_t length() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    std::int64_t coeff(std::int64_t n) const;  // 1 <= n <= length()

    const std::vector<std::int64_t>& raw() const { return c_; }  // c_[0] = 0

  private:
    explicit QSeries(std::vector<std::int64_t> c) : c_(std::move(c)) {}
    std::vector<std::int64_t> c_;
};

// p-th coefficient of the series above, for odd prime p with 7 < p <= length().
// Checked against the Ramanujan-Petersson bound |coeff| < 2 p^{3/2} before
// returning (a violation means the series was built wrong).
std::int64_t newform_coeff(const PrimeModulus& p, const QSeries& series);

}  // namespace klooster
