#include "klooster/etaseries.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace klooster {

namespace {

// In-place multiply the truncated series by (1 - q^m). Descending index order
// so each c[i-m] read is the pre-update value.
void apply_factor(std::vector<std::int64_t>& c, std::int64_t m) {
    const std::int64_t n = static_cast<std::int64_t>(c.size()) - 1;
    for (std::int64_t i = n; i >= m; --i) {
        if (__builtin_sub_overflow(c[static_cast<std::size_t>(i)],
                                   c[static_cast<std::size_t>(i - m)],
                                   &c[static_cast<std::size_t>(i)]))
            throw std::overflow_error("eta_product: int64 overflow at degree " + std::to_string(i));
    }
}

}  // namespace

QSeries QSeries::eta_product(std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("eta_product: need n_max >= 1");
    std::vector<std::int64_t> c(static_cast<std::size_t>(n_max) + 1, 0);
    c[1] = 1;  // the leading factor q
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t d : {1, 2, 3, 6}) {
            const std::int64_t m = d * n;
            if (m > n_max) break;  // d ascending, so later multiples are larger too
            apply_factor(c, m);    // squared factor: apply twice
            apply_factor(c, m);
        }
    }
    return QSeries(std::move(c));
}

std::int64_t QSeries::coeff(std::int64_t n) const {
    if (n < 1 || n > length())
        throw std::out_of_range("QSeries::coeff: index " + std::to_string(n) +
                                " outside [1," + std::to_string(length()) + "]");
    return c_[static_cast<std::size_t>(n)];
}

std::int64_t newform_coeff(const PrimeModulus& p, const QSeries& series) {
    const std::int64_t pv = p.value();
    if (pv <= 7) throw std::invalid_argument("newform_coeff: need p > 7");
    if (pv > series.length())
        throw std::invalid_argument("newform_coeff: series shorter than p");
    const std::int64_t b = series.coeff(pv);
    const double bound = 2.0 * std::pow(static_cast<double>(pv), 1.5);
    if (!(std::fabs(static_cast<double>(b)) < bound))
        throw std::runtime_error("newform_coeff: coefficient bound 2 p^{3/2} violated at p = " +
                                 std::to_string(pv));
    return b;
}

}  // namespace klooster
