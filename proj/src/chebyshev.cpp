#include "klooster/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace klooster {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// (2/pi) int_0^{pi/2} cos(n t) dt for odd n: sin(n pi/2)/n scaled, i.e.
// sign(n) alternates with |n| mod 4. Defined for every odd n (even n never
// reaches it: the integrand splits into odd-frequency cosines only).
long double half_cosine_integral(long long n) {
    if (n % 2 == 0) throw std::logic_error("half_cosine_integral: even frequency");
    const long long an = n < 0 ? -n : n;
    const long double sign = (an % 4 == 1) ? 1.0L : -1.0L;
    return sign / static_cast<long double>(an);
}

void check_k_range(int k, int kmax, const char* where) {
    if (k < 0 || k > kmax)
        throw std::invalid_argument(std::string(where) + ": k out of range [0," +
                                    std::to_string(kmax) + "]: " + std::to_string(k));
}

long double factorial_ld(long long n) {
    long double f = 1.0L;
    for (long long i = 2; i <= n; ++i) f *= static_cast<long double>(i);
    return f;
}

// Evaluate U_0..U_n at x in one sweep.
void u_sweep(int n, double x, std::vector<double>& u) {
    u.resize(static_cast<std::size_t>(n) + 1);
    u[0] = 1.0;
    if (n >= 1) u[1] = 2.0 * x;
    for (int m = 2; m <= n; ++m) u[static_cast<std::size_t>(m)] = 2.0 * x * u[static_cast<std::size_t>(m - 1)] - u[static_cast<std::size_t>(m - 2)];
}

}  // namespace

double cheb_u(int k, double x) {
    if (k < 0) throw std::invalid_argument("cheb_u: negative degree");
    double um = 1.0, u = 2.0 * x;
    if (k == 0) return um;
    for (int m = 2; m <= k; ++m) {
        const double next = 2.0 * x * u - um;
        um = u;
        u = next;
    }
    return u;
}

std::int64_t factorial_exact(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial_exact: n out of [0,20]");
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t binomial_exact(int n, int r) {
    if (r < 0 || n < 0 || r > n) throw std::invalid_argument("binomial_exact: bad arguments");
    if (n > 20) throw std::invalid_argument("binomial_exact: n out of [0,20]");
    return factorial_exact(n) / (factorial_exact(r) * factorial_exact(n - r));
}

double PowerExpansion::reconstruct(double x) const {
    std::vector<double> u;
    u_sweep(2 * k + 1, x, u);
    double s = 0.0;
    for (int l = 0; l <= k; ++l)
        s += coeffs[static_cast<std::size_t>(l)] * u[static_cast<std::size_t>(2 * l + (odd ? 1 : 0))];
    return s;
}

PowerExpansion even_power_coeffs(int k) {
    check_k_range(k, 8, "even_power_coeffs");
    PowerExpansion e;
    e.k = k;
    e.odd = false;
    e.coeffs.resize(static_cast<std::size_t>(k) + 1);
    const long double pre =
        static_cast<long double>(factorial_exact(2 * k)) / std::pow(4.0L, k);
    for (int l = 0; l <= k; ++l) {
        const long double denom = factorial_ld(k - l) * factorial_ld(k + l + 1);
        e.coeffs[static_cast<std::size_t>(l)] =
            static_cast<double>(pre * static_cast<long double>(2 * l + 1) / denom);
    }
    return e;
}

PowerExpansion odd_power_coeffs(int k) {
    check_k_range(k, 8, "odd_power_coeffs");
    PowerExpansion e;
    e.k = k;
    e.odd = true;
    e.coeffs.resize(static_cast<std::size_t>(k) + 1);
    const long double pre =
        static_cast<long double>(factorial_exact(2 * k + 1)) / std::pow(4.0L, k);
    for (int l = 0; l <= k; ++l) {
        const long double denom = factorial_ld(k - l) * factorial_ld(k + l + 2);
        e.coeffs[static_cast<std::size_t>(l)] =
            static_cast<double>(pre * static_cast<long double>(l + 1) / denom);
    }
    return e;
}

PowerExpansion odd_power_coeffs_quarter_scaled(int k) {
    PowerExpansion e = odd_power_coeffs(k);
    for (double& c : e.coeffs) c *= 0.25;
    return e;
}

double abs_power_a0(int k) {
    check_k_range(k, 8, "abs_power_a0");
    const long double num = std::pow(4.0L, k + 1);
    const long double den = kPi * static_cast<long double>(2 * k + 1) *
                            static_cast<long double>(2 * k + 3) *
                            static_cast<long double>(binomial_exact(2 * k, k));
    return static_cast<double>(num / den);
}

double abs_coeff_closed_form(int k, int ell) {
    check_k_range(k, 8, "abs_coeff_closed_form");
    if (ell < 0 || ell % 2 != 0)
        throw std::invalid_argument("abs_coeff_closed_form: index must be even and >= 0");
    // (cos t)^{2k+1} = 4^{-k} sum_{j=0..k} C(2k+1, k-j) cos((2j+1)t), so the
    // defining integral (4/pi) int sin t cos^{2k+1} t sin((ell+1)t) dt reduces
    // to a finite signed sum of half_cosine_integral values via
    // 2 sin t sin((ell+1)t) = cos(ell t) - cos((ell+2)t) and the product-to-sum
    // identity. Every term is a rational number; the sum is exact up to
    // rounding in long double.
    long double acc = 0.0L;
    for (int j = 0; j <= k; ++j) {
        const long long m = 2 * j + 1;
        const long double bin = static_cast<long double>(binomial_exact(2 * k + 1, k - j));
        const long double quad = half_cosine_integral(m + ell) + half_cosine_integral(m - ell) -
                                 half_cosine_integral(m + ell + 2) -
                                 half_cosine_integral(m - ell - 2);
        acc += bin * 0.5L * quad;
    }
    return static_cast<double>(acc / std::pow(4.0L, k) * 2.0L / kPi);
}

double abs_coeff_factorial_form(int k, int ell) {
    check_k_range(k, 8, "abs_coeff_factorial_form");
    if (ell < 2 * k + 2 || ell % 2 != 0)
        throw std::invalid_argument("abs_coeff_factorial_form: need even ell >= 2k+2");
    const long double f = factorial_ld(2 * k + 1);
    const long double s1 = ((ell / 2 + k + 1) % 2 == 0) ? 1.0L : -1.0L;
    const long double t1 =
        s1 * f / (static_cast<long double>(2 * k + 1 + ell) * factorial_ld(ell - 2 * k - 1));
    const long double t2 =
        -s1 * f / (static_cast<long double>(2 * k + 3 + ell) * factorial_ld(ell - 2 * k + 1));
    return static_cast<double>((t1 - t2) * 2.0L / kPi);
}

double AbsExpansion::evaluate(double x) const {
    std::vector<double> u;
    u_sweep(2 * L, x, u);
    double s = a0;
    for (int l = 1; l <= L; ++l) s += c[static_cast<std::size_t>(l)] * u[static_cast<std::size_t>(2 * l)];
    return s;
}

AbsExpansion abs_power_coeffs(int k, int L) {
    check_k_range(k, 8, "abs_power_coeffs");
    if (L < k + 1)
        throw std::invalid_argument("abs_power_coeffs: truncation L must be >= k+1");
    AbsExpansion e;
    e.k = k;
    e.L = L;
    e.a0 = abs_power_a0(k);
    e.c.assign(static_cast<std::size_t>(L) + 1, 0.0);
    for (int l = 1; l <= L; ++l) e.c[static_cast<std::size_t>(l)] = abs_coeff_closed_form(k, 2 * l);

    // Remainder sup on the Chebyshev-extrema grid cos(pi i / N). The remainder
    // is even with extrema at the kink x = 0 and near the endpoints; N = 16384
    // resolves oscillation frequency 2L+2 with thousands of points per period.
    const int N = 16384;
    double sup = std::fabs(e.evaluate(0.0));  // |x|^{2k+1} = 0 at the kink
    for (int i = 0; i <= N; ++i) {
        const double x = std::cos(kPi * static_cast<long double>(i) / N);
        const double r = std::pow(std::fabs(x), 2 * k + 1) - e.evaluate(x);
        sup = std::max(sup, std::fabs(r));
    }
    e.sup_remainder = sup;
    e.tail_bound = sup * 1.05;  // headroom for off-grid points
    return e;
}

EnvelopeConstants envelope_constants(int k, int L, double pmax) {
    check_k_range(k, 8, "envelope_constants");
    if (L < k + 1) throw std::invalid_argument("envelope_constants: L must be >= k+1");
    if (!(pmax >= 5.0)) throw std::invalid_argument("envelope_constants: pmax must be >= 5");
    EnvelopeConstants ec;
    ec.k = k;
    ec.L = L;
    ec.pmax = pmax;
    ec.C = binomial_exact(2 * k, k) / (k + 1);

    const double scale_even = std::pow(4.0, k);        // (2 sqrt p)^{2k} = 4^k p^k
    const double scale_odd = 2.0 * std::pow(4.0, k);   // (2 sqrt p)^{2k+1} = 2 4^k p^{k+1/2}
    {
        const PowerExpansion ev = even_power_coeffs(k);
        long double d = 0.0L;
        for (int l = 1; l <= k; ++l)
            d += static_cast<long double>(ev.coeffs[static_cast<std::size_t>(l)]) * (2 * l + 1) / 2.0L;
        ec.D = static_cast<double>(scale_even * d);
    }
    {
        const PowerExpansion od = odd_power_coeffs(k);
        long double s = 0.0L;
        for (int l = 0; l <= k; ++l)
            s += static_cast<long double>(od.coeffs[static_cast<std::size_t>(l)]) * (l + 1);
        ec.E = static_cast<double>(scale_odd * s);       // equals 4^k exactly
        ec.E_quarter = ec.E / 4.0;
    }

    const AbsExpansion ae = abs_power_coeffs(k, L);
    long double head = 0.0L;
    for (int l = 1; l <= L; ++l)
        head += std::fabs(static_cast<long double>(ae.c[static_cast<std::size_t>(l)])) * (2 * l + 1) / 2.0L;
    ec.katz_part = static_cast<double>(scale_odd * head);

    if (k == 0) {
        // sum |c_l|(2l+1)/2 diverges (terms ~ 1/(2l)); bound the dropped tail's
        // angle sum crudely by (p-1) sup|R| <= sqrt(pmax) sqrt(p) sup|R|.
        ec.tail_majorant = ae.tail_bound * std::sqrt(pmax);
    } else {
        // Terms |c_l|(2l+1)/2 ~ const l^{-(2k+1)}; sum to exhaustion and cap
        // the rest by the integral comparison tau_Lam * Lam / (2k), padded 1.5x.
        const int Lam = 20000;
        long double tail = 0.0L;
        long double last = 0.0L;
        for (int l = L + 1; l <= Lam; ++l) {
            last = std::fabs(static_cast<long double>(abs_coeff_closed_form(k, 2 * l))) *
                   (2 * l + 1) / 2.0L;
            tail += last;
        }
        tail += last * static_cast<long double>(Lam) / (2 * k) * 1.5L;
        ec.tail_majorant = static_cast<double>(tail);
    }
    ec.F = ec.katz_part + scale_odd * ec.tail_majorant;
    return ec;
}

}  // namespace klooster
