#include "klooster/kloosterman.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "klooster/kahan.hpp"

namespace klooster {

namespace {

// One row of the direct table: S(a,1;p) with fixed ascending-x reduction
// order and Kahan compensation on both components. idx walks a*x mod p
// incrementally; inv[x] supplies the x-bar term.
std::complex<double> direct_row(std::int64_t a, std::int64_t p,
                                const std::vector<std::int64_t>& inv,
                                const UnitRootTable& roots) {
    KahanSum<double> re;
    KahanSum<double> im;
    std::int64_t axm = 0;
    for (std::int64_t x = 1; x < p; ++x) {
        axm += a;
        if (axm >= p) axm -= p;
        std::int64_t idx = axm + inv[static_cast<std::size_t>(x)];
        if (idx >= p) idx -= p;
        const std::complex<double>& r = roots.at(idx);
        re.add(r.real());
        im.add(r.imag());
    }
    return {re.value(), im.value()};
}

// Iterative radix-2 FFT, size a power of two. sign = +1 for the forward
// kernel e^{+2 pi i nk/N} used here, -1 for the inverse (unscaled).
void fft_pow2(std::vector<std::complex<double>>& v, int sign) {
    const std::size_t n = v.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const long double ang = static_cast<long double>(sign) * 2.0L *
                                std::numbers::pi_v<long double> /
                                static_cast<long double>(len);
        const std::complex<double> wlen(static_cast<double>(std::cos(ang)),
                                        static_cast<double>(std::sin(ang)));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = v[i + j];
                const std::complex<double> t = v[i + j + len / 2] * w;
                v[i + j] = u + t;
                v[i + j + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
}

// Chirp factor w_m = exp(pi*i*m^2/N); m^2 is reduced mod 2N exactly, since
// exp(pi*i*x/N) has period 2N in x.
std::complex<double> chirp(std::int64_t m, std::int64_t n) {
    const std::int64_t m2 = static_cast<std::int64_t>(
        (static_cast<unsigned __int128>(m) * static_cast<unsigned __int128>(m)) %
        static_cast<unsigned __int128>(2 * n));
    const long double ang = std::numbers::pi_v<long double> *
                            static_cast<long double>(m2) / static_cast<long double>(n);
    return {static_cast<double>(std::cos(ang)), static_cast<double>(std::sin(ang))};
}

// Forward DFT X_k = sum_n f_n e^{+2 pi i nk/N} for arbitrary N via Bluestein:
// nk = (n^2 + k^2 - (k-n)^2)/2 turns the DFT into a linear convolution.
std::vector<std::complex<double>> bluestein_dft(const std::vector<std::complex<double>>& f) {
    const std::int64_t n = static_cast<std::int64_t>(f.size());
    std::size_t m = 1;
    while (m < static_cast<std::size_t>(2 * n - 1)) m <<= 1;
    std::vector<std::complex<double>> a(m, {0.0, 0.0});
    std::vector<std::complex<double>> b(m, {0.0, 0.0});
    for (std::int64_t i = 0; i < n; ++i) {
        const std::complex<double> w = chirp(i, n);
        a[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * w;
        const std::complex<double> cw = std::conj(w);
        b[static_cast<std::size_t>(i)] = cw;
        if (i > 0) b[m - static_cast<std::size_t>(i)] = cw;
    }
    fft_pow2(a, +1);
    fft_pow2(b, +1);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, -1);
    const double scale = 1.0 / static_cast<double>(m);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        out[static_cast<std::size_t>(k)] =
            chirp(k, n) * a[static_cast<std::size_t>(k)] * scale;
    }
    return out;
}

}  // namespace

double kloosterman_sum(std::int64_t a, std::int64_t b, const PrimeModulus& p) {
    const std::int64_t q = p.value();
    a %= q;
    if (a < 0) a += q;
    b %= q;
    if (b < 0) b += q;
    if (a == 0 || b == 0) {
        throw std::invalid_argument("kloosterman_sum: a and b must be units mod p");
    }
    const InverseTable inv(p);
    const UnitRootTable roots(q);
    KahanSum<double> re;
    KahanSum<double> im;
    for (std::int64_t x = 1; x < q; ++x) {
        const std::int64_t idx =
            static_cast<std::int64_t>((a * x + b * inv.at(x)) % q);
        const std::complex<double>& r = roots.at(idx);
        re.add(r.real());
        im.add(r.imag());
    }
    const double tol = 1e-9 * std::sqrt(static_cast<double>(q));
    if (std::abs(im.value()) >= tol) {
        throw std::runtime_error("kloosterman_sum: imaginary residue " +
                                 std::to_string(im.value()) + " exceeds tolerance");
    }
    return re.value();
}

KloostermanTable::KloostermanTable(std::int64_t p, std::vector<double> values,
                                   double imag_residual)
    : p_(p), values_(std::move(values)), max_imag_residual_(imag_residual) {}

KloostermanTable KloostermanTable::direct_impl(const PrimeModulus& p, bool parallel) {
    const std::int64_t q = p.value();
    const InverseTable inv_table(p);
    const std::vector<std::int64_t>& inv = inv_table.raw();
    const UnitRootTable roots(q);
    std::vector<double> values(static_cast<std::size_t>(q - 1));
    std::vector<double> imag(static_cast<std::size_t>(q - 1));
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t a = 1; a < q; ++a) {
            const std::complex<double> s = direct_row(a, q, inv, roots);
            values[static_cast<std::size_t>(a - 1)] = s.real();
            imag[static_cast<std::size_t>(a - 1)] = s.imag();
        }
    } else {
        for (std::int64_t a = 1; a < q; ++a) {
            const std::complex<double> s = direct_row(a, q, inv, roots);
            values[static_cast<std::size_t>(a - 1)] = s.real();
            imag[static_cast<std::size_t>(a - 1)] = s.imag();
        }
    }
    double worst = 0.0;
    for (double v : imag) worst = std::max(worst, std::abs(v));
    const double tol = 1e-9 * std::sqrt(static_cast<double>(q));
    if (worst >= tol) {
        throw std::runtime_error("kloosterman table: imaginary residue " +
                                 std::to_string(worst) + " exceeds tolerance");
    }
    return KloostermanTable(q, std::move(values), worst);
}

KloostermanTable KloostermanTable::direct(const PrimeModulus& p) {
    return direct_impl(p, true);
}

KloostermanTable KloostermanTable::direct_serial(const PrimeModulus& p) {
    return direct_impl(p, false);
}

KloostermanTable KloostermanTable::bluestein(const PrimeModulus& p) {
    const std::int64_t q = p.value();
    const InverseTable inv(p);
    // S(a,1;p) = sum_x e(inv(x)/p) e(ax/p): the DFT over Z/p of f with
    // f(0) = 0, f(x) = e(inv(x)/p).
    std::vector<std::complex<double>> f(static_cast<std::size_t>(q), {0.0, 0.0});
    const UnitRootTable roots(q);
    for (std::int64_t x = 1; x < q; ++x) {
        f[static_cast<std::size_t>(x)] = roots.at(inv.at(x));
    }
    const std::vector<std::complex<double>> dft = bluestein_dft(f);
    std::vector<double> values(static_cast<std::size_t>(q - 1));
    double worst = 0.0;
    for (std::int64_t a = 1; a < q; ++a) {
        values[static_cast<std::size_t>(a - 1)] = dft[static_cast<std::size_t>(a)].real();
        worst = std::max(worst, std::abs(dft[static_cast<std::size_t>(a)].imag()));
    }
    const double tol = 1e-9 * std::sqrt(static_cast<double>(q));
    if (worst >= tol) {
        throw std::runtime_error("bluestein table: imaginary residue exceeds tolerance");
    }
    return KloostermanTable(q, std::move(values), worst);
}

KloostermanTable KloostermanTable::from_values(const PrimeModulus& p,
                                               std::vector<double> values,
                                               double max_imag_residual) {
    const std::int64_t q = p.value();
    if (values.size() != static_cast<std::size_t>(q - 1)) {
        throw std::invalid_argument("table length must be p-1");
    }
    const double weil = 2.0 * std::sqrt(static_cast<double>(q));
    for (double v : values) {
        if (!(std::abs(v) <= weil * (1.0 + 1e-9))) {
            throw std::invalid_argument("table value violates the Weil bound");
        }
    }
    return KloostermanTable(q, std::move(values), max_imag_residual);
}

AngleTable::AngleTable(const KloostermanTable& table) : p_(table.prime()) {
    const double half_scale = 2.0 * std::sqrt(static_cast<double>(p_));
    theta_.resize(table.values().size());
    for (std::size_t i = 0; i < theta_.size(); ++i) {
        double ratio = table.values()[i] / half_scale;
        if (std::abs(ratio) > 1.0 + 1e-12) {
            throw std::domain_error("angle ratio " + std::to_string(ratio) +
                                    " outside [-1,1]: corrupted table");
        }
        ratio = std::clamp(ratio, -1.0, 1.0);
        theta_[i] = std::acos(ratio);
    }
}

WeilReport weil_verify(const KloostermanTable& table) {
    WeilReport r;
    r.p = table.prime();
    const double pd = static_cast<double>(r.p);
    r.weil_bound = 2.0 * std::sqrt(pd);
    r.tolev_bound = std::sqrt(pd + std::pow(pd, 1.5));
    r.kloosterman_bound = std::pow(3.0, 0.25) * std::pow(pd, 0.75);
    for (double v : table.values()) r.max_abs = std::max(r.max_abs, std::abs(v));
    r.max_ratio = r.max_abs / r.weil_bound;
    r.pass = r.max_ratio <= 1.0;
    r.canonical_order =
        r.weil_bound <= r.tolev_bound && r.tolev_bound <= r.kloosterman_bound;
    return r;
}

}  // namespace klooster
