#include "klooster/modarith.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace klooster {

namespace {

using uint128 = unsigned __int128;

}  // namespace

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    const uint128 prod = static_cast<uint128>(static_cast<std::uint64_t>(a)) *
                         static_cast<std::uint64_t>(b);
    return static_cast<std::int64_t>(prod % static_cast<std::uint64_t>(m));
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t acc = 1 % m;
    std::int64_t b = base % m;
    if (b < 0) b += m;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return acc;
}

bool is_odd_prime(std::int64_t n) {
    if (n < 3 || n % 2 == 0) return false;
    std::int64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // Deterministic for n < 3.3e14 with this witness set.
    for (std::int64_t w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (w % n == 0) continue;
        std::int64_t x = pow_mod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(p) {
    if (p < 5 || !is_odd_prime(p)) {
        throw std::invalid_argument("modulus must be an odd prime >= 5, got " +
                                    std::to_string(p));
    }
}

InverseTable::InverseTable(const PrimeModulus& p) : p_(p.value()) {
    inv_.assign(static_cast<std::size_t>(p_), 0);
    inv_[1] = 1;
    for (std::int64_t i = 2; i < p_; ++i) {
        inv_[static_cast<std::size_t>(i)] =
            mul_mod(p_ - p_ / i, inv_[static_cast<std::size_t>(p_ % i)], p_);
    }
}

int legendre(std::int64_t a, std::int64_t m) {
    if (m < 3 || !is_odd_prime(m)) {
        throw std::invalid_argument("legendre: modulus must be an odd prime >= 3");
    }
    a %= m;
    if (a < 0) a += m;
    if (a == 0) return 0;
    const std::int64_t e = pow_mod(a, (m - 1) / 2, m);
    return e == 1 ? 1 : -1;
}

std::int64_t primitive_root(const PrimeModulus& p) {
    const std::int64_t q = p.value();
    std::vector<std::int64_t> factors;
    std::int64_t m = q - 1;
    for (std::int64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) factors.push_back(m);
    for (std::int64_t g = 2; g < q; ++g) {
        bool ok = true;
        for (std::int64_t f : factors) {
            if (pow_mod(g, (q - 1) / f, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found (modulus not prime?)");
}

std::complex<double> unit_root(std::int64_t t, std::int64_t p) {
    t %= p;
    if (t < 0) t += p;
    const long double angle =
        2.0L * std::numbers::pi_v<long double> * static_cast<long double>(t) /
        static_cast<long double>(p);
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

UnitRootTable::UnitRootTable(std::int64_t p) : p_(p) {
    roots_.resize(static_cast<std::size_t>(p));
    roots_[0] = {1.0, 0.0};
    // Mirror the upper half so at(p-t) is exactly conj(at(t)); the x <-> p-x
    // pairing in Kloosterman sums then cancels imaginary parts to rounding.
    for (std::int64_t t = 1; t <= p / 2; ++t) {
        const std::complex<double> r = unit_root(t, p);
        roots_[static_cast<std::size_t>(t)] = r;
        roots_[static_cast<std::size_t>(p - t)] = std::conj(r);
    }
}

}  // namespace klooster
