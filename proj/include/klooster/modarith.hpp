#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace klooster {

// Deterministic Miller-Rabin, valid for all n < 3.3e14 with the fixed
// witness set {2,3,5,7,...,37}. Returns true iff n is prime and n >= 3.
bool is_odd_prime(std::int64_t n);

// 64-bit modular arithmetic with 128-bit intermediates.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Validated odd prime modulus p >= 5. Throws std::invalid_argument otherwise.
class PrimeModulus {
  public:
    explicit PrimeModulus(std::int64_t p);
    std::int64_t value() const { return p_; }

  private:
    std::int64_t p_;
};

// Batch modular inverses: inv[a]*a == 1 (mod p) for a = 1..p-1, built with
// the O(p) recurrence inv[i] = -(p/i)*inv[p mod i] mod p.
class InverseTable {
  public:
    explicit InverseTable(const PrimeModulus& p);
    std::int64_t prime() const { return p_; }
    std::int64_t at(std::int64_t a) const { return inv_[static_cast<std::size_t>(a)]; }
    const std::vector<std::int64_t>& raw() const { return inv_; }

  private:
    std::int64_t p_;
    std::vector<std::int64_t> inv_;  // index a in [1, p-1]; inv_[0] unused
};

// Legendre symbol (a/m) for odd prime m (m = 3 allowed), via Euler's
// criterion. Returns -1, 0, or +1.
int legendre(std::int64_t a, std::int64_t m);

// Smallest primitive root g >= 2 mod p.
std::int64_t primitive_root(const PrimeModulus& p);

// e(t/p) = exp(2*pi*i*t/p). Any integer t; reduced mod p internally.
std::complex<double> unit_root(std::int64_t t, std::int64_t p);

// Precomputed table of all p roots e(t/p), t = 0..p-1. Angles are evaluated
// in long double and mirrored so that at(p-t) == conj(at(t)) exactly.
class UnitRootTable {
  public:
    explicit UnitRootTable(std::int64_t p);
    std::int64_t prime() const { return p_; }
    const std::complex<double>& at(std::int64_t t) const {
        return roots_[static_cast<std::size_t>(t)];
    }

  private:
    std::int64_t p_;
    std::vector<std::complex<double>> roots_;
};

}  // namespace klooster
