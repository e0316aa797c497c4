#pragma once

#include <cstdint>
#include <vector>

#include "klooster/modarith.hpp"

namespace klooster {

// Single Kloosterman sum S(a,b;p) = sum over units x of e((ax + b*inv(x))/p).
// Real by the x <-> p-x pairing; the imaginary residue is checked against
// 1e-9*sqrt(p) and the real part returned. Throws if p | a or p | b.
double kloosterman_sum(std::int64_t a, std::int64_t b, const PrimeModulus& p);

// All S(a,1;p) for a = 1..p-1. S(a,b;p) = S(ab,1;p), so b=1 suffices.
class KloostermanTable {
  public:
    // OpenMP-parallel direct O(p^2) evaluation. Deterministic: each a is
    // accumulated serially in ascending x with Kahan compensation, so the
    // result is bit-identical to direct_serial.
    static KloostermanTable direct(const PrimeModulus& p);
    // Serial reference for the parallel kernel.
    static KloostermanTable direct_serial(const PrimeModulus& p);
    // O(p log p) transform path: the table is the length-p DFT of
    // x -> e(inv(x)/p), computed with a Bluestein chirp-z transform.
    static KloostermanTable bluestein(const PrimeModulus& p);
    // Adopt externally produced values (cache loads). Validates length and
    // the Weil bound on every entry.
    static KloostermanTable from_values(const PrimeModulus& p, std::vector<double> values,
                                        double max_imag_residual = 0.0);

    std::int64_t prime() const { return p_; }
    double value(std::int64_t a) const { return values_[static_cast<std::size_t>(a - 1)]; }
    const std::vector<double>& values() const { return values_; }  // index a-1
    double max_imag_residual() const { return max_imag_residual_; }

  private:
    KloostermanTable(std::int64_t p, std::vector<double> values, double imag_residual);
    static KloostermanTable direct_impl(const PrimeModulus& p, bool parallel);

    std::int64_t p_;
    std::vector<double> values_;
    double max_imag_residual_;
};

// Kloosterman angles: values[a] = 2*sqrt(p)*cos(theta[a]), theta in [0, pi].
// A ratio |values[a]|/(2 sqrt p) beyond 1 + 1e-12 means a corrupted table and
// throws; smaller excursions are clamped before acos.
class AngleTable {
  public:
    explicit AngleTable(const KloostermanTable& table);
    std::int64_t prime() const { return p_; }
    double theta(std::int64_t a) const { return theta_[static_cast<std::size_t>(a - 1)]; }
    const std::vector<double>& thetas() const { return theta_; }

  private:
    std::int64_t p_;
    std::vector<double> theta_;
};

// Comparison of max |S(a,1;p)| against the three classical bounds.
struct WeilReport {
    std::int64_t p = 0;
    double max_abs = 0.0;        // max over a of |S(a,1;p)|
    double max_ratio = 0.0;      // max_abs / (2 sqrt p)
    double weil_bound = 0.0;     // 2 sqrt p
    double tolev_bound = 0.0;    // sqrt(p + p^{3/2})
    double kloosterman_bound = 0.0;  // 3^{1/4} p^{3/4}
    bool pass = false;           // max_ratio <= 1
    // 2 sqrt p <= sqrt(p+p^{3/2}) <= 3^{1/4} p^{3/4}; true for p >= 11 but
    // not at p = 5, 7 where the Weil bound is the largest of the three.
    bool canonical_order = false;
};

WeilReport weil_verify(const KloostermanTable& table);

}  // namespace klooster
