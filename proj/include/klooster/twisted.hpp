#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "klooster/kloosterman.hpp"
#include "klooster/modarith.hpp"

namespace klooster {

// Multiplicative character mod p, indexed against a fixed primitive root g:
// chi_j(g^t) = e(j t / (p-1)). j = 0 is the principal character and
// j = (p-1)/2 the quadratic (Legendre-symbol) one; chi is real iff
// 2j = 0 mod p-1. Values are precomputed for every unit.
class DirichletCharacter {
  public:
    DirichletCharacter(const PrimeModulus& p, std::int64_t index);

    std::int64_t prime() const { return p_; }
    std::int64_t index() const { return j_; }
    std::int64_t generator() const { return g_; }
    bool principal() const { return j_ == 0; }
    bool quadratic() const { return 2 * j_ == p_ - 1; }
    bool real() const { return principal() || quadratic(); }

    // chi(a) for any a; zero at a = 0 mod p.
    std::complex<double> value(std::int64_t a) const;

  private:
    std::int64_t p_, j_, g_;
    std::vector<std::complex<double>> values_;  // index a in [0, p-1], values_[0] = 0
};

// S_chi(a, b; p) = sum over units x of chi(x) e((a x + b x^{-1}) / p).
// For the principal character this is the plain sum minus nothing (it equals
// S(a,b;p)); for the quadratic character it is a Salie sum.
struct TwistedSum {
    std::int64_t p = 0, a = 0, b = 0, j = 0;
    std::complex<double> value;
};
TwistedSum twisted_sum(const DirichletCharacter& chi, std::int64_t a, std::int64_t b);
// Table-reusing overload for tight loops; inv and roots must belong to the
// same prime as chi.
TwistedSum twisted_sum(const DirichletCharacter& chi, std::int64_t a, std::int64_t b,
                       const InverseTable& inv, const UnitRootTable& roots);

// |S_chi(a,b;p)| bound by character type (a, b units):
//   principal:              2 sqrt(p)           (the untwisted Weil bound)
//   quadratic:              2^{1/4} p^{3/4}
//   non-real:               p^{3/4}
double twisted_bound(const DirichletCharacter& chi);

// Phase identity: S_chi(a,b;p)^2 = chi(-1) chi(inverse(a) b) |S_chi(a,b;p)|^2,
// i.e. the square's phase is carried entirely by chi(-a^{-1} b).
struct PhaseReport {
    std::int64_t p = 0, a = 0, b = 0, j = 0;
    double residual = 0.0;   // |S^2 - chi(-a^{-1}b) |S|^2|
    double tolerance = 0.0;  // 1e-9 * p (|S^2| itself is of size up to ~p^{3/2})
    bool pass = false;
};
PhaseReport phase_identity_check(const DirichletCharacter& chi, std::int64_t a, std::int64_t b);

// Identity checks that compare one sum against a full diagonal sum.
struct IdentityReport {
    std::int64_t p = 0, a = 0, b = 0, j = 0;  // j = -1 for the untwisted check
    double lhs = 0.0;
    double residual = 0.0;           // |lhs - rhs| with additive constant p
    double residual_alt_constant = 0.0;  // same with constant p-1 (stays near 1)
    double tolerance = 0.0;          // 1e-6 * p
    bool pass = false;
};

// S(a,b;p)^2 = p + sum_{x=1}^{p-1} ((x^2-4x) | p) S(a, bx; p), where the
// x = 4 term vanishes with the Legendre factor. Table must be for the same p;
// its values supply every S(a, bx; p) via S(a,bx) = S(1, abx).
IdentityReport square_identity_check(std::int64_t a, std::int64_t b,
                                     const KloostermanTable& table);

// |S_chi(a,b;p)|^2 = p + sum over units x of S_chi(x,x;p) e(-(2x + a b x^{-1})/p).
// The diagonal sums S_chi(x,x;p) are recomputed internally (O(p^2)).
IdentityReport second_moment_identity_check(const DirichletCharacter& chi, std::int64_t a,
                                            std::int64_t b);

// Normalized twisted moment diagnostics over a in units:
//   "U"        sum_a chi(a) U_k(cos theta_a)            / sqrt(p)
//   "S_even"   sum_a chi(a) S(a,1)^{2k}                 / p^{k+1/2}
//   "S_odd"    sum_a chi(a) S(a,1)^{2k+1}               / p^{k+1}
//   "absS_odd" sum_a chi(a) |S(a,1)|^{2k+1}             / p^{k+1}
// Ratios are reported (modulus of the complex sum); rows for non-real chi are
// the headline ones, real chi rows carry tag "real-character".
struct TwistedMomentRow {
    std::int64_t p = 0, j = 0;
    int k = 0;
    std::string quantity;
    double ratio = 0.0;
    std::string tag;  // "headline" or "real-character"
};
std::vector<TwistedMomentRow> twisted_moment_diagnostics(const DirichletCharacter& chi,
                                                         const AngleTable& angles, int kmax);

}  // namespace klooster
