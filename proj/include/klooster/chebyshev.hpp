#pragma once

#include <cstdint>
#include <vector>

namespace klooster {

// Chebyshev polynomial of the second kind, U_k(cos t) = sin((k+1)t)/sin t,
// by the three-term recurrence U_0 = 1, U_1 = 2x, U_{k+1} = 2x U_k - U_{k-1}.
double cheb_u(int k, double x);

// Exact integer factorial / binomial, n <= 20 (fits int64).
std::int64_t factorial_exact(int n);
std::int64_t binomial_exact(int n, int r);

// Expansion of a pure power in the U basis.
//   even: x^{2k}   = sum_{l=0}^{k} coeffs[l] U_{2l}(x)
//   odd:  x^{2k+1} = sum_{l=0}^{k} coeffs[l] U_{2l+1}(x)
struct PowerExpansion {
    int k = 0;
    bool odd = false;
    std::vector<double> coeffs;

    double reconstruct(double x) const;
};

// coeffs[l] = (2k)!/4^k * (2l+1)/((k-l)!(k+l+1)!), 0 <= k <= 8.
PowerExpansion even_power_coeffs(int k);
// coeffs[l] = (2k+1)!/4^k * (l+1)/((k-l)!(k+l+2)!), 0 <= k <= 8. At k=0 this
// gives x = U_1(x)/2 exactly.
PowerExpansion odd_power_coeffs(int k);
// Same formula with prefactor (2k+1)!/4^{k+1}: every coefficient is a quarter
// of the correct one, so reconstruction returns x^{2k+1}/4 (x/4 at k=0).
// Diagnostic only; the reconstruction test is expected to reject it.
PowerExpansion odd_power_coeffs_quarter_scaled(int k);

// Expansion of |x|^{2k+1} over even-index U polynomials:
//   |x|^{2k+1} = a0 + sum_{l>=1} c_l U_{2l}(x),  convergent on [-1,1].
// a0 = 4^{k+1} / (pi (2k+1)(2k+3) C(2k,k)).
double abs_power_a0(int k);

// c_{ell/2} for even original index ell >= 0: the integral
// (4/pi) int_0^{pi/2} sin t (cos t)^{2k+1} sin((ell+1)t) dt evaluated exactly
// by expanding the integrand into a finite cosine series (a rational number
// times 2/pi). Valid for every even ell; cross-checked by quadrature.
// The coefficients decay algebraically, |c_{l}| = Theta_k(l^{-(2k+2)}).
double abs_coeff_closed_form(int k, int ell);

// A factorial-decay closed form for the same coefficient (ell >= 2k+2).
// It disagrees with quadrature and with abs_coeff_closed_form at every
// (k, ell) tested, so it is exposed for diagnostics only and never used in
// any computation.
double abs_coeff_factorial_form(int k, int ell);

struct AbsExpansion {
    int k = 0;
    int L = 0;          // truncation: c[1..L] kept
    double a0 = 0.0;
    std::vector<double> c;        // c[l] multiplies U_{2l}; c[0] unused
    double sup_remainder = 0.0;   // measured sup over [-1,1] of the truncation remainder
    double tail_bound = 0.0;      // sup_remainder * 1.05: bound used in reconstruction checks

    double evaluate(double x) const;  // a0 + sum_{l<=L} c[l] U_{2l}(x)
};

// Truncated absolute-power expansion; L >= k+1 required. sup_remainder is
// measured on a dense Chebyshev-extrema grid (the remainder's extrema live
// at the kink x=0 and the endpoints, all captured by the grid).
AbsExpansion abs_power_coeffs(int k, int L);

// Constants for the effective moment envelopes:
//   |V_{2k}  - C p^k(p-1)|                      <= D p^{k+1/2}
//   |V_{2k+1}|                                  <= E p^{k+1}
//   |W_{2k+1} - 2^{2k+1} a0 p^{k+1/2}(p-1)|     <= F p^{k+1}   (W = absolute moment)
// derived by expanding the power in the U basis and applying the angle-sum
// bound |sum_a U_m(cos theta_a)| <= (m+1) sqrt(p)/2 termwise.
struct EnvelopeConstants {
    int k = 0;
    int L = 0;
    double pmax = 0.0;     // validity cap for F at k=0 (see tail_majorant)
    std::int64_t C = 0;    // Catalan number C(2k,k)/(k+1)
    double D = 0.0;
    double E = 0.0;        // equals 4^k
    double E_quarter = 0.0;  // E/4: envelope constant from the quarter-scaled
                             // odd coefficients; fails at (p=7, k=1) where
                             // |V_3| = 64 > 49
    double katz_part = 0.0;      // 2^{2k+1} sum_{l<=L} |c_l| (2l+1)/2
    double tail_majorant = 0.0;  // see below
    double F = 0.0;              // katz_part + 2^{2k+1} * tail_majorant
};

// F's tail majorant: for k >= 1 the series sum_{l>L} |c_l|(2l+1)/2 converges
// (terms ~ l^{-(2k+1)}) and is summed to exhaustion with a comparison-series
// remainder cap; the resulting F is valid for every p. For k = 0 that series
// diverges logarithmically, so the majorant is sup_remainder * sqrt(pmax),
// bounding |sum_a remainder(cos theta_a)| <= (p-1) sup_remainder termwise;
// the resulting F is valid for p <= pmax.
EnvelopeConstants envelope_constants(int k, int L, double pmax);

}  // namespace klooster
