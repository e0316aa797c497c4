#include "klooster/twisted.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "klooster/kahan.hpp"

namespace klooster {

namespace {

std::int64_t reduce_unit(std::int64_t v, std::int64_t p, const char* where) {
    std::int64_t r = v % p;
    if (r < 0) r += p;
    if (r == 0)
        throw std::invalid_argument(std::string(where) + ": argument divisible by p");
    return r;
}

}  // namespace

DirichletCharacter::DirichletCharacter(const PrimeModulus& p, std::int64_t index)
    : p_(p.value()), j_(index), g_(primitive_root(p)) {
    if (j_ < 0 || j_ > p_ - 2)
        throw std::invalid_argument("DirichletCharacter: index out of [0, p-2]");
    values_.assign(static_cast<std::size_t>(p_), std::complex<double>(0.0, 0.0));
    const UnitRootTable roots(p_ - 1);
    std::int64_t x = 1;
    for (std::int64_t t = 0; t <= p_ - 2; ++t) {  // x = g^t walks every unit once
        values_[static_cast<std::size_t>(x)] = roots.at((j_ * t) % (p_ - 1));
        x = mul_mod(x, g_, p_);
    }
}

std::complex<double> DirichletCharacter::value(std::int64_t a) const {
    std::int64_t r = a % p_;
    if (r < 0) r += p_;
    return values_[static_cast<std::size_t>(r)];
}

TwistedSum twisted_sum(const DirichletCharacter& chi, std::int64_t a, std::int64_t b,
                       const InverseTable& inv, const UnitRootTable& roots) {
    const std::int64_t p = chi.prime();
    const std::int64_t ar = reduce_unit(a, p, "twisted_sum(a)");
    const std::int64_t br = reduce_unit(b, p, "twisted_sum(b)");
    KahanSum<double> re, im;
    std::int64_t axm = 0;
    for (std::int64_t x = 1; x <= p - 1; ++x) {
        axm += ar;               // a*x mod p, incrementally
        if (axm >= p) axm -= p;
        std::int64_t idx = axm + mul_mod(br, inv.at(x), p);
        if (idx >= p) idx -= p;
        const std::complex<double> term =
            chi.value(x) * roots.at(idx);
        re.add(term.real());
        im.add(term.imag());
    }
    TwistedSum s;
    s.p = p;
    s.a = ar;
    s.b = br;
    s.j = chi.index();
    s.value = {re.value(), im.value()};
    return s;
}

TwistedSum twisted_sum(const DirichletCharacter& chi, std::int64_t a, std::int64_t b) {
    const PrimeModulus p(chi.prime());
    const InverseTable inv(p);
    const UnitRootTable roots(p.value());
    return twisted_sum(chi, a, b, inv, roots);
}

double twisted_bound(const DirichletCharacter& chi) {
    const double p = static_cast<double>(chi.prime());
    if (chi.principal()) return 2.0 * std::sqrt(p);
    if (chi.quadratic()) return std::pow(2.0, 0.25) * std::pow(p, 0.75);
    return std::pow(p, 0.75);
}

PhaseReport phase_identity_check(const DirichletCharacter& chi, std::int64_t a, std::int64_t b) {
    const std::int64_t p = chi.prime();
    const std::int64_t ar = reduce_unit(a, p, "phase_identity_check(a)");
    const std::int64_t br = reduce_unit(b, p, "phase_identity_check(b)");
    const std::complex<double> s = twisted_sum(chi, ar, br).value;
    const std::int64_t inv_a = pow_mod(ar, p - 2, p);
    const std::int64_t m = p - mul_mod(inv_a, br, p);  // -a^{-1} b mod p, nonzero
    const std::complex<double> rhs = chi.value(m) * std::norm(s);
    PhaseReport r;
    r.p = p;
    r.a = ar;
    r.b = br;
    r.j = chi.index();
    r.residual = std::abs(s * s - rhs);
    r.tolerance = 1e-9 * static_cast<double>(p);
    r.pass = r.residual <= r.tolerance;
    return r;
}

IdentityReport square_identity_check(std::int64_t a, std::int64_t b,
                                     const KloostermanTable& table) {
    const std::int64_t p = table.prime();
    const std::int64_t ar = reduce_unit(a, p, "square_identity_check(a)");
    const std::int64_t br = reduce_unit(b, p, "square_identity_check(b)");
    const std::int64_t ab = mul_mod(ar, br, p);
    const double s = table.value(ab);  // S(a,b) = S(1,ab) = S(ab,1)
    KahanSum<double> acc;
    std::int64_t abx = 0;
    for (std::int64_t x = 1; x <= p - 1; ++x) {
        abx += ab;  // a*b*x mod p
        if (abx >= p) abx -= p;
        const std::int64_t w = mul_mod(x, (x + p - 4) % p, p);  // x^2 - 4x mod p
        const int leg = (w == 0) ? 0 : legendre(w, p);
        if (leg == 1)
            acc.add(table.value(abx));
        else if (leg == -1)
            acc.add(-table.value(abx));
    }
    IdentityReport r;
    r.p = p;
    r.a = ar;
    r.b = br;
    r.j = -1;
    r.lhs = s * s;
    const double rhs = static_cast<double>(p) + acc.value();
    r.residual = std::fabs(r.lhs - rhs);
    r.residual_alt_constant = std::fabs(r.lhs - (rhs - 1.0));
    r.tolerance = 1e-6 * static_cast<double>(p);
    r.pass = r.residual <= r.tolerance;
    return r;
}

IdentityReport second_moment_identity_check(const DirichletCharacter& chi, std::int64_t a,
                                            std::int64_t b) {
    const std::int64_t p = chi.prime();
    const std::int64_t ar = reduce_unit(a, p, "second_moment_identity_check(a)");
    const std::int64_t br = reduce_unit(b, p, "second_moment_identity_check(b)");
    const PrimeModulus pm(p);
    const InverseTable inv(pm);
    const UnitRootTable roots(p);

    std::vector<std::complex<double>> diag(static_cast<std::size_t>(p));
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 1; x <= p - 1; ++x)
        diag[static_cast<std::size_t>(x)] = twisted_sum(chi, x, x, inv, roots).value;

    const std::int64_t ab = mul_mod(ar, br, p);
    KahanSum<double> re, im;
    for (std::int64_t x = 1; x <= p - 1; ++x) {
        std::int64_t e = 2 * x + mul_mod(ab, inv.at(x), p);  // 2x + a b x^{-1}
        e %= p;
        const std::int64_t idx = (p - e) % p;  // negated exponent
        const std::complex<double> term = diag[static_cast<std::size_t>(x)] * roots.at(idx);
        re.add(term.real());
        im.add(term.imag());
    }
    const std::complex<double> tail(re.value(), im.value());
    const std::complex<double> s = twisted_sum(chi, ar, br, inv, roots).value;

    IdentityReport r;
    r.p = p;
    r.a = ar;
    r.b = br;
    r.j = chi.index();
    r.lhs = std::norm(s);
    r.residual = std::abs(std::complex<double>(r.lhs, 0.0) -
                          (static_cast<double>(p) + tail));
    r.residual_alt_constant = std::abs(std::complex<double>(r.lhs, 0.0) -
                                       (static_cast<double>(p - 1) + tail));
    r.tolerance = 1e-6 * static_cast<double>(p);
    r.pass = r.residual <= r.tolerance;
    return r;
}

std::vector<TwistedMomentRow> twisted_moment_diagnostics(const DirichletCharacter& chi,
                                                         const AngleTable& angles, int kmax) {
    if (kmax < 1 || kmax > 8)
        throw std::invalid_argument("twisted_moment_diagnostics: kmax out of [1,8]");
    const std::int64_t p = chi.prime();
    if (angles.prime() != p)
        throw std::invalid_argument("twisted_moment_diagnostics: prime mismatch");
    const double sq = std::sqrt(static_cast<double>(p));
    const std::size_t n = static_cast<std::size_t>(kmax) + 1;
    std::vector<KahanSum<double>> u_re(n), u_im(n), ev_re(n), ev_im(n), od_re(n), od_im(n),
        ab_re(n), ab_im(n);

    for (std::int64_t a = 1; a <= p - 1; ++a) {
        const std::complex<double> c = chi.value(a);
        const double x = std::cos(angles.theta(a));
        double um = 1.0, u = 2.0 * x;   // U_{k-1}, U_k
        double xe = 1.0;                 // x^{2k}
        for (int k = 0; k <= kmax; ++k) {
            if (k >= 1) {
                u_re[static_cast<std::size_t>(k)].add(c.real() * u);
                u_im[static_cast<std::size_t>(k)].add(c.imag() * u);
                const double next = 2.0 * x * u - um;
                um = u;
                u = next;
            }
            const double xo = xe * x;  // x^{2k+1}
            ev_re[static_cast<std::size_t>(k)].add(c.real() * xe);
            ev_im[static_cast<std::size_t>(k)].add(c.imag() * xe);
            od_re[static_cast<std::size_t>(k)].add(c.real() * xo);
            od_im[static_cast<std::size_t>(k)].add(c.imag() * xo);
            ab_re[static_cast<std::size_t>(k)].add(c.real() * std::fabs(xo));
            ab_im[static_cast<std::size_t>(k)].add(c.imag() * std::fabs(xo));
            xe *= x * x;
        }
    }

    const std::string tag = chi.real() ? "real-character" : "headline";
    std::vector<TwistedMomentRow> rows;
    auto push = [&](int k, const char* quantity, double re, double im, double scale) {
        TwistedMomentRow r;
        r.p = p;
        r.j = chi.index();
        r.k = k;
        r.quantity = quantity;
        r.ratio = std::abs(std::complex<double>(re, im)) * scale;
        r.tag = tag;
        rows.push_back(std::move(r));
    };
    for (int k = 0; k <= kmax; ++k) {
        const std::size_t i = static_cast<std::size_t>(k);
        const double fk = std::pow(4.0, k);
        // sum chi S^{2k} = 4^k p^k sum chi x^{2k}; ratios divide by p^{k+1/2}
        // (even) and p^{k+1} (odd/absolute).
        if (k >= 1) push(k, "U", u_re[i].value(), u_im[i].value(), 1.0 / sq);
        push(k, "S_even", ev_re[i].value(), ev_im[i].value(), fk / sq);
        push(k, "S_odd", od_re[i].value(), od_im[i].value(), 2.0 * fk / sq);
        push(k, "absS_odd", ab_re[i].value(), ab_im[i].value(), 2.0 * fk / sq);
    }
    return rows;
}

}  // namespace klooster
