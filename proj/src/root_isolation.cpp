#include "cyclic_spectra/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclic_spectra {

namespace {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void divide_content(IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    return d;
}

// Remainder of a by b scaled by a positive constant.
IntPoly positive_prem(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt lb_abs = abs(b.back());
    const int lb_sign = sgn(b.back());
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const BigInt la = lb_sign > 0 ? a.back() : BigInt(-a.back());
        for (auto& c : a) c *= lb_abs;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim(a);
    }
    return a;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain{p, derivative(p)};
    divide_content(chain[1]);
    while (chain.back().size() > 1) {
        IntPoly r = positive_prem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        divide_content(r);
        chain.push_back(std::move(r));
    }
    return chain;
}

// Dyadic point num / 2^shift.
struct Dyadic {
    BigInt num;
    unsigned long shift = 0;

    Rational to_rational() const {
        BigInt den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), shift);
        return {num, den};
    }
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
    const unsigned long s = std::max(a.shift, b.shift);
    BigInt x = a.num, y = b.num;
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), s - a.shift);
    mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), s - b.shift);
    return {x + y, s + 1};
}

// sign of p(x) at a dyadic point, via sum c_i a^i 2^{s(n-i)}.
int sign_at(const IntPoly& p, const Dyadic& x) {
    if (p.empty()) return 0;
    const std::size_t n = p.size() - 1;
    BigInt acc = p[n], term;
    for (std::size_t i = n; i-- > 0;) {
        acc *= x.num;
        mpz_mul_2exp(term.get_mpz_t(), p[i].get_mpz_t(), x.shift * (n - i));
        acc += term;
    }
    return sgn(acc);
}

int variations(const std::vector<IntPoly>& chain, const Dyadic& x) {
    int v = 0, last = 0;
    for (const auto& s : chain) {
        const int sg = sign_at(s, x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

// Sign variations at an arbitrary rational (for count_real_roots).
int variations(const std::vector<IntPoly>& chain, const Rational& x) {
    int v = 0, last = 0;
    for (const auto& s : chain) {
        std::vector<Rational> c;
        for (const auto& k : s) c.emplace_back(k);
        const int sg = Polynomial(c).eval(x).sign();
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++v;
        last = sg;
    }
    return v;
}

IntPoly squarefree_integer(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    return primitive_part(square_free_part(p));
}

Polynomial to_poly(const IntPoly& p) { return Polynomial::from_integers(p); }

// Continued-fraction convergents of x with bounded denominators, tested exactly.
std::optional<Rational> rational_root_near(const Polynomial& p, const mpf_class& x, const BigInt& lead,
                                          const Rational& lo, const Rational& hi) {
    const BigInt max_den = std::min(BigInt(abs(lead)), BigInt(1000000));
    mpf_class r(x, x.get_prec());
    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int it = 0; it < 64; ++it) {
        mpf_class fl(0, x.get_prec());
        mpf_floor(fl.get_mpf_t(), r.get_mpf_t());
        const BigInt a(fl);
        const BigInt h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > max_den) break;
        const Rational cand(h2, k2);
        if (lo < cand && cand <= hi && p.eval(cand).is_zero()) return cand;
        h0 = h1, h1 = h2, k0 = k1, k1 = k2;
        mpf_class frac = r - fl;
        if (frac == 0) break;
        r = 1 / frac;
    }
    return std::nullopt;
}

}  // namespace

unsigned long suggested_precision(const Polynomial& p) {
    std::size_t bits = 0;
    for (const auto& c : p.coefficients()) {
        bits = std::max(bits, mpz_sizeinbase(c.num().get_mpz_t(), 2));
        bits = std::max(bits, mpz_sizeinbase(c.den().get_mpz_t(), 2));
    }
    return static_cast<unsigned long>(192 + 2 * bits + 8 * std::max(0, p.degree()));
}

mpf_class eval_mpf(const Polynomial& p, const mpf_class& x) {
    mpf_class acc(0, x.get_prec());
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        acc *= x;
        acc += mpf_class(p.coefficients()[i].raw(), x.get_prec());
    }
    return acc;
}

std::size_t count_real_roots(const Polynomial& p, const Rational& a, const Rational& b) {
    const auto chain = sturm_chain(squarefree_integer(p));
    const int n = variations(chain, a) - variations(chain, b);
    return n > 0 ? static_cast<std::size_t>(n) : 0;
}

std::vector<RealRoot> real_roots(const Polynomial& p, unsigned long precision_bits) {
    const IntPoly sf = squarefree_integer(p);
    std::vector<RealRoot> out;
    if (sf.size() <= 1) return out;
    const Polynomial sfp = to_poly(sf);
    const Polynomial dsf = sfp.derivative();
    const unsigned long prec = precision_bits ? precision_bits : suggested_precision(sfp);
    const auto chain = sturm_chain(sf);

    // Cauchy bound 1 + max |c_i / c_n|, rounded up to a power of two.
    BigInt maxc = 0;
    for (std::size_t i = 0; i + 1 < sf.size(); ++i) maxc = std::max(maxc, BigInt(abs(sf[i])));
    BigInt bound = maxc / abs(sf.back()) + 2;
    const unsigned long e = mpz_sizeinbase(bound.get_mpz_t(), 2);
    BigInt pw = 1;
    mpz_mul_2exp(pw.get_mpz_t(), pw.get_mpz_t(), e);

    struct Interval {
        Dyadic a, b;
        int va, vb;
    };
    std::vector<Interval> stack;
    Dyadic lo{-pw, 0}, hi{pw, 0};
    stack.push_back({lo, hi, variations(chain, lo), variations(chain, hi)});
    std::vector<std::pair<Dyadic, Dyadic>> isolated;  // one root in (a, b]
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        const int count = iv.va - iv.vb;
        if (count <= 0) continue;
        if (count == 1) {
            isolated.emplace_back(iv.a, iv.b);
            continue;
        }
        const Dyadic m = midpoint(iv.a, iv.b);
        const int vm = variations(chain, m);
        stack.push_back({m, iv.b, vm, iv.vb});
        stack.push_back({iv.a, m, iv.va, vm});
    }

    const unsigned long target_shift = 42;  // width below 2^-41 < 1e-12
    for (auto [a, b] : isolated) {
        RealRoot r;
        r.precise.set_prec(prec);  // assignment keeps the target's precision
        std::optional<Dyadic> exact_dyadic;
        const int sb = sign_at(sf, b);
        if (sb == 0) {
            exact_dyadic = b;
        } else {
            while (true) {
                // width = (b - a), both with possibly different shifts
                const Dyadic m = midpoint(a, b);
                if (m.shift > target_shift + e + 1) break;
                const int sm = sign_at(sf, m);
                if (sm == 0) {
                    exact_dyadic = m;
                    break;
                }
                if (sm == sb)
                    b = m;
                else
                    a = m;
            }
        }
        if (exact_dyadic) {
            r.exact = exact_dyadic->to_rational();
            r.lo = r.hi = *r.exact;
            r.precise = mpf_class(r.exact->raw(), prec);
        } else {
            r.lo = a.to_rational();
            r.hi = b.to_rational();
            mpf_class x(((r.lo + r.hi) / Rational(2)).raw(), prec);
            const mpf_class flo(r.lo.raw(), prec), fhi(r.hi.raw(), prec);
            mpf_class fa = eval_mpf(sfp, flo);
            mpf_class lo_x = flo, hi_x = fhi;
            // Newton with bisection safeguard until the step stalls.
            for (int it = 0; it < 200; ++it) {
                const mpf_class fx = eval_mpf(sfp, x);
                if (fx == 0) break;
                if ((fx > 0) == (fa > 0)) lo_x = x; else hi_x = x;
                const mpf_class dfx = eval_mpf(dsf, x);
                mpf_class nx(0, prec);
                if (dfx != 0) nx = x - fx / dfx;
                if (dfx == 0 || nx <= lo_x || nx >= hi_x) nx = (lo_x + hi_x) / 2;
                mpf_class step = abs(nx - x);
                x = nx;
                if (step == 0) break;
                mpf_class rel = step;
                if (abs(x) > 1) rel /= abs(x);
                mpf_class tiny(1, prec);
                mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), prec - 16);
                if (rel < tiny) break;
            }
            r.precise = x;
            r.exact = rational_root_near(sfp, x, sf.back(), r.lo, r.hi);
            if (r.exact) r.precise = mpf_class(r.exact->raw(), prec);
        }
        r.value = r.precise.get_d();
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.precise < y.precise; });
    return out;
}

}  // namespace cyclic_spectra
