#include "cyclic_spectra/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclic_spectra {

namespace {

using IntPoly = std::vector<BigInt>;

void trim_int(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
    trim_int(p);
    if (p.empty()) return;
    BigInt g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (p.back() < 0) g = -g;
    if (g != 1) {
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

// Pseudo-remainder of a by b (deg a >= deg b), result scaled by lc(b)^k.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        const std::size_t shift = a.size() - 1 - db;
        const BigInt la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        trim_int(a);
    }
    return a;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<BigInt>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return {};
    return scaled(Rational(1) / c_.back());
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
    Polynomial result;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        result = result * inner;
        result += constant(*it);
    }
    return result;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (factor.is_zero()) return {};
    std::vector<Rational> v = c_;
    for (auto& c : v) c *= factor;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed(std::size_t length) const {
    if (length < c_.size()) throw std::invalid_argument("reversal length below degree");
    std::vector<Rational> v(length);
    for (std::size_t i = 0; i < c_.size(); ++i) v[length - 1 - i] = c_[i];
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

long double Polynomial::eval(long double x) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_long_double();
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        const mpq_class& ai = a.c_[i].raw();
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            acc[i + j] += ai * b.c_[j].raw();
        }
    }
    std::vector<Rational> v;
    v.reserve(acc.size());
    for (auto& q : acc) v.emplace_back(q);
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

std::string Polynomial::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) os << mag;
        if (k >= 1) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    const Rational inv_lead = Rational(1) / bc.back();
    std::vector<Rational> quot(rem.size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        const Rational q = rem[k] * inv_lead;
        quot[k - db] = q;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] -= q * bc[i];
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<BigInt> primitive_part(const Polynomial& p) {
    if (p.is_zero()) return {};
    BigInt lcm = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c.num() * (lcm / c.den()));
    make_primitive(out);
    return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    IntPoly x = primitive_part(a);
    IntPoly y = primitive_part(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return Polynomial::constant(Rational(1));
        IntPoly r = pseudo_remainder(std::move(x), y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    return Polynomial::from_integers(x).monic();
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(Rational(1));
    Polynomial base = p;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
    if (p.is_constant()) return Polynomial::constant(Rational(1));
    const Polynomial g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

}  // namespace cyclic_spectra
