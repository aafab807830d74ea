#include "cyclic_spectra/truncated_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclic_spectra {

TruncatedSeries::TruncatedSeries(std::size_t order) : c_(order) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order)
    : c_(std::move(coeffs)) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
    c_.resize(order);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const { return {c_, order}; }

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

TruncatedSeries TruncatedSeries::derivative_times_z() const {
    TruncatedSeries r = *this;
    for (std::size_t n = 0; n < r.c_.size(); ++n) r.c_[n] *= Rational(static_cast<long>(n));
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    TruncatedSeries r(order());
    for (std::size_t n = 1; n < c_.size(); ++n) r.c_[n - 1] = c_[n] * Rational(static_cast<long>(n));
    return r;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
    TruncatedSeries r(order());
    for (std::size_t n = 0; n + k < c_.size(); ++n) r.c_[n + k] = c_[n];
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t k = std::min(a.order(), b.order());
    std::vector<mpq_class> acc(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < k; ++j) {
            if (b.c_[j].is_zero()) continue;
            acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
        }
    }
    TruncatedSeries r(k);
    for (std::size_t n = 0; n < k; ++n) r.c_[n] = Rational(acc[n]);
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (c_[0].is_zero()) throw std::domain_error("series not invertible");
    const std::size_t k = order();
    TruncatedSeries r(k);
    const Rational inv0 = Rational(1) / c_[0];
    r.c_[0] = inv0;
    for (std::size_t n = 1; n < k; ++n) {
        mpq_class s;
        for (std::size_t j = 1; j <= n; ++j)
            if (!c_[j].is_zero()) s += c_[j].raw() * r.c_[n - j].raw();
        r.c_[n] = -Rational(s) * inv0;
    }
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal_of_one_plus() const {
    if (c_[0] == Rational(-1)) throw std::domain_error("reciprocal of zero constant term");
    TruncatedSeries one_plus = *this;
    one_plus.c_[0] += Rational(1);
    return one_plus.reciprocal();
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    if (!inner.c_[0].is_zero()) throw std::domain_error("inner series must have zero constant term");
    const std::size_t k = std::min(order(), inner.order());
    // Horner from the top; inner has no constant term so each product gains a degree.
    TruncatedSeries r(k);
    const TruncatedSeries in = inner.truncated(k);
    for (std::size_t n = k; n-- > 0;) {
        r = r * in;
        r.c_[0] += c_[n];
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    bool first = true;
    for (std::size_t n = 0; n < s.c_.size(); ++n) {
        if (s.c_[n].is_zero()) continue;
        if (!first) os << " + ";
        os << s.c_[n];
        if (n > 0) os << "*t^" << n;
        first = false;
    }
    if (first) os << "0";
    return os << " + O(t^" << s.c_.size() << ")";
}

}  // namespace cyclic_spectra
