#include "cyclic_spectra/models_oracle.hpp"

#include <algorithm>
#include <cmath>

namespace cyclic_spectra {

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = Rational(static_cast<long>(a[i][j]));
    return m;
}

RealMatrix to_real(const IntMatrix& a) {
    RealMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = static_cast<double>(a[i][j]);
    return m;
}

OperatorModel::OperatorModel(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("operator model needs at least one factor");
    for (auto d : dims_) {
        if (d == 0) throw std::invalid_argument("factor dimension must be positive");
        total_ *= d;
        if (total_ > kMaxVertices) throw std::invalid_argument("operator model too large");
    }
}

RatMatrix OperatorModel::embed(std::size_t i, const RatMatrix& a, bool monotone) const {
    if (i >= dims_.size()) throw std::invalid_argument("factor index out of range");
    if (a.n() != dims_[i]) throw std::invalid_argument("dimension mismatch");
    RatMatrix r = RatMatrix::identity(1);
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        const RatMatrix f = j == i ? a
                            : (monotone && j < i) ? RatMatrix::identity(dims_[j])
                                                  : RatMatrix::vacuum_projection(dims_[j]);
        r = kron(r, f);
    }
    return r;
}

RatMatrix OperatorModel::boolean_embed(std::size_t i, const RatMatrix& a) const { return embed(i, a, false); }
RatMatrix OperatorModel::monotone_embed(std::size_t i, const RatMatrix& a) const { return embed(i, a, true); }

std::vector<double> jacobi_eigenvalues(RealMatrix m) {
    const std::size_t n = m.n();
    if (!m.is_symmetric()) throw std::invalid_argument("eigensolve needs a symmetric matrix");
    double fro = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) fro += m(i, j) * m(i, j);
    fro = std::sqrt(fro);
    const double tol = 1e-12 * (fro > 0 ? fro : 1.0);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += 2 * m(i, j) * m(i, j);
        if (std::sqrt(off) < tol) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0) continue;
                const double theta = (m(q, q) - m(p, p)) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
                m(p, q) = m(q, p) = 0;
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = m(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

SpectrumReport eigensolve(const RealMatrix& m) {
    const auto ev = jacobi_eigenvalues(m);
    SpectrumReport rep;
    rep.dim = ev.size();
    std::size_t i = 0;
    while (i < ev.size()) {
        std::size_t j = i + 1;
        double sum = ev[i];
        while (j < ev.size() && ev[j] - ev[j - 1] < 1e-8) sum += ev[j++];
        double mean = sum / static_cast<double>(j - i);
        if (std::fabs(mean) < 1e-10) mean = 0;
        rep.entries.push_back({mean, j - i, std::nullopt});
        i = j;
    }
    return rep;
}

Rational trace_moment(const RatMatrix& m, unsigned k) {
    if (k == 0) return Rational(static_cast<long>(m.n()));
    RatMatrix p = m;
    for (unsigned i = 1; i < k; ++i) p = p * m;
    return p.trace();
}

Rational vacuum_moment(const RatMatrix& m, std::size_t root, unsigned k) {
    const std::size_t n = m.n();
    std::vector<Rational> v(n);
    v.at(root) = Rational(1);
    for (unsigned it = 0; it < k; ++it) {
        std::vector<Rational> w(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!m(i, j).is_zero() && !v[j].is_zero()) w[i] += m(i, j) * v[j];
        v.swap(w);
    }
    return v[root];
}

BigInt trace_moment(const IntMatrix& m, unsigned k) {
    const std::size_t n = m.size();
    if (k == 0) return static_cast<unsigned long>(n);
    BigInt total = 0;
    // sum over e_i of <A^k e_i, e_i> with big-integer vectors
    for (std::size_t r = 0; r < n; ++r) total += vacuum_moment(m, r, k);
    return total;
}

BigInt vacuum_moment(const IntMatrix& m, std::size_t root, unsigned k) {
    const std::size_t n = m.size();
    std::vector<BigInt> v(n, 0);
    v.at(root) = 1;
    for (unsigned it = 0; it < k; ++it) {
        std::vector<BigInt> w(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m[i][j] != 0 && v[j] != 0) w[i] += BigInt(static_cast<long>(m[i][j])) * v[j];
        v.swap(w);
    }
    return v[root];
}

double trace_moment_from_spectrum(const SpectrumReport& s, unsigned k) {
    double t = 0;
    for (const auto& e : s.entries) t += static_cast<double>(e.multiplicity) * std::pow(e.value, k);
    return t;
}

MixedWord reduce_word(MixedWord w, Functional f) {
    MixedWord out;
    for (const auto& l : w) {
        if (l.power == 0) continue;
        if (!out.empty() && out.back().algebra == l.algebra)
            out.back().power += l.power;
        else
            out.push_back(l);
    }
    if (f == Functional::omega && out.size() >= 2 && out.front().algebra == out.back().algebra) {
        out.front().power += out.back().power;
        out.pop_back();
    }
    return out;
}

namespace {

const Rational& table_value(const std::vector<MomentTable>& tables, const Letter& l, Functional f) {
    const auto& t = tables.at(l.algebra);
    const auto& v = f == Functional::phi ? t.phi : t.omega;
    if (l.power >= v.size()) throw std::out_of_range("moment table too short");
    return v[l.power];
}

}  // namespace

Rational eval_cyclic_boolean_word(const MixedWord& w, const std::vector<MomentTable>& tables, Functional f) {
    const MixedWord r = reduce_word(w, f);
    if (r.empty()) throw std::invalid_argument("empty word");
    if (f == Functional::omega && r.size() == 1) return table_value(tables, r[0], Functional::omega);
    Rational prod(1);
    for (const auto& l : r) prod *= table_value(tables, l, Functional::phi);
    return prod;
}

Rational eval_cyclic_monotone_word(const MixedWord& w, const std::vector<MomentTable>& tables, Functional f,
                                   PeelOrder order) {
    MixedWord r = reduce_word(w, f);
    if (r.empty()) throw std::invalid_argument("empty word");
    Rational prod(1);
    const bool cyclic = f == Functional::omega;
    while (r.size() > 1) {
        const std::size_t n = r.size();
        auto is_peak = [&](std::size_t p) {
            const std::size_t a = r[p].algebra;
            const bool left_ok = p > 0 ? r[p - 1].algebra < a : (!cyclic || r[n - 1].algebra < a);
            const bool right_ok = p + 1 < n ? r[p + 1].algebra < a : (!cyclic || r[0].algebra < a);
            return left_ok && right_ok;
        };
        std::size_t peak = n;
        if (order == PeelOrder::leftmost) {
            for (std::size_t p = 0; p < n && peak == n; ++p)
                if (is_peak(p)) peak = p;
        } else {
            for (std::size_t p = n; p-- > 0 && peak == n;)
                if (is_peak(p)) peak = p;
        }
        if (peak == n) throw std::logic_error("no local maximum in reduced word");
        prod *= table_value(tables, r[peak], Functional::phi);
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(peak));
        r = reduce_word(std::move(r), f);
    }
    return prod * table_value(tables, r[0], f);
}

}  // namespace cyclic_spectra
