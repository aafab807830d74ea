#include "cyclic_spectra/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "cyclic_spectra/charpoly.hpp"
#include "cyclic_spectra/root_isolation.hpp"
#include "json.hpp"

namespace cyclic_spectra {

namespace {

// Residue num(l)/den'(l) of num/den at a simple root l of den.
struct Residue {
    mpf_class value;
    std::optional<Rational> exact;
};

Residue residue_at(const RationalFunction& f, const RealRoot& root, const Polynomial& dden) {
    Residue r;
    r.value.set_prec(root.precise.get_prec());
    if (root.exact) {
        r.exact = f.num().eval(*root.exact) / dden.eval(*root.exact);
        r.value = mpf_class(r.exact->raw(), root.precise.get_prec());
    } else {
        r.value = eval_mpf(f.num(), root.precise) / eval_mpf(dden, root.precise);
    }
    return r;
}

std::size_t nearest_count(const mpf_class& v, const char* what) {
    const double d = v.get_d();
    const double n = std::round(d);
    if (std::fabs(d - n) > 1e-6) throw std::domain_error("non-integer residue");
    if (n < 0) throw std::domain_error(std::string("negative ") + what);
    return static_cast<std::size_t>(n);
}

}  // namespace

RootedSpectralData make_spectral_data(Polynomial phi, Polynomial phi_minus_root) {
    if (phi.degree() < 1) throw std::invalid_argument("phi must have positive degree");
    if (phi_minus_root.degree() != phi.degree() - 1)
        throw std::invalid_argument("phi minus root must have degree dim - 1");
    const auto dim = static_cast<std::size_t>(phi.degree());
    return {std::move(phi), std::move(phi_minus_root), dim};
}

RootedSpectralData spectral_data(const RootedGraph& g) {
    return {charpoly(adjacency(g.graph)), charpoly(adjacency(delete_root(g))), g.n()};
}

RationalFunction green(const RootedSpectralData& sd) { return {sd.phi_minus_root, sd.phi}; }

RationalFunction f_transform(const RootedSpectralData& sd) { return {sd.phi, sd.phi_minus_root}; }

RationalFunction cauchy(const RootedSpectralData& sd) { return RationalFunction(sd.phi).log_derivative(); }

RationalFunction renormalized_cauchy(const RootedSpectralData& sd) {
    // (z phi' - d phi) / (z phi)
    const Polynomial z = Polynomial::x();
    return {z * sd.phi.derivative() - sd.phi.scaled(Rational(static_cast<long>(sd.dim))), z * sd.phi};
}

RationalFunction h_from(const RationalFunction& rc, const RationalFunction& g) {
    return rc + (RationalFunction::z() * g).log_derivative();
}

RationalFunction h_transform(const RootedSpectralData& sd) {
    return h_from(renormalized_cauchy(sd), green(sd));
}

TruncatedSeries laurent_at_infinity(const RationalFunction& f, std::size_t order) {
    if (!f.is_proper()) throw std::domain_error("not proper at infinity");
    const std::size_t len = order + 1;
    if (f.is_zero()) return TruncatedSeries(len);
    const int dn = f.num().degree(), dd = f.den().degree();
    // f(1/w) = w^{dd-dn} * rev(num)(w) / rev(den)(w)
    TruncatedSeries rn(f.num().reversed(static_cast<std::size_t>(dn) + 1).coefficients(), len);
    TruncatedSeries rd(f.den().reversed(static_cast<std::size_t>(dd) + 1).coefficients(), len);
    return (rn * rd.reciprocal()).shifted(static_cast<std::size_t>(dd - dn));
}

SpectrumReport extract_spectrum(const RationalFunction& rc, std::size_t dim) {
    SpectrumReport rep;
    rep.dim = dim;
    if (!rc.is_proper()) throw std::domain_error("not proper at infinity");
    std::size_t total = 0;
    std::size_t zero_mult = dim;
    if (!rc.is_zero()) {
        const Polynomial& den = rc.den();
        if (gcd(den, den.derivative()).degree() > 0)
            throw std::domain_error("renormalized Cauchy transform must have simple poles");
        const unsigned long prec =
            std::max(suggested_precision(den), suggested_precision(rc.num())) + 64;
        const auto roots = real_roots(den, prec);
        if (static_cast<int>(roots.size()) != den.degree())
            throw std::domain_error("denominator has non-real roots");
        const Polynomial dden = den.derivative();
        for (const auto& root : roots) {
            const Residue res = residue_at(rc, root, dden);
            if (root.exact && root.exact->is_zero()) {
                // lim z rc(z) = mult(0) - dim
                const double d = res.value.get_d();
                const double n = std::round(d);
                if (std::fabs(d - n) > 1e-6) throw std::domain_error("non-integer residue");
                if (static_cast<double>(dim) + n < 0) throw std::domain_error("multiplicity sum mismatch");
                zero_mult = static_cast<std::size_t>(static_cast<double>(dim) + n);
                continue;
            }
            const std::size_t m = nearest_count(res.value, "multiplicity");
            if (m == 0) throw std::domain_error("non-integer residue");
            rep.entries.push_back({root.value, m, root.exact});
            total += m;
        }
    }
    if (zero_mult > 0) {
        SpectrumEntry z{0.0, zero_mult, Rational(0)};
        auto it = rep.entries.begin();
        while (it != rep.entries.end() && it->value < 0) ++it;
        rep.entries.insert(it, z);
        total += zero_mult;
    }
    if (total != dim) throw std::domain_error("multiplicity sum mismatch");
    return rep;
}

GreenFactorization factorize_green(const RationalFunction& g) {
    const Polynomial& den = g.den();
    if (g.is_zero() || den.degree() != g.num().degree() + 1 || !g.num().is_monic())
        throw std::domain_error("not a Green function");
    if (gcd(den, den.derivative()).degree() > 0) throw std::domain_error("not a Green function");
    const unsigned long prec = std::max(suggested_precision(den), suggested_precision(g.num())) + 64;
    const auto poles = real_roots(den, prec);
    if (static_cast<int>(poles.size()) != den.degree()) throw std::domain_error("not a Green function");
    const auto zeros = g.num().degree() > 0 ? real_roots(g.num(), prec) : std::vector<RealRoot>{};
    if (static_cast<int>(zeros.size()) != g.num().degree()) throw std::domain_error("not a Green function");

    GreenFactorization out;
    const Polynomial dden = den.derivative();
    mpf_class total(0, prec);
    for (const auto& p : poles) {
        const Residue r = residue_at(g, p, dden);
        if (r.value <= 0) throw std::domain_error("not a Green function");
        total += r.value;
        out.poles.push_back({p.value, r.value.get_d(), p.exact, r.exact});
    }
    if (std::fabs(total.get_d() - 1.0) > 1e-9) throw std::domain_error("not a Green function");
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        if (!(poles[j].precise < zeros[j].precise && zeros[j].precise < poles[j + 1].precise))
            throw std::domain_error("not a Green function");
        out.zeros.push_back(zeros[j].value);
    }
    return out;
}

std::string ratfun_to_json(const RationalFunction& f) {
    nlohmann::json j;
    j["num"] = nlohmann::json::array();
    j["den"] = nlohmann::json::array();
    for (const auto& c : f.num().coefficients()) j["num"].push_back(c.to_string());
    for (const auto& c : f.den().coefficients()) j["den"].push_back(c.to_string());
    return j.dump();
}

RationalFunction ratfun_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        auto read = [&](const char* key) {
            std::vector<Rational> c;
            for (const auto& s : j.at(key)) c.push_back(Rational::parse(s.get<std::string>()));
            return Polynomial(c);
        };
        return {read("num"), read("den")};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad rational function JSON: ") + e.what());
    }
}

}  // namespace cyclic_spectra
