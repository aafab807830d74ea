#include <cmath>

#include "doctest.h"
#include "test_util.hpp"

#include "cyclic_spectra/charpoly.hpp"
#include "cyclic_spectra/models_oracle.hpp"
#include "cyclic_spectra/root_isolation.hpp"
#include "cyclic_spectra/transforms.hpp"

using namespace cs_test;
using RF = RationalFunction;

namespace {

void check_same_spectrum(const SpectrumReport& a, const SpectrumReport& b, double tol = 1e-9) {
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(std::fabs(a.entries[i].value - b.entries[i].value) <= tol);
        CHECK(a.entries[i].multiplicity == b.entries[i].multiplicity);
    }
}

}  // namespace

TEST_CASE("characteristic polynomials") {
    CHECK(charpoly(adjacency(complete_graph(2).graph)) == P({-1, 0, 1}));
    CHECK(charpoly(adjacency(complete_graph(3).graph)) == P({-2, -3, 0, 1}));
    CHECK(charpoly(IntMatrix{{0}}) == P({0, 1}));
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        auto g = random_rooted_graph(rng, 1 + rng() % 12, 0.5);
        const auto a = adjacency(g.graph);
        CHECK(charpoly_modular(a) == charpoly_faddeev_leverrier(a));
    }
    IntMatrix m{{3, -7, 2}, {5, 0, 11}, {-4, 9, -1}};
    CHECK(charpoly_modular(m) == charpoly_faddeev_leverrier(m));
}

TEST_CASE("spectral data and Green functions") {
    auto k2 = spectral_data(complete_graph(2));
    CHECK(k2.phi == P({-1, 0, 1}));
    CHECK(k2.phi_minus_root == P({0, 1}));
    CHECK(k2.dim == 2);
    auto k3 = spectral_data(complete_graph(3));
    CHECK(k3.phi == P({-2, -3, 0, 1}));
    CHECK(k3.phi_minus_root == P({-1, 0, 1}));
    auto k1 = spectral_data(complete_graph(1));
    CHECK(k1.phi == P({0, 1}));
    CHECK(k1.phi_minus_root == P({1}));

    CHECK(green(k2) == RF(P({0, 1}), P({-1, 0, 1})));
    CHECK(green(k3) == RF(P({2}), P({1, 1})).scaled(Rational(1, 3)) + RF(P({1}), P({-2, 1})).scaled(Rational(1, 3)));
    CHECK(green(k1) == RF(P({1}), P({0, 1})));
    CHECK(f_transform(k2) == RF(P({-1, 0, 1}), P({0, 1})));
    CHECK(renormalized_cauchy(k2) ==
          RF(P({1}), P({-1, 1})) + RF(P({1}), P({1, 1})) - RF(P({2}), P({0, 1})));
    CHECK(renormalized_cauchy(k1).is_zero());
    CHECK(h_transform(k2).is_zero());
    CHECK(h_transform(k1).is_zero());
}

TEST_CASE("phi = F * phi_minus_root on random graphs") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; ++t) {
        auto g = random_rooted_graph(rng, 1 + rng() % 8, 0.5);
        auto sd = spectral_data(g);
        CHECK(f_transform(sd) * RF(sd.phi_minus_root) == RF(sd.phi));
    }
}

TEST_CASE("h coefficients") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 30; ++t) {
        auto g = random_rooted_graph(rng, 1 + rng() % 7, 0.5);
        auto sd = spectral_data(g);
        auto h = laurent_at_infinity(h_transform(sd), 6);
        const auto a = adjacency(g.graph);
        auto phi = [&](unsigned k) { return Rational(vacuum_moment(a, g.root, k)); };
        auto om = [&](unsigned k) { return Rational(trace_moment(a, k)); };
        // H = sum h_n z^{-n-1}
        CHECK(h[2] == om(1) - phi(1));
        CHECK(h[3] == om(2) + phi(1) * phi(1) - Rational(2) * phi(2));
    }
}

TEST_CASE("laurent expansion at infinity") {
    auto s = laurent_at_infinity(RF(P({0, 1}), P({-1, 0, 1})), 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(s[n] == Rational(n % 2 == 1 ? 1 : 0));
    auto g = laurent_at_infinity(renormalized_cauchy(spectral_data(complete_graph(2))), 8);
    for (std::size_t n = 0; n <= 8; ++n) CHECK(g[n] == Rational(n >= 3 && n % 2 == 1 ? 2 : 0));
    auto inv = laurent_at_infinity(RF(P({1}), P({0, 1})), 4);
    CHECK(inv[1] == Rational(1));
    CHECK(inv[2].is_zero());
    CHECK_THROWS_WITH_AS(laurent_at_infinity(RF(P({0, 0, 1}), P({1, 1}))), "not proper at infinity",
                         std::domain_error);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        auto g = random_rooted_graph(rng, 1 + rng() % 8, 0.5);
        auto sd = spectral_data(g);
        const auto a = adjacency(g.graph);
        auto gs = laurent_at_infinity(green(sd), 13);
        auto rs = laurent_at_infinity(renormalized_cauchy(sd), 13);
        for (unsigned n = 0; n <= 12; ++n) {
            CHECK(gs[n + 1] == Rational(vacuum_moment(a, g.root, n)));
            if (n >= 1) CHECK(rs[n + 1] == Rational(trace_moment(a, n)));
        }
    }
}

TEST_CASE("series ops agree with rational function ops") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 20; ++t) {
        auto g1 = spectral_data(random_rooted_graph(rng, 1 + rng() % 6, 0.5));
        auto g2 = spectral_data(random_rooted_graph(rng, 1 + rng() % 6, 0.5));
        const auto a = green(g1), b = green(g2);
        const std::size_t K = 16;
        CHECK(laurent_at_infinity(a + b, K) == laurent_at_infinity(a, K) + laurent_at_infinity(b, K));
        CHECK(laurent_at_infinity(a * b, K) == laurent_at_infinity(a, K) * laurent_at_infinity(b, K));
        // z G = 1 + ..., so 1/(zG) matches the series reciprocal
        auto zg = laurent_at_infinity(RF::z() * a, K);
        CHECK(laurent_at_infinity((RF::z() * a).reciprocal(), K) == zg.reciprocal());
    }
}

TEST_CASE("root isolation") {
    auto r = real_roots(P({-2, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(std::fabs(r[0].value + std::sqrt(2.0)) < 1e-12);
    CHECK(std::fabs(r[1].value - std::sqrt(2.0)) < 1e-12);
    CHECK(!r[0].exact);
    auto q = real_roots(P({1, -3}) * P({-2, 0, 0, 1}) * P({0, 1}) * P({0, 1}));
    REQUIRE(q.size() == 3);
    CHECK(q[0].exact == Rational(0));
    CHECK(q[1].exact == Rational(1, 3));
    CHECK(std::fabs(q[2].value - std::cbrt(2.0)) < 1e-12);
    CHECK(real_roots(P({1, 0, 1})).empty());
    CHECK(count_real_roots(P({-1, 0, 1}), Rational(-1), Rational(1)) == 1);
    // close roots
    auto c = real_roots(P({-1000001, 1000}) * P({-1000, 1}));
    REQUIRE(c.size() == 2);
    CHECK(c[0].exact == Rational(1000));
    CHECK(c[1].exact == Rational(1000001, 1000));
    // polished roots keep the requested precision
    auto s = real_roots(P({-2, 0, 1}), 512);
    CHECK(s[1].precise.get_prec() >= 512);
    mpf_class err = s[1].precise * s[1].precise - 2;
    CHECK(abs(err) < mpf_class(1e-140));
}

TEST_CASE("extract spectrum: star and friendship") {
    for (long n : {1L, 2L, 4L, 5L, 9L}) {
        // 1/(z - sqrt N) + 1/(z + sqrt N) - 2/z
        RF rc = RF(P({0, 2}), P({-n, 0, 1})) - RF(P({2}), P({0, 1}));
        auto rep = extract_spectrum(rc, static_cast<std::size_t>(n) + 1);
        const double s = std::sqrt(static_cast<double>(n));
        if (n == 1) {
            REQUIRE(rep.entries.size() == 2);
            CHECK(rep.entries[0].value == doctest::Approx(-1).epsilon(1e-12));
            continue;
        }
        REQUIRE(rep.entries.size() == 3);
        CHECK(std::fabs(rep.entries[0].value + s) < 1e-12);
        CHECK(rep.entries[1].value == 0);
        CHECK(rep.entries[1].multiplicity == static_cast<std::size_t>(n - 1));
        CHECK(std::fabs(rep.entries[2].value - s) < 1e-12);
        CHECK(rep.entries[2].multiplicity == 1);
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        auto sd = spectral_data(friendship_graph(n));
        auto rep = extract_spectrum(renormalized_cauchy(sd), 2 * n + 1);
        const double r = std::sqrt(1.0 + 8.0 * static_cast<double>(n));
        std::vector<std::pair<double, std::size_t>> want{{(1 - r) / 2, 1}, {-1, n}, {1, n - 1}, {(1 + r) / 2, 1}};
        if (n == 1) want = {{-1, 2}, {2, 1}};
        REQUIRE(rep.entries.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(std::fabs(rep.entries[i].value - want[i].first) < 1e-12);
            CHECK(rep.entries[i].multiplicity == want[i].second);
        }
    }
    auto zero = extract_spectrum(RF(), 3);
    REQUIRE(zero.entries.size() == 1);
    CHECK(zero.entries[0].multiplicity == 3);
    CHECK_THROWS_WITH_AS(extract_spectrum(RF(Polynomial({Rational(1, 2)}), P({-1, 1})), 2), "non-integer residue",
                         std::domain_error);
    CHECK_THROWS_AS(extract_spectrum(RF(P({1}), P({-1, 1})), 5), std::domain_error);
}

TEST_CASE("extract spectrum agrees with the Jacobi oracle") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 60; ++t) {
        auto g = random_rooted_graph(rng, 1 + rng() % 10, 0.45);
        auto sd = spectral_data(g);
        check_same_spectrum(extract_spectrum(renormalized_cauchy(sd), sd.dim),
                            eigensolve(to_real(adjacency(g.graph))));
    }
}

TEST_CASE("factorize green") {
    auto f = factorize_green(green(spectral_data(complete_graph(3))));
    REQUIRE(f.poles.size() == 2);
    CHECK(f.poles[0].exact_value == Rational(-1));
    CHECK(f.poles[0].exact_weight == Rational(2, 3));
    CHECK(f.poles[1].exact_value == Rational(2));
    CHECK(f.poles[1].exact_weight == Rational(1, 3));
    REQUIRE(f.zeros.size() == 1);
    CHECK(f.zeros[0] == doctest::Approx(1.0));

    auto one = factorize_green(RF(P({1}), P({-3, 1})));
    REQUIRE(one.poles.size() == 1);
    CHECK(one.poles[0].exact_weight == Rational(1));
    CHECK(one.zeros.empty());

    auto two = factorize_green(RF(P({0, 1}), P({-2, 1}) * P({1, 1})));
    CHECK(two.zeros.size() == 1);
    CHECK(two.zeros[0] == 0.0);

    CHECK_THROWS_WITH_AS(factorize_green(RF(P({0, 1}), P({-2, 1}) * P({-1, 1}))), "not a Green function",
                         std::domain_error);
    CHECK_THROWS_AS(factorize_green(RF(P({-5, 1}), P({-2, 1}) * P({1, 1}))), std::domain_error);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; ++t) {
        auto g = random_rooted_graph(rng, 1 + rng() % 9, 0.5);
        auto fz = factorize_green(green(spectral_data(g)));
        double total = 0;
        for (const auto& p : fz.poles) total += p.weight;
        CHECK(total == doctest::Approx(1.0));
    }
}

TEST_CASE("rational function JSON") {
    RF f(P({1, -2}), P({3, 0, 2}));
    CHECK(ratfun_from_json(ratfun_to_json(f)) == f);
    CHECK(ratfun_to_json(RF(P({0, 1}), P({-1, 0, 1}))) == R"({"den":["-1","0","1"],"num":["0","1"]})");
}
