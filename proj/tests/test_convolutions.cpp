#include "doctest.h"
#include "test_util.hpp"

#include "cyclic_spectra/convolutions.hpp"

using namespace cs_test;
using RF = RationalFunction;

namespace {

const RootedSpectralData& k1() {
    static const auto sd = spectral_data(complete_graph(1));
    return sd;
}
const RootedSpectralData& k2() {
    static const auto sd = spectral_data(complete_graph(2));
    return sd;
}
const RootedSpectralData& k3() {
    static const auto sd = spectral_data(complete_graph(3));
    return sd;
}

}  // namespace

TEST_CASE("boolean F sum") {
    const RF fk2 = f_transform(k2());
    CHECK(boolean_f_sum(fk2, fk2) == RF(P({-2, 0, 1}), P({0, 1})));
    CHECK(boolean_f_sum(fk2, fk2) == f_transform(spectral_data(star_graph(2))));
    CHECK(boolean_f_sum(fk2, RF::z()) == fk2);
    RF acc = fk2;
    for (long n = 2; n <= 16; ++n) {
        acc = boolean_f_sum(acc, fk2);
        CHECK(acc == RF(P({-n, 0, 1}), P({0, 1})));
        const RF g = green(k2());
        CHECK(acc == g.reciprocal().scaled(Rational(n)) - RF::z().scaled(Rational(n - 1)));
    }
}

TEST_CASE("cyclic Boolean sum") {
    const auto a = transform_pair(k2());
    const auto s = cyclic_boolean_sum(a, a);
    CHECK(s.rc == RF(P({0, 2}), P({-2, 0, 1})) - RF(P({2}), P({0, 1})));
    CHECK(cyclic_boolean_sum(a, transform_pair(k1())).rc == a.rc);

    const auto f = transform_pair(k3());
    TransformPair acc = f;
    for (std::size_t n = 2; n <= 6; ++n) {
        acc = cyclic_boolean_sum(acc, f);
        const auto fn = spectral_data(friendship_graph(n));
        CHECK(acc.rc == renormalized_cauchy(fn));
        CHECK(acc.g == green(fn));
        const auto pw = cyclic_boolean_power(f, n);
        CHECK(pw.rc == acc.rc);
        CHECK(pw.g == acc.g);
    }
}

TEST_CASE("Schwenk star formula") {
    auto s = star_char_poly(k2(), k2());
    CHECK(s.phi == P({0, -2, 0, 1}));
    CHECK(s.phi_minus_root == P({0, 0, 1}));
    CHECK(s.dim == 3);
    CHECK(star_char_poly(k3(), k1()) == k3());
    CHECK(star_char_poly(k3(), k3()).phi == P({-1, 1}) * P({1, 1}) * P({1, 1}) * P({-4, -1, 1}));
}

TEST_CASE("monotone composition and Schwenk comb formula") {
    const RF fk2 = f_transform(k2());
    const auto p4 = spectral_data(comb_product(complete_graph(2), complete_graph(2)));
    CHECK(monotone_f_compose(fk2, fk2) == f_transform(p4));
    CHECK(monotone_f_compose(fk2, RF::z()) == fk2);
    CHECK(monotone_f_compose(monotone_f_compose(fk2, fk2), fk2) == monotone_f_compose(fk2, monotone_f_compose(fk2, fk2)));

    auto c = comb_char_poly(k2(), k2());
    CHECK(c.phi == P({1, 0, -3, 0, 1}));
    CHECK(c == p4);
    CHECK(comb_char_poly(k3(), k1()) == k3());
    const auto three = comb_power(complete_graph(2), 3);
    CHECK(comb_char_poly(k2(), c) == spectral_data(three));
}

TEST_CASE("comb renormalized Cauchy transform") {
    const auto p4 = spectral_data(comb_product(complete_graph(2), complete_graph(2)));
    CHECK(comb_renormalized_cauchy(k2(), k2()) == renormalized_cauchy(p4));
    CHECK(cyclic_monotone_sum(RF(), renormalized_cauchy(k2()), f_transform(k2())) == renormalized_cauchy(k2()));
    CHECK(cyclic_monotone_sum(renormalized_cauchy(k3()), RF(), RF::z()) == renormalized_cauchy(k3()));
    // The variant with d * rc_G in place of d * rc_H fails on K3 ▷ K2.
    const auto g = spectral_data(comb_product(complete_graph(3), complete_graph(2)));
    CHECK(comb_renormalized_cauchy_misprint(k3(), k2()) != renormalized_cauchy(g));
}

TEST_CASE("K-transform") {
    auto k = k_transform(renormalized_cauchy(k2()), 10);
    for (std::size_t n = 1; n <= 10; ++n)
        CHECK(k[n] == (n % 2 == 0 ? Rational(-2) / Rational(static_cast<long>(n)) : Rational(0)));
    CHECK(rc_series_from_k(k) == laurent_at_infinity(renormalized_cauchy(k2()), 10));
    const TruncatedSeries zero(11);
    CHECK(k_transform_sum(zero, k, f_transform(k3())) == k);

    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        auto a = spectral_data(random_rooted_graph(rng, 1 + rng() % 5, 0.5));
        auto b = spectral_data(random_rooted_graph(rng, 1 + rng() % 5, 0.5));
        const std::size_t K = 12;
        auto sum = k_transform_sum(k_transform(renormalized_cauchy(a), K), k_transform(renormalized_cauchy(b), K),
                                   f_transform(b));
        auto rc = cyclic_monotone_sum(renormalized_cauchy(a), renormalized_cauchy(b), f_transform(b));
        CHECK(sum == k_transform(rc, K));
    }
}

TEST_CASE("random identity corpus") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        auto g1 = random_rooted_graph(rng, 1 + rng() % 8, 0.5);
        auto g2 = random_rooted_graph(rng, 1 + rng() % 8, 0.5);
        auto s1 = spectral_data(g1), s2 = spectral_data(g2);
        auto star = spectral_data(star_product(g1, g2));
        CHECK(h_transform(star) == h_transform(s1) + h_transform(s2));
        CHECK(star_char_poly(s1, s2) == star);
        CHECK(cyclic_boolean_sum(transform_pair(s1), transform_pair(s2)).rc == renormalized_cauchy(star));
        CHECK(star_cauchy_identity_check(s1, s2, star).ok);
        if (g1.n() <= 5 && g2.n() <= 4) {
            auto comb = spectral_data(comb_product(g1, g2));
            CHECK(comb_char_poly(s1, s2) == comb);
            CHECK(comb_renormalized_cauchy(s1, s2) == renormalized_cauchy(comb));
        }
    }
}

TEST_CASE("star Cauchy identity check") {
    CHECK(star_cauchy_identity_check(k2(), k2(), spectral_data(star_graph(2))).ok);
    CHECK(star_cauchy_identity_check(k3(), k2(), spectral_data(star_product(complete_graph(3), complete_graph(2)))).ok);
    auto bad = spectral_data(star_graph(2));
    bad.phi_minus_root = P({1, 0, 1});
    auto r = star_cauchy_identity_check(k2(), k2(), bad);
    CHECK_FALSE(r.ok);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(!r.mismatches[0].detail.empty());
}
