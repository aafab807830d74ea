// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "cyclic_spectra/convolutions.hpp"
#include "cyclic_spectra/cumulants.hpp"
#include "cyclic_spectra/limits_id.hpp"
#include "cyclic_spectra/partitions.hpp"
#include "cyclic_spectra/verify.hpp"

using namespace cyclic_spectra;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void fail(const std::string& what) {
        if (ok) note << "first failure: " << what << "; ";
        ok = false;
    }
};

using Expected = std::vector<std::pair<double, std::size_t>>;

bool spectrum_matches(const SpectrumReport& s, const Expected& expect, double tol = 1e-9) {
    if (s.entries.size() != expect.size()) return false;
    for (std::size_t i = 0; i < expect.size(); ++i) {
        if (std::abs(s.entries[i].value - expect[i].first) > tol) return false;
        if (s.entries[i].multiplicity != expect[i].second) return false;
    }
    return true;
}

bool spectra_agree(const SpectrumReport& a, const SpectrumReport& b, double tol = 1e-9) {
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (std::abs(a.entries[i].value - b.entries[i].value) > tol * std::max(1.0, std::abs(a.entries[i].value)))
            return false;
        if (a.entries[i].multiplicity != b.entries[i].multiplicity) return false;
    }
    return true;
}

RatMatrix random_symmetric(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<int> u(-2, 2);
    RatMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) m(i, j) = m(j, i) = Rational(u(rng));
    return m;
}

MomentData moments_of_pair(const TransformPair& p, std::size_t order) {
    const TruncatedSeries g = laurent_at_infinity(p.g, order + 1);
    const TruncatedSeries rc = laurent_at_infinity(p.rc, order + 1);
    std::vector<Rational> phi, omega;
    for (std::size_t n = 1; n <= order; ++n) {
        phi.push_back(g[n + 1]);
        omega.push_back(rc[n + 1]);
    }
    return MomentData::from_sequences(phi, omega);
}

// 1
void star_spectrum(Outcome& o) {
    const auto k2 = transform_pair(spectral_data(complete_graph(2)));
    double worst = 0;
    for (std::size_t N : {2, 4, 9, 16, 25, 64}) {
        const auto t0 = Clock::now();
        const auto s = extract_spectrum(cyclic_boolean_power(k2, N).rc, N + 1);
        const double r = std::sqrt(static_cast<double>(N));
        if (!spectrum_matches(s, {{-r, 1}, {0, N - 1}, {r, 1}})) o.fail("N=" + std::to_string(N));
        const double t = seconds_since(t0);
        worst = std::max(worst, t);
        if (t >= 1) o.fail("N=" + std::to_string(N) + " took " + std::to_string(t) + " s");
    }
    o.note << "slowest N " << worst << " s";
}

// 2
void friendship_spectrum(Outcome& o) {
    const auto k3 = transform_pair(spectral_data(complete_graph(3)));
    double worst = 0;
    for (std::size_t N = 1; N <= 50; ++N) {
        const auto t0 = Clock::now();
        const auto s = extract_spectrum(cyclic_boolean_power(k3, N).rc, 2 * N + 1);
        const double q = std::sqrt(1.0 + 8.0 * N);
        std::map<double, std::size_t> m;
        m[(1 - q) / 2] += 1;
        m[-1] += N;
        if (N > 1) m[1] += N - 1;
        m[(1 + q) / 2] += 1;
        Expected expect(m.begin(), m.end());
        if (!spectrum_matches(s, expect)) o.fail("N=" + std::to_string(N));
        const double t = seconds_since(t0);
        worst = std::max(worst, t);
        if (t >= 1) o.fail("N=" + std::to_string(N) + " slow");
    }
    o.note << "slowest N " << worst << " s";
}

// 3
void identity_suite(Outcome& o) {
    const auto t0 = Clock::now();
    SuiteConfig c;
    c.trials = 100;
    c.max_vertices = 8;
    c.seed = 2024;
    c.threads = default_thread_count();
    std::size_t failures = 0;
    for (const std::string s : {"h-additivity", "schwenk-star", "schwenk-comb", "comb-trace"}) {
        const auto r = run_suite(s, c);
        failures += r.failures.size();
        if (!r.ok()) o.fail(s + ": " + r.failures.front().mismatches.front());
    }
    const double t = seconds_since(t0);
    if (t >= 60) o.fail("took " + std::to_string(t) + " s");
    o.note << "4 suites x 100 pairs (star-Cauchy log-derivative identity inside schwenk-star), " << failures
           << " failures, " << t << " s";
}

// 4
void oracle_equivalence(Outcome& o) {
    std::size_t graphs = 0;
    auto check = [&](const RootedGraph& g, const RationalFunction& rc, const std::string& label) {
        if (g.n() > 200) return;
        ++graphs;
        try {
            const auto exact = extract_spectrum(rc, g.n());
            const auto numeric = eigensolve(to_real(adjacency(g.graph)));
            if (!spectra_agree(exact, numeric)) o.fail(label);
        } catch (const std::exception& e) {
            o.fail(label + ": " + e.what());
        }
    };
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 100; ++t) {
        const auto g1 = random_rooted_graph(rng, 1 + rng() % 8, 0.5);
        const auto g2 = random_rooted_graph(rng, 1 + rng() % 8, 0.5);
        const auto s1 = spectral_data(g1), s2 = spectral_data(g2);
        check(g1, renormalized_cauchy(s1), "random g1 #" + std::to_string(t));
        check(star_product(g1, g2), cyclic_boolean_sum(transform_pair(s1), transform_pair(s2)).rc,
              "random star #" + std::to_string(t));
        check(comb_product(g1, g2), comb_renormalized_cauchy(s1, s2), "random comb #" + std::to_string(t));
    }
    const auto k2 = spectral_data(complete_graph(2)), k3 = spectral_data(complete_graph(3));
    for (std::size_t N : {2, 9, 64, 199})
        check(star_power(complete_graph(2), N), cyclic_boolean_power(transform_pair(k2), N).rc, "star power K2");
    for (std::size_t N : {5, 50, 99})
        check(star_power(complete_graph(3), N), cyclic_boolean_power(transform_pair(k3), N).rc, "friendship");
    RootedSpectralData comb = k2;
    for (std::size_t N = 2; N <= 7; ++N) {
        comb = comb_char_poly(comb, k2);
        check(comb_power(complete_graph(2), N), renormalized_cauchy(comb), "comb power K2^" + std::to_string(N));
    }
    check(comb_power(complete_graph(3), 4), renormalized_cauchy(comb_char_poly(comb_char_poly(comb_char_poly(k3, k3), k3), k3)),
          "comb power K3^4");
    for (std::size_t n : {10, 60, 200}) check(path_graph(n), renormalized_cauchy(spectral_data(path_graph(n))), "path");
    check(complete_graph(150), renormalized_cauchy(spectral_data(complete_graph(150))), "K150");
    o.note << graphs << " graphs";
}

// 5
void partition_counts(Outcome& o) {
    for (int n = 1; n <= 16; ++n) {
        const auto ci = enumerate_cyclic_interval_partitions(n);
        const auto in = enumerate_interval_partitions(n);
        const std::uint64_t ci_count = (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n);
        const std::uint64_t int_count = std::uint64_t{1} << (n - 1);
        if (ci.size() != ci_count || family_count(n, PartitionFamily::cyclic_interval) != ci_count)
            o.fail("CI(" + std::to_string(n) + ")");
        if (in.size() != int_count || family_count(n, PartitionFamily::interval) != int_count)
            o.fail("Int(" + std::to_string(n) + ")");
        for (const auto& p : ci)
            if (!is_cyclic_interval(p)) o.fail("non-CI element");
        for (const auto& p : in)
            if (!p.is_interval()) o.fail("non-interval element");
        for (std::size_t i = 1; i < ci.size(); ++i)
            if (!(ci[i - 1] < ci[i])) o.fail("CI enumeration not strictly ordered");
    }
    // brute force against all set partitions where the lattice is small enough
    for (int n = 1; n <= 10; ++n) {
        std::uint64_t ci = 0, in = 0;
        for_each_set_partition(n, [&](const SetPartition& p) {
            ci += is_cyclic_interval(p);
            in += p.is_interval();
        });
        if (ci != (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n) || in != std::uint64_t{1} << (n - 1))
            o.fail("brute force n=" + std::to_string(n));
    }
    o.note << "n <= 16 enumerated, n <= 10 cross-checked against SP(n)";
}

// 6
void cumulant_suite(Outcome& o) {
    std::mt19937_64 rng(606);
    std::size_t words = 0;
    for (int model = 0; model < 20; ++model) {
        const std::size_t d = 2 + static_cast<std::size_t>(model % 2);
        std::vector<RatMatrix> el;
        for (int i = 0; i < 3; ++i) el.push_back(random_symmetric(rng, d));
        const auto oracle = tensor_model_oracle(el);
        // vanishing off CI(n), CI-restricted formula and case analysis, n <= 6
        for (int n = 1; n <= 6; ++n) {
            std::vector<int> w(static_cast<std::size_t>(n));
            for (int& x : w) x = static_cast<int>(rng() % 3);
            ++words;
            const auto r = moment_cumulant_check(oracle, w);
            if (!r.ok) o.fail("model " + std::to_string(model) + ": " + r.mismatches.front());
        }
        // univariate formula over CI(n), n <= 8, for each element
        for (const auto& a : el) {
            const auto m = MomentData::from_matrix(a, 0, 8);
            const auto r = moment_cumulant_check(m, cyclic_boolean_cumulants(m), 8);
            if (!r.ok) o.fail("univariate: " + r.mismatches.front());
        }
        // additivity in the tensor model
        const auto a = random_symmetric(rng, d), b = random_symmetric(rng, 2);
        OperatorModel om({d, 2});
        const auto cs = cyclic_boolean_cumulants(
            MomentData::from_matrix(om.boolean_embed(0, a) + om.boolean_embed(1, b), 0, 8));
        const auto ca = cyclic_boolean_cumulants(MomentData::from_matrix(a, 0, 8));
        const auto cb = cyclic_boolean_cumulants(MomentData::from_matrix(b, 0, 8));
        for (std::size_t n = 1; n <= 8; ++n)
            if (cs[n] != ca[n] + cb[n]) o.fail("tensor additivity c_" + std::to_string(n));
    }
    // multivariate formula at n = 7, 8
    for (int model = 0; model < 3; ++model) {
        std::vector<RatMatrix> el;
        for (int i = 0; i < 3; ++i) el.push_back(random_symmetric(rng, 2));
        for (int n : {7, 8}) {
            std::vector<int> w(static_cast<std::size_t>(n));
            for (int& x : w) x = static_cast<int>(rng() % 3);
            ++words;
            const auto r = moment_cumulant_check(tensor_model_oracle(el), w);
            if (!r.ok) o.fail("n=" + std::to_string(n) + ": " + r.mismatches.front());
        }
    }
    // additivity under cyclic_boolean_sum of graph transforms
    for (int t = 0; t < 20; ++t) {
        const auto g1 = random_rooted_graph(rng, 1 + rng() % 8, 0.5);
        const auto g2 = random_rooted_graph(rng, 1 + rng() % 8, 0.5);
        const auto p1 = transform_pair(spectral_data(g1)), p2 = transform_pair(spectral_data(g2));
        const auto c1 = cyclic_boolean_cumulants(moments_of_pair(p1, 8));
        const auto c2 = cyclic_boolean_cumulants(moments_of_pair(p2, 8));
        const auto cs = cyclic_boolean_cumulants(moments_of_pair(cyclic_boolean_sum(p1, p2), 8));
        for (std::size_t n = 1; n <= 8; ++n)
            if (cs[n] != c1[n] + c2[n]) o.fail("cyclic_boolean_sum additivity c_" + std::to_string(n));
    }
    o.note << "20 models, " << words << " partitioned words, additivity n <= 8";
}

// 7
void mixed_words(Outcome& o) {
    SuiteConfig c;
    c.trials = 200;
    c.seed = 2024;
    c.threads = default_thread_count();
    const auto r = run_suite("mixed-words", c);
    if (!r.ok()) o.fail(r.failures.front().mismatches.front());
    o.note << r.passed << "/" << r.trials << " trials";
}

// 8
void beta_values(Outcome& o) {
    const auto t0 = Clock::now();
    const auto t = beta_table(50);
    const std::vector<long> expect{2, 10, 80, 874, 12092, 202384, 3973580};
    for (unsigned n = 1; n <= 7; ++n)
        if (t.beta[n] != expect[n - 1]) o.fail("beta_" + std::to_string(n));
    if (!t.routes_agree) o.fail("direct and gamma routes disagree");
    const auto c = carleman_check(50);
    if (!c.ok) o.fail("Carleman bound at n=" + std::to_string(*c.first_violation));
    const double secs = seconds_since(t0);
    if (secs >= 10) o.fail("slow");
    o.note << "beta_50 has " << t.beta[50].get_str().size() << " digits, " << secs << " s";
}

// 9
void comb_limits(Outcome& o) {
    std::mt19937_64 rng(909);
    std::vector<RatMatrix> factors{to_rational(adjacency(complete_graph(2).graph))};
    for (int i = 0; i < 3; ++i) factors.push_back(random_symmetric(rng, 2));
    for (const auto& a : factors) {
        const auto m = factor_moments(a, 6);
        for (unsigned N = 1; N <= 8; ++N) {
            OperatorModel model(std::vector<std::size_t>(N, 2));
            RatMatrix b(model.total_dim());
            for (unsigned i = 0; i < N; ++i) b = b + model.monotone_embed(i, a);
            RatMatrix p = RatMatrix::identity(b.n());
            for (unsigned k = 1; k <= 6; ++k) {
                p = p * b;
                if (finite_N_comb_moment(2, N, k, m) != p.trace())
                    o.fail("tensor trace N=" + std::to_string(N) + " k=" + std::to_string(k));
            }
        }
    }
    const auto k2 = factor_moments(factors[0], 14);
    const auto beta = beta_table(7).beta;
    for (unsigned n = 1; n <= 7; ++n)
        if (comb_limit_moment(2, 2 * n, k2) != Rational(beta[n])) o.fail("limit moment 2n=" + std::to_string(2 * n));
    for (unsigned n = 1; n <= 4; ++n)
        if (comb_limit_moment_by_partitions(2, 2 * n, k2) != Rational(beta[n])) o.fail("partition sum 2n");
    double worst = 0;
    BigInt d30;
    mpz_ui_pow_ui(d30.get_mpz_t(), 2, 30);
    for (const auto& a : factors) {
        const auto m = factor_moments(a, 8);
        for (unsigned k = 1; k <= 8; ++k) {
            const Rational lim = comb_limit_moment(2, k, m);
            const Rational v = finite_N_comb_moment(2, 30, k, m) / Rational(d30);
            const double err = std::abs((v - lim).to_double());
            if (lim.is_zero()) {
                if (err > 1e-6) o.fail("zero limit k=" + std::to_string(k));
            } else {
                const double rel = err / std::abs(lim.to_double());
                worst = std::max(worst, rel);
                if (rel > 0.01) o.fail("relative error k=" + std::to_string(k));
            }
        }
    }
    o.note << "worst relative error at N=30: " << worst;
}

// 10
void clt(Outcome& o) {
    const auto k3 = complete_graph(3);
    for (std::size_t N : {1, 2, 7, 30, 100}) {
        const auto tr = star_power_trace_moments(k3, N, 6);
        const double q = std::sqrt(1.0 + 8.0 * N), sc = 2.0 * static_cast<double>(N);
        for (unsigned k = 1; k <= 6; ++k) {
            const double closed = (std::pow((1 + q) / 2, k) + std::pow((1 - q) / 2, k) +
                                   static_cast<double>(N) * std::pow(-1.0, k) + static_cast<double>(N - 1)) /
                                  std::pow(sc, k / 2.0);
            const double pipe = tr[k].to_double() / std::pow(sc, k / 2.0);
            if (std::abs(pipe - closed) > 1e-9 * std::max(1.0, std::abs(closed))) o.fail("closed form k");
        }
    }
    std::vector<std::size_t> all(400);
    for (std::size_t i = 0; i < 400; ++i) all[i] = i + 1;
    double worst = 0;
    for (const auto& [N, v] : clt_report(k3, 4, all).finite_N_values) {
        const double slack = std::abs(v - 2) * static_cast<double>(N);
        worst = std::max(worst, slack);
        if (slack > 5) o.fail("N=" + std::to_string(N));
    }
    std::vector<std::size_t> gapN;
    for (std::size_t N = 1; N <= 64; ++N) gapN.push_back(N);
    gapN.push_back(128);
    gapN.push_back(256);
    for (const auto& row : spectral_gap_report(k3, gapN))
        if (row.bulk_max > 2 / std::sqrt(2.0 * static_cast<double>(row.N)))
            o.fail("bulk at N=" + std::to_string(row.N));
    o.note << "max N|omega(s_N^4) - 2| = " << worst;
}

// 11
void id_classifier(Outcome& o) {
    const auto sd = spectral_data(complete_graph(2));
    const auto spec = extract_spectrum(renormalized_cauchy(sd), sd.dim);
    const auto fac = factorize_green(green(sd));
    std::vector<double> w;
    for (const auto& e : spec.entries)
        for (const auto& p : fac.poles)
            if (std::abs(p.value - e.value) < 1e-12) w.push_back(p.weight);
    const auto v = cb_id_classify(spec, w);
    if (!v.divisible || v.id_case != IDCase::two_nonzero) o.fail("K2 with e_1");
    for (auto [a, b] : {std::pair{2, 3}, std::pair{-3, -1}, std::pair{1, 4}}) {
        SpectrumReport s;
        s.entries = {{double(a), 1, Rational(a)}, {double(b), 1, Rational(b)}};
        if (cb_id_classify(s, {0.5, 0.5}).divisible) o.fail("same-sign spectrum accepted");
    }
    std::mt19937_64 rng(1111);
    std::uniform_int_distribution<int> u(1, 9);
    for (int t = 0; t < 10; ++t) {
        const Rational a = -Rational(u(rng)) / Rational(u(rng)), b = Rational(u(rng)) / Rational(u(rng));
        const auto base = cb_id_nth_root(a, b, 1).transforms;
        for (unsigned n = 1; n <= 6; ++n) {
            const auto back = cyclic_boolean_power(cb_id_nth_root(a, b, n).transforms, n);
            if (back.rc != base.rc || back.g != base.g) o.fail("round trip n=" + std::to_string(n));
        }
    }
    o.note << "10 pairs x n <= 6 round trips";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"Star-graph spectrum", star_spectrum},
        {"Friendship-graph spectrum", friendship_spectrum},
        {"Symbolic identity suite", identity_suite},
        {"Oracle equivalence", oracle_equivalence},
        {"Partition counts", partition_counts},
        {"Cumulant suite", cumulant_suite},
        {"Mixed-word oracle", mixed_words},
        {"Beta table", beta_values},
        {"Comb limit moments", comb_limits},
        {"CLT behavior", clt},
        {"ID classifier", id_classifier},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " ["
                  << o.note.str() << "] (" << seconds_since(t0) << " s)" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
