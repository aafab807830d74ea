#include "cyclic_spectra/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "cyclic_spectra/convolutions.hpp"
#include "cyclic_spectra/cumulants.hpp"
#include "cyclic_spectra/graph.hpp"
#include "cyclic_spectra/models_oracle.hpp"
#include "json.hpp"

namespace cyclic_spectra {

namespace {

using json = nlohmann::json;

struct Trial {
    json input;
    std::vector<std::string> mismatches;
    void expect(bool ok, const std::string& what) {
        if (!ok) mismatches.push_back(what);
    }
};

RootedGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices) {
    return random_rooted_graph(rng, 1 + rng() % max_vertices, 0.5);
}

json graph_json(const RootedGraph& g) { return json::parse(to_json(g)); }

RatMatrix random_symmetric(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<int> u(-2, 2);
    RatMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) m(i, j) = m(j, i) = Rational(u(rng));
    return m;
}

json matrix_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

void pair_input(Trial& t, const RootedGraph& g1, const RootedGraph& g2) {
    t.input = {{"g1", graph_json(g1)}, {"g2", graph_json(g2)}};
}

void h_additivity(std::mt19937_64& rng, const SuiteConfig& c, Trial& t) {
    const auto g1 = random_graph(rng, c.max_vertices), g2 = random_graph(rng, c.max_vertices);
    pair_input(t, g1, g2);
    const auto s1 = spectral_data(g1), s2 = spectral_data(g2);
    const auto star = spectral_data(star_product(g1, g2));
    const auto lhs = h_transform(star), rhs = h_transform(s1) + h_transform(s2);
    t.expect(lhs == rhs, "H additivity: " + ratfun_diff(lhs, rhs));
    const auto rc = cyclic_boolean_sum(transform_pair(s1), transform_pair(s2)).rc;
    t.expect(rc == renormalized_cauchy(star), "cyclic-Boolean sum: " + ratfun_diff(rc, renormalized_cauchy(star)));
}

void schwenk_star(std::mt19937_64& rng, const SuiteConfig& c, Trial& t) {
    const auto g1 = random_graph(rng, c.max_vertices), g2 = random_graph(rng, c.max_vertices);
    pair_input(t, g1, g2);
    const auto s1 = spectral_data(g1), s2 = spectral_data(g2);
    const auto star = spectral_data(star_product(g1, g2));
    const auto formula = star_char_poly(s1, s2);
    t.expect(formula.phi == star.phi, "phi: " + polynomial_diff(formula.phi, star.phi));
    t.expect(formula.phi_minus_root == star.phi_minus_root,
             "phi minus root: " + polynomial_diff(formula.phi_minus_root, star.phi_minus_root));
    for (const auto& m : star_cauchy_identity_check(s1, s2, star).mismatches)
        t.mismatches.push_back(m.identity + ": " + m.detail);
}

void schwenk_comb(std::mt19937_64& rng, const SuiteConfig& c, Trial& t) {
    const auto g1 = random_graph(rng, c.max_vertices), g2 = random_graph(rng, c.max_vertices);
    pair_input(t, g1, g2);
    const auto s1 = spectral_data(g1), s2 = spectral_data(g2);
    const auto comb = spectral_data(comb_product(g1, g2));
    const auto formula = comb_char_poly(s1, s2);
    t.expect(formula.phi == comb.phi, "phi: " + polynomial_diff(formula.phi, comb.phi));
    t.expect(formula.phi_minus_root == comb.phi_minus_root,
             "phi minus root: " + polynomial_diff(formula.phi_minus_root, comb.phi_minus_root));
    const auto f = monotone_f_compose(f_transform(s1), f_transform(s2));
    t.expect(f == f_transform(comb), "F composition: " + ratfun_diff(f, f_transform(comb)));
}

void comb_trace(std::mt19937_64& rng, const SuiteConfig& c, Trial& t) {
    const auto g1 = random_graph(rng, c.max_vertices), g2 = random_graph(rng, c.max_vertices);
    pair_input(t, g1, g2);
    const auto s1 = spectral_data(g1), s2 = spectral_data(g2);
    const auto rc = comb_renormalized_cauchy(s1, s2);
    const auto expect = renormalized_cauchy(spectral_data(comb_product(g1, g2)));
    t.expect(rc == expect, "comb trace: " + ratfun_diff(rc, expect));
}

void moment_cumulant(std::mt19937_64& rng, const SuiteConfig& c, Trial& t) {
    const auto g1 = random_graph(rng, c.max_vertices), g2 = random_graph(rng, c.max_vertices);
    const std::size_t order = 8;
    auto moments = [&](const RootedGraph& g) {
        return MomentData::from_matrix(to_rational(adjacency(g.graph)), g.root, order);
    };
    const auto m1 = moments(g1), m2 = moments(g2), ms = moments(star_product(g1, g2));
    const auto c1 = cyclic_boolean_cumulants(m1), c2 = cyclic_boolean_cumulants(m2);
    const auto cs = cyclic_boolean_cumulants(ms);
    for (std::size_t n = 1; n <= order; ++n)
        t.expect(cs[n] == c1[n] + c2[n], "additivity of c_" + std::to_string(n));
    for (const auto& s : moment_cumulant_check(ms, cs, order).mismatches) t.mismatches.push_back(s);

    std::vector<RatMatrix> elements;
    json mats = json::array();
    for (int i = 0; i < 3; ++i) {
        elements.push_back(random_symmetric(rng, 2));
        mats.push_back(matrix_json(elements.back()));
    }
    std::vector<int> word(1 + rng() % 6);
    for (int& x : word) x = static_cast<int>(rng() % 3);
    for (const auto& s : moment_cumulant_check(tensor_model_oracle(elements), word).mismatches)
        t.mismatches.push_back(s);
    t.input = {{"g1", graph_json(g1)}, {"g2", graph_json(g2)}, {"elements", mats}, {"word", word}};
}

void mixed_words(std::mt19937_64& rng, const SuiteConfig&, Trial& t) {
    const std::size_t n = 3;
    std::vector<std::size_t> dims;
    std::vector<RatMatrix> mats;
    json jm = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        dims.push_back(2 + rng() % 2);
        mats.push_back(random_symmetric(rng, dims.back()));
        jm.push_back(matrix_json(mats.back()));
    }
    // alternating word
    MixedWord w;
    const std::size_t len = 1 + rng() % 6;
    while (w.size() < len) {
        const std::size_t a = rng() % n;
        if (!w.empty() && w.back().algebra == a) continue;
        w.push_back({a, static_cast<unsigned>(1 + rng() % 2)});
    }
    json jw = json::array();
    for (const auto& l : w) jw.push_back({l.algebra, l.power});
    t.input = {{"matrices", jm}, {"word", jw}};

    OperatorModel model(dims);
    std::vector<MomentTable> bt, mt;
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        MomentTable b, m;
        b.phi.assign(13, Rational(0));
        b.omega = b.phi;
        RatMatrix p = RatMatrix::identity(dims[i]);
        for (unsigned k = 1; k <= 12; ++k) {
            p = p * mats[i];
            b.phi[k] = p(0, 0);
            b.omega[k] = p.trace();
        }
        m = b;
        for (auto& x : m.omega) x *= scale;
        scale *= Rational(static_cast<long>(dims[i]));
        bt.push_back(b);
        mt.push_back(m);
    }
    RatMatrix pb = RatMatrix::identity(model.total_dim()), pm = pb;
    for (const auto& l : w) {
        RatMatrix a = RatMatrix::identity(dims[l.algebra]);
        for (unsigned k = 0; k < l.power; ++k) a = a * mats[l.algebra];
        pb = pb * model.boolean_embed(l.algebra, a);
        pm = pm * model.monotone_embed(l.algebra, a);
    }
    t.expect(eval_cyclic_boolean_word(w, bt, Functional::omega) == pb.trace(), "cyclic-Boolean omega");
    t.expect(eval_cyclic_boolean_word(w, bt, Functional::phi) == OperatorModel::vacuum(pb), "cyclic-Boolean phi");
    for (auto order : {PeelOrder::leftmost, PeelOrder::rightmost}) {
        const std::string tag = order == PeelOrder::leftmost ? " (leftmost)" : " (rightmost)";
        t.expect(eval_cyclic_monotone_word(w, mt, Functional::omega, order) == pm.trace(),
                 "cyclic-monotone omega" + tag);
        t.expect(eval_cyclic_monotone_word(w, mt, Functional::phi, order) == OperatorModel::vacuum(pm),
                 "cyclic-monotone phi" + tag);
    }
}

using SuiteFn = std::function<void(std::mt19937_64&, const SuiteConfig&, Trial&)>;

const std::map<std::string, SuiteFn>& suites() {
    static const std::map<std::string, SuiteFn> s{
        {"h-additivity", h_additivity}, {"schwenk-star", schwenk_star},       {"schwenk-comb", schwenk_comb},
        {"comb-trace", comb_trace},     {"moment-cumulant", moment_cumulant}, {"mixed-words", mixed_words},
    };
    return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"h-additivity", "schwenk-star",    "schwenk-comb",
                                                "comb-trace",   "moment-cumulant", "mixed-words"};
    return names;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("CYCLIC_SPECTRA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SuiteReport run_suite(const std::string& suite, const SuiteConfig& config) {
    const auto it = suites().find(suite);
    if (it == suites().end()) throw std::invalid_argument("unknown suite: " + suite);
    if (config.max_vertices == 0) throw std::invalid_argument("max vertices must be >= 1");
    std::vector<Trial> results(config.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < config.trials;) {
            // each trial has its own stream so results do not depend on scheduling
            std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                              static_cast<std::uint32_t>(i)};
            std::mt19937_64 rng(seq);
            try {
                it->second(rng, config, results[i]);
            } catch (const std::exception& e) {
                results[i].mismatches.push_back(std::string("exception: ") + e.what());
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    SuiteReport r;
    r.suite = suite;
    r.seed = config.seed;
    r.trials = config.trials;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (results[i].mismatches.empty()) {
            ++r.passed;
        } else {
            r.failures.push_back({i, results[i].input.dump(), results[i].mismatches});
        }
    }
    return r;
}

std::string suite_report_json(const SuiteReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"trial", f.trial}, {"input", json::parse(f.input)}, {"mismatches", f.mismatches}});
    json j = {{"schema", "cyclic-spectra/1"},
              {"suite", r.suite},
              {"seed", r.seed},
              {"trials", r.trials},
              {"passed", r.passed},
              {"failed", r.failures.size()},
              {"failures", failures}};
    return j.dump(2);
}

}  // namespace cyclic_spectra
