#include <sstream>

#include "doctest.h"
#include "test_util.hpp"

#include "cyclic_spectra/graph.hpp"
#include "cyclic_spectra/models_oracle.hpp"

using namespace cs_test;

TEST_CASE("named families") {
    CHECK(complete_graph(2).graph.edge_count() == 1);
    auto s5 = star_graph(5);
    CHECK(s5.n() == 6);
    CHECK(s5.graph.degrees()[s5.root] == 5);
    auto f2 = friendship_graph(2);
    CHECK(f2.n() == 5);
    CHECK(f2.graph.degrees()[f2.root] == 4);
    CHECK(path_graph(4).graph.edge_count() == 3);
    CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("star:0"), std::invalid_argument);
    CHECK(named_graph("complete:3") == complete_graph(3));
    CHECK_THROWS_AS(named_graph("cube:3"), std::invalid_argument);
}

TEST_CASE("adjacency") {
    CHECK(adjacency(complete_graph(2).graph) == IntMatrix{{0, 1}, {1, 0}});
    CHECK(adjacency(complete_graph(3).graph) == IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(adjacency(star_graph(2).graph) == IntMatrix{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK(Graph(3, {{1, 0}, {0, 1}}).edge_count() == 1);
}

TEST_CASE("star product") {
    const auto k2 = complete_graph(2);
    CHECK(star_product(k2, k2) == star_graph(2));
    for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(star_power(k2, n) == star_graph(n));
        CHECK(star_power(complete_graph(3), n) == friendship_graph(n));
    }
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto a = random_rooted_graph(rng, 1 + rng() % 6, 0.5);
        auto b = random_rooted_graph(rng, 1 + rng() % 6, 0.5);
        auto c = random_rooted_graph(rng, 1 + rng() % 5, 0.5);
        auto s = star_product(a, b);
        CHECK(s.n() == a.n() + b.n() - 1);
        CHECK(s.graph.edge_count() == a.graph.edge_count() + b.graph.edge_count());
        CHECK(star_product(star_product(a, b), c) == star_product(a, star_product(b, c)));
        // removal of the root splits the graph
        auto dr = delete_root(s);
        auto da = delete_root(a), db = delete_root(b);
        std::vector<Edge> e = da.edges();
        for (auto [i, j] : db.edges()) e.emplace_back(i + da.n(), j + da.n());
        // the root-deleted labels of s: a's non-root vertices in order, then b's
        CHECK(dr == Graph(da.n() + db.n(), e));
    }
}

TEST_CASE("comb product") {
    const auto k2 = complete_graph(2);
    const auto c = comb_product(k2, k2);
    CHECK(c.n() == 4);
    CHECK(c.graph.edge_count() == 3);
    CHECK(c.graph.degrees()[c.root] == 2);
    CHECK(comb_product(k2, comb_product(k2, k2)).n() == 8);

    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        auto g1 = random_rooted_graph(rng, 1 + rng() % 5, 0.5);
        auto g2 = random_rooted_graph(rng, 1 + rng() % 5, 0.5);
        auto g3 = random_rooted_graph(rng, 1 + rng() % 3, 0.5);
        auto a1 = RatMatrix::from(adjacency(g1.graph)), a2 = RatMatrix::from(adjacency(g2.graph));
        RatMatrix p2(g2.n());
        p2(g2.root, g2.root) = Rational(1);
        const auto expected = kron(a1, p2) + kron(RatMatrix::identity(g1.n()), a2);
        const auto comb = comb_product(g1, g2);
        CHECK(RatMatrix::from(adjacency(comb.graph)) == expected);
        CHECK(comb_product(comb_product(g1, g2), g3) == comb_product(g1, comb_product(g2, g3)));
    }
}

TEST_CASE("delete root") {
    CHECK(delete_root(complete_graph(2)) == Graph(1, {}));
    CHECK(delete_root(star_graph(4)) == Graph(4, {}));
    CHECK(delete_root(RootedGraph(Graph(1, {}), 0)).n() == 0);
}

TEST_CASE("io round trip") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        auto g = random_rooted_graph(rng, 1 + rng() % 9, 0.4);
        const std::string text = to_edge_list(g);
        CHECK(parse_graph(text) == g);
        CHECK(to_edge_list(parse_graph(text)) == text);
        const std::string js = to_json(g);
        CHECK(parse_graph(js) == g);
        CHECK(to_json(parse_graph(js)) == js);
    }
    CHECK_THROWS_AS(parse_graph("n 3 root 5\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("n 3 root 0\n0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("{\"n\": 2}"), std::invalid_argument);
    CHECK(parse_graph("# comment\nn 2 root 1\n0 1 # edge\n") == RootedGraph(Graph(2, {{0, 1}}), 1));
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(star_graph(kMaxVertices), std::invalid_argument);
    CHECK_THROWS_AS(comb_power(complete_graph(2), 15), std::invalid_argument);
}
