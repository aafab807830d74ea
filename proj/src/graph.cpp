#include "cyclic_spectra/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cyclic_spectra {

namespace {

void check_size(std::size_t n) {
    if (n > kMaxVertices)
        throw std::invalid_argument("graph exceeds " + std::to_string(kMaxVertices) + " vertices");
}

std::size_t parse_size(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    if (v < 1) throw std::invalid_argument("family parameter must be >= 1");
    return static_cast<std::size_t>(v);
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    check_size(n);
    for (auto& [i, j] : edges_) {
        if (i >= n || j >= n) throw std::invalid_argument("edge endpoint out of range");
        if (i == j) throw std::invalid_argument("loops are not allowed");
        if (i > j) std::swap(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> d(n_);
    for (auto [i, j] : edges_) ++d[i], ++d[j];
    return d;
}

std::vector<std::vector<std::size_t>> Graph::neighbors() const {
    std::vector<std::vector<std::size_t>> nb(n_);
    for (auto [i, j] : edges_) {
        nb[i].push_back(j);
        nb[j].push_back(i);
    }
    for (auto& v : nb) std::sort(v.begin(), v.end());
    return nb;
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (auto [i, j] : edges_) e.emplace_back(perm[i], perm[j]);
    return {n_, std::move(e)};
}

Graph Graph::induced(const std::vector<std::size_t>& keep) const {
    std::vector<std::size_t> pos(n_, n_);
    for (std::size_t k = 0; k < keep.size(); ++k) pos.at(keep[k]) = k;
    std::vector<Edge> e;
    for (auto [i, j] : edges_)
        if (pos[i] < n_ && pos[j] < n_) e.emplace_back(pos[i], pos[j]);
    return {keep.size(), std::move(e)};
}

RootedGraph::RootedGraph(Graph g, std::size_t r) : graph(std::move(g)), root(r) {
    if (r >= graph.n()) throw std::invalid_argument("root out of range");
}

IntMatrix adjacency(const Graph& g) {
    IntMatrix a(g.n(), std::vector<std::int64_t>(g.n(), 0));
    for (auto [i, j] : g.edges()) a[i][j] = a[j][i] = 1;
    return a;
}

Graph delete_root(const RootedGraph& g) {
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < g.n(); ++v)
        if (v != g.root) keep.push_back(v);
    return g.graph.induced(keep);
}

RootedGraph star_product(const RootedGraph& g1, const RootedGraph& g2) {
    const std::size_t n1 = g1.n();
    const std::size_t n = n1 + g2.n() - 1;
    check_size(n);
    auto map2 = [&](std::size_t v) {
        if (v == g2.root) return g1.root;
        return n1 + (v < g2.root ? v : v - 1);
    };
    std::vector<Edge> e = g1.graph.edges();
    for (auto [i, j] : g2.graph.edges()) e.emplace_back(map2(i), map2(j));
    return {Graph(n, std::move(e)), g1.root};
}

RootedGraph comb_product(const RootedGraph& g1, const RootedGraph& g2) {
    const std::size_t n1 = g1.n(), n2 = g2.n();
    if (n1 != 0 && n2 > kMaxVertices / n1) check_size(kMaxVertices + 1);
    std::vector<Edge> e;
    e.reserve(n1 * g2.graph.edge_count() + g1.graph.edge_count());
    for (auto [i, j] : g1.graph.edges()) e.emplace_back(i * n2 + g2.root, j * n2 + g2.root);
    for (std::size_t v = 0; v < n1; ++v)
        for (auto [i, j] : g2.graph.edges()) e.emplace_back(v * n2 + i, v * n2 + j);
    return {Graph(n1 * n2, std::move(e)), g1.root * n2 + g2.root};
}

RootedGraph star_power(const RootedGraph& g, std::size_t copies) {
    if (copies == 0) throw std::invalid_argument("need at least one copy");
    RootedGraph r = g;
    for (std::size_t k = 1; k < copies; ++k) r = star_product(r, g);
    return r;
}

RootedGraph comb_power(const RootedGraph& g, std::size_t copies) {
    if (copies == 0) throw std::invalid_argument("need at least one copy");
    RootedGraph r = g;
    for (std::size_t k = 1; k < copies; ++k) r = comb_product(r, g);
    return r;
}

RootedGraph complete_graph(std::size_t d) {
    if (d < 1) throw std::invalid_argument("complete graph needs d >= 1");
    check_size(d);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) e.emplace_back(i, j);
    return {Graph(d, std::move(e)), 0};
}

RootedGraph star_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("star graph needs N >= 1");
    check_size(n + 1);
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= n; ++i) e.emplace_back(0, i);
    return {Graph(n + 1, std::move(e)), 0};
}

RootedGraph friendship_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("friendship graph needs N >= 1");
    check_size(2 * n + 1);
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= n; ++i) {
        e.emplace_back(0, 2 * i - 1);
        e.emplace_back(0, 2 * i);
        e.emplace_back(2 * i - 1, 2 * i);
    }
    return {Graph(2 * n + 1, std::move(e)), 0};
}

RootedGraph path_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
    check_size(n);
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return {Graph(n, std::move(e)), 0};
}

RootedGraph named_graph(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("family must look like name:size");
    std::string name = spec.substr(0, colon);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    const std::size_t k = parse_size(spec.substr(colon + 1));
    if (name == "complete" || name == "k") return complete_graph(k);
    if (name == "star" || name == "s") return star_graph(k);
    if (name == "friendship" || name == "f") return friendship_graph(k);
    if (name == "path" || name == "p") return path_graph(k);
    throw std::invalid_argument("unknown graph family '" + name + "'");
}

RootedGraph random_rooted_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::generate_canonical<double, 53>(rng) < p) e.emplace_back(i, j);
    const std::size_t root = static_cast<std::size_t>(rng() % n);
    return {Graph(n, std::move(e)), root};
}

std::string to_edge_list(const RootedGraph& g) {
    std::ostringstream os;
    os << "n " << g.n() << " root " << g.root << "\n";
    for (auto [i, j] : g.graph.edges()) os << i << " " << j << "\n";
    return os.str();
}

RootedGraph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t n = 0, root = 0;
    bool header = false;
    std::vector<Edge> e;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!header) {
            std::string root_kw;
            long long nn = -1, rr = -1;
            if (first != "n" || !(ls >> nn >> root_kw >> rr) || root_kw != "root" || nn < 1 || rr < 0)
                throw std::invalid_argument("expected header 'n <count> root <index>'");
            n = static_cast<std::size_t>(nn);
            root = static_cast<std::size_t>(rr);
            header = true;
            continue;
        }
        long long i = -1, j = -1;
        std::istringstream es(line);
        std::string extra;
        if (!(es >> i >> j) || (es >> extra) || i < 0 || j < 0)
            throw std::invalid_argument("bad edge line '" + line + "'");
        e.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    if (!header) throw std::invalid_argument("missing graph header");
    check_size(n);
    return {Graph(n, std::move(e)), root};
}

std::string to_json(const RootedGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["root"] = g.root;
    j["edges"] = nlohmann::json::array();
    for (auto [a, b] : g.graph.edges()) j["edges"].push_back({a, b});
    return j.dump();
}

RootedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        const auto n = j.at("n").get<long long>();
        const auto root = j.at("root").get<long long>();
        if (n < 1 || root < 0) throw std::invalid_argument("bad n/root");
        check_size(static_cast<std::size_t>(n));
        std::vector<Edge> e;
        for (const auto& p : j.at("edges")) {
            if (!p.is_array() || p.size() != 2) throw std::invalid_argument("edge must be a pair");
            const auto a = p[0].get<long long>(), b = p[1].get<long long>();
            if (a < 0 || b < 0) throw std::invalid_argument("negative vertex");
            e.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        }
        return {Graph(static_cast<std::size_t>(n), std::move(e)), static_cast<std::size_t>(root)};
    } catch (const nlohmann::json::exception& ex) {
        throw std::invalid_argument(std::string("bad graph JSON: ") + ex.what());
    }
}

RootedGraph parse_graph(const std::string& text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') return parse_graph_json(text);
    std::istringstream in(text);
    return parse_edge_list(in);
}

}  // namespace cyclic_spectra
