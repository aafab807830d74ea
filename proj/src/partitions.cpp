#include "cyclic_spectra/partitions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclic_spectra {

namespace {

void check_n(int n, int cap) {
    if (n < 1 || n > cap) throw std::invalid_argument("n out of range 1.." + std::to_string(cap));
}

std::vector<Block> parse_blocks(const std::string& text, int& n) {
    std::vector<Block> blocks;
    std::stringstream ss(text);
    std::string part;
    n = 0;
    while (std::getline(ss, part, '/')) {
        Block b;
        std::stringstream es(part);
        std::string tok;
        while (std::getline(es, tok, ',')) {
            tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
            if (tok.empty()) throw std::invalid_argument("empty element in partition");
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad element '" + tok + "'");
            }
            if (pos != tok.size()) throw std::invalid_argument("bad element '" + tok + "'");
            b.push_back(v);
            n = std::max(n, v);
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

std::string format_blocks(const std::vector<Block>& blocks) {
    std::string s;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += '/';
        for (std::size_t j = 0; j < blocks[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(blocks[i][j]);
        }
    }
    return s;
}

void validate(int n, std::vector<Block>& blocks) {
    if (n < 0) throw std::invalid_argument("negative ground set");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int count = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 1 || v > n) throw std::invalid_argument("element out of range");
            if (seen[v]) throw std::invalid_argument("blocks are not disjoint");
            seen[v] = 1;
            ++count;
        }
    }
    if (count != n) throw std::invalid_argument("blocks do not cover the ground set");
}

std::int64_t factorial(int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    validate(n_, blocks_);
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::finest(int n) {
    std::vector<Block> b;
    for (int i = 1; i <= n; ++i) b.push_back({i});
    return {n, b};
}

SetPartition SetPartition::coarsest(int n) {
    Block b(static_cast<std::size_t>(n));
    std::iota(b.begin(), b.end(), 1);
    return {n, n ? std::vector<Block>{b} : std::vector<Block>{}};
}

SetPartition SetPartition::from_labels(const std::vector<int>& labels) {
    std::map<int, Block> by;
    for (std::size_t i = 0; i < labels.size(); ++i) by[labels[i]].push_back(static_cast<int>(i) + 1);
    std::vector<Block> blocks;
    for (auto& [k, b] : by) blocks.push_back(std::move(b));
    return {static_cast<int>(labels.size()), std::move(blocks)};
}

SetPartition SetPartition::parse(const std::string& text) {
    int n = 0;
    auto blocks = parse_blocks(text, n);
    return {n, std::move(blocks)};
}

std::vector<int> SetPartition::labels() const {
    std::vector<int> l(static_cast<std::size_t>(n_));
    for (std::size_t k = 0; k < blocks_.size(); ++k)
        for (int v : blocks_[k]) l[v - 1] = static_cast<int>(k);
    return l;
}

bool SetPartition::refines(const SetPartition& other) const {
    if (other.n_ != n_) return false;
    const auto lo = other.labels();
    for (const auto& b : blocks_)
        for (int v : b)
            if (lo[v - 1] != lo[b.front() - 1]) return false;
    return true;
}

bool SetPartition::is_interval() const {
    for (const auto& b : blocks_)
        if (b.back() - b.front() + 1 != static_cast<int>(b.size())) return false;
    return true;
}

std::string SetPartition::to_string() const { return format_blocks(blocks_); }

OrderedSetPartition::OrderedSetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    validate(n_, blocks_);
}

OrderedSetPartition OrderedSetPartition::parse(const std::string& text) {
    int n = 0;
    auto blocks = parse_blocks(text, n);
    return {n, std::move(blocks)};
}

std::string OrderedSetPartition::to_string() const { return format_blocks(blocks_); }

void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& fn) {
    check_n(n, kMaxSetPartitionN);
    // restricted growth strings in lexicographic order
    std::vector<int> a(static_cast<std::size_t>(n), 0), mx(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(SetPartition::from_labels(a));
        int i = n - 1;
        while (i > 0 && a[i] == mx[i - 1] + 1) --i;
        if (i == 0) break;
        ++a[i];
        mx[i] = std::max(mx[i - 1], a[i]);
        for (int j = i + 1; j < n; ++j) {
            a[j] = 0;
            mx[j] = mx[i];
        }
    }
}

std::vector<SetPartition> enumerate_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> enumerate_interval_partitions(int n) {
    check_n(n, kMaxIntervalN);
    std::vector<SetPartition> out;
    // bit g-1 of mask set = cut after g
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> labels(static_cast<std::size_t>(n));
        int k = 0;
        for (int i = 0; i < n; ++i) {
            labels[i] = k;
            if (i + 1 < n && (mask >> i & 1u)) ++k;
        }
        out.push_back(SetPartition::from_labels(labels));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> enumerate_cyclic_interval_partitions(int n) {
    check_n(n, kMaxIntervalN);
    std::vector<SetPartition> out;
    out.push_back(SetPartition::coarsest(n));
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) < 2) continue;
        std::vector<int> gaps;
        for (int g = 1; g <= n; ++g)
            if (mask >> (g - 1) & 1u) gaps.push_back(g);
        out.push_back(from_separators(n, gaps));
    }
    if (n == 1) out.resize(1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrderedSetPartition> enumerate_ordered_partitions(int n) {
    check_n(n, kMaxOrderedPartitionN);
    std::vector<OrderedSetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) {
        std::vector<std::size_t> perm(p.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Block> b;
            for (auto k : perm) b.push_back(p.blocks()[k]);
            out.emplace_back(n, std::move(b));
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return out;
}

std::uint64_t family_count(int n, PartitionFamily family) {
    switch (family) {
        case PartitionFamily::interval:
            check_n(n, kMaxIntervalN);
            return std::uint64_t{1} << (n - 1);
        case PartitionFamily::cyclic_interval:
            check_n(n, kMaxIntervalN);
            return n == 1 ? 1 : (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n);
        case PartitionFamily::set: {
            check_n(n, kMaxSetPartitionN);
            // Bell triangle
            std::vector<std::uint64_t> row{1};
            for (int i = 1; i < n; ++i) {
                std::vector<std::uint64_t> next{row.back()};
                for (auto v : row) next.push_back(next.back() + v);
                row = std::move(next);
            }
            return row.back();
        }
        case PartitionFamily::ordered: {
            check_n(n, kMaxOrderedPartitionN);
            // Fubini numbers: a(n) = sum_k C(n,k) a(n-k)
            std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
            a[0] = 1;
            for (int m = 1; m <= n; ++m) {
                std::uint64_t c = 1;
                for (int k = 1; k <= m; ++k) {
                    c = c * static_cast<std::uint64_t>(m - k + 1) / static_cast<std::uint64_t>(k);
                    a[m] += c * a[m - k];
                }
            }
            return a[n];
        }
    }
    return 0;
}

SetPartition kernel(const std::vector<int>& tuple) {
    if (tuple.empty()) throw std::invalid_argument("empty tuple");
    return ordered_kernel(tuple).unordered();
}

OrderedSetPartition ordered_kernel(const std::vector<int>& tuple) {
    if (tuple.empty()) throw std::invalid_argument("empty tuple");
    std::map<int, Block> by;
    for (std::size_t i = 0; i < tuple.size(); ++i) by[tuple[i]].push_back(static_cast<int>(i) + 1);
    std::vector<Block> blocks;
    for (auto& [v, b] : by) blocks.push_back(std::move(b));
    return {static_cast<int>(tuple.size()), std::move(blocks)};
}

std::vector<int> packed_word(const OrderedSetPartition& p) {
    std::vector<int> w(static_cast<std::size_t>(p.n()));
    for (std::size_t k = 0; k < p.blocks().size(); ++k)
        for (int v : p.blocks()[k]) w[v - 1] = static_cast<int>(k) + 1;
    return w;
}

std::optional<std::vector<int>> separators(const SetPartition& p) {
    const int n = p.n();
    if (p.is_coarsest() || n == 0) return std::vector<int>{};
    const auto l = p.labels();
    std::vector<int> gaps;
    for (int g = 1; g <= n; ++g)
        if (l[g - 1] != l[g % n]) gaps.push_back(g);
    // each block is an arc exactly when the number of arcs equals the number of blocks
    if (gaps.size() != p.size()) return std::nullopt;
    return gaps;
}

SetPartition from_separators(int n, const std::vector<int>& gaps) {
    if (gaps.empty()) return SetPartition::coarsest(n);
    if (gaps.size() == 1) throw std::invalid_argument("a single separator does not split the circle");
    std::vector<char> cut(static_cast<std::size_t>(n) + 1, 0);
    for (int g : gaps) {
        if (g < 1 || g > n) throw std::invalid_argument("gap out of range");
        cut[g] = 1;
    }
    // start just after the last separator
    const int start = gaps.back() % n + 1;
    std::vector<Block> blocks{{}};
    for (int k = 0; k < n; ++k) {
        const int v = (start - 1 + k) % n + 1;
        blocks.back().push_back(v);
        if (cut[v] && k + 1 < n) blocks.emplace_back();
    }
    return {n, std::move(blocks)};
}

bool is_cyclic_interval(const SetPartition& p) { return separators(p).has_value(); }

SetPartition rotate_left(const SetPartition& p, int r) {
    const int n = p.n();
    std::vector<Block> blocks;
    for (const auto& b : p.blocks()) {
        Block nb;
        for (int v : b) nb.push_back(((v - 1 - r) % n + n) % n + 1);
        blocks.push_back(std::move(nb));
    }
    return {n, std::move(blocks)};
}

std::pair<int, SetPartition> rotate_to_interval(const SetPartition& p) {
    const auto gaps = separators(p);
    if (!gaps) throw std::invalid_argument("partition is not a cyclic-interval partition");
    const int n = p.n();
    if (gaps->empty() || std::find(gaps->begin(), gaps->end(), n) != gaps->end()) return {0, p};
    const int r = gaps->front();
    return {r, rotate_left(p, r)};
}

std::int64_t moebius(const SetPartition& rho, const SetPartition& pi) {
    if (!rho.refines(pi)) throw std::invalid_argument("moebius needs rho <= pi");
    const auto lp = pi.labels();
    std::vector<int> inside(pi.size(), 0);
    for (const auto& b : rho.blocks()) ++inside[lp[b.front() - 1]];
    std::int64_t mu = 1;
    for (int k : inside) mu *= ((k - 1) % 2 ? -1 : 1) * factorial(k - 1);
    return mu;
}

std::vector<Block> maximal_arcs(const Block& b, int n) {
    if (b.empty()) throw std::invalid_argument("empty subset");
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (int v : b) {
        if (v < 1 || v > n) throw std::invalid_argument("element out of range");
        in[v] = 1;
    }
    if (static_cast<int>(b.size()) == n) {
        Block all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        return {all};
    }
    auto next = [n](int v) { return v % n + 1; };
    auto prev = [n](int v) { return (v + n - 2) % n + 1; };
    std::vector<Block> arcs;
    for (int v = 1; v <= n; ++v) {
        if (!in[v] || in[prev(v)]) continue;  // v starts an arc
        Block arc;
        for (int w = v; in[w]; w = next(w)) arc.push_back(w);
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

}  // namespace cyclic_spectra
