#include "cyclic_spectra/cumulants.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclic_spectra {

namespace {

TruncatedSeries series_from(const std::vector<Rational>& v, std::size_t order) {
    // coefficients 1..order, constant term zero
    std::vector<Rational> c(order + 1);
    for (std::size_t n = 1; n <= order && n < v.size(); ++n) c[n] = v[n];
    return {c, order + 1};
}

std::vector<Rational> to_vector(const TruncatedSeries& s) {
    std::vector<Rational> v = s.coefficients();
    v[0] = Rational(0);
    return v;
}

// Sparse rational matrix as a map from (row, col).
using Sparse = std::map<std::pair<std::size_t, std::size_t>, Rational>;

Sparse sparse_mul(const Sparse& a, const Sparse& b) {
    std::map<std::size_t, std::vector<std::pair<std::size_t, const Rational*>>> rows_b;
    for (const auto& [ij, v] : b) rows_b[ij.first].emplace_back(ij.second, &v);
    Sparse r;
    for (const auto& [ij, v] : a) {
        auto it = rows_b.find(ij.second);
        if (it == rows_b.end()) continue;
        for (const auto& [col, w] : it->second) r[{ij.first, col}] += v * *w;
    }
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

void check_word(const std::vector<int>& word) {
    if (word.empty()) throw std::invalid_argument("empty word");
    if (static_cast<int>(word.size()) > kMaxCumulantN)
        throw std::invalid_argument("partitioned cumulants limited to n <= " + std::to_string(kMaxCumulantN));
}

class MomentCache {
public:
    MomentCache(const MultiMomentOracle& o, const std::vector<int>& word) : o_(o), word_(word) {}

    const Rational& get(const SetPartition& rho, Functional f) {
        auto key = std::make_pair(rho.labels(), f == Functional::omega);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, o_.eval(word_, key.first, f)).first->second;
    }

    Rational moebius_sum(const SetPartition& pi, Functional f) {
        Rational s;
        for (const auto& rho : refinements(pi)) s += get(rho, f) * Rational(moebius(rho, pi));
        return s;
    }

private:
    const MultiMomentOracle& o_;
    std::vector<int> word_;
    std::map<std::pair<std::vector<int>, bool>, Rational> cache_;
};

std::vector<int> rotated_word(const std::vector<int>& word, int r) {
    const std::size_t n = word.size();
    std::vector<int> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = word[(j + static_cast<std::size_t>(r)) % n];
    return w;
}

}  // namespace

MomentData MomentData::from_sequences(const std::vector<Rational>& phi_1_to_k,
                                      const std::vector<Rational>& omega_1_to_k) {
    MomentData m;
    m.order = std::min(phi_1_to_k.size(), omega_1_to_k.size());
    m.phi.assign(m.order + 1, Rational(0));
    m.omega.assign(m.order + 1, Rational(0));
    for (std::size_t n = 1; n <= m.order; ++n) {
        m.phi[n] = phi_1_to_k[n - 1];
        m.omega[n] = omega_1_to_k[n - 1];
    }
    return m;
}

MomentData MomentData::from_matrix(const RatMatrix& a, std::size_t root, std::size_t order) {
    MomentData m;
    m.order = order;
    m.phi.assign(order + 1, Rational(0));
    m.omega.assign(order + 1, Rational(0));
    RatMatrix p = RatMatrix::identity(a.n());
    for (std::size_t n = 1; n <= order; ++n) {
        p = p * a;
        m.phi[n] = p(root, root);
        m.omega[n] = p.trace();
    }
    return m;
}

std::vector<Rational> boolean_cumulants(const MomentData& m) {
    if (m.order < 1) throw std::invalid_argument("moment data needs order >= 1");
    const TruncatedSeries M = series_from(m.phi, m.order);
    return to_vector(M * M.reciprocal_of_one_plus());
}

std::vector<Rational> cyclic_boolean_cumulants(const MomentData& m) {
    if (m.order < 1) throw std::invalid_argument("moment data needs order >= 1");
    const TruncatedSeries M = series_from(m.phi, m.order);
    const TruncatedSeries Mh = series_from(m.omega, m.order);
    const TruncatedSeries B = M * M.reciprocal_of_one_plus();
    // z B' = derivative_times_z, so z M B' = M * (z B')
    return to_vector(Mh - M * B.derivative_times_z());
}

std::vector<Rational> h_coefficients(const MomentData& m) {
    if (m.order < 2) throw std::invalid_argument("h coefficients need order >= 2");
    const TruncatedSeries M = series_from(m.phi, m.order);
    const TruncatedSeries Mh = series_from(m.omega, m.order);
    return to_vector(Mh - M.derivative_times_z() * M.reciprocal_of_one_plus());
}

MultiMomentOracle product_functional_oracle(std::function<Rational(const std::vector<int>&)> base_phi,
                                            std::function<Rational(const std::vector<int>&)> base_omega) {
    MultiMomentOracle o;
    o.eval = [base_phi, base_omega](const std::vector<int>& elements, const std::vector<int>& copies,
                                    Functional f) {
        if (elements.size() != copies.size() || elements.empty()) throw std::invalid_argument("bad word");
        std::vector<std::vector<int>> groups;
        std::vector<int> group_copy;
        for (std::size_t j = 0; j < elements.size(); ++j) {
            if (group_copy.empty() || group_copy.back() != copies[j]) {
                groups.emplace_back();
                group_copy.push_back(copies[j]);
            }
            groups.back().push_back(elements[j]);
        }
        if (f == Functional::omega) {
            if (groups.size() == 1) return base_omega(groups[0]);
            if (group_copy.front() == group_copy.back()) {
                std::vector<int> merged = groups.back();
                merged.insert(merged.end(), groups.front().begin(), groups.front().end());
                Rational p = base_phi(merged);
                for (std::size_t g = 1; g + 1 < groups.size(); ++g) p *= base_phi(groups[g]);
                return p;
            }
        }
        Rational p(1);
        for (const auto& g : groups) p *= base_phi(g);
        return p;
    };
    return o;
}

MultiMomentOracle tensor_model_oracle(std::vector<RatMatrix> elements) {
    if (elements.empty()) throw std::invalid_argument("tensor model needs elements");
    const std::size_t d = elements.front().n();
    for (const auto& e : elements)
        if (e.n() != d) throw std::invalid_argument("all elements must share one dimension");
    MultiMomentOracle o;
    o.eval = [elements = std::move(elements), d](const std::vector<int>& word, const std::vector<int>& copies,
                                                  Functional f) {
        if (word.size() != copies.size() || word.empty()) throw std::invalid_argument("bad word");
        std::vector<int> distinct = copies;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        const std::size_t factors = distinct.size();
        std::size_t total = 1;
        for (std::size_t k = 0; k < factors; ++k) total *= d;
        // P (x) ... (x) A (x) ... (x) P: nonzero only where other factors sit at coordinate 0.
        auto embed = [&](const RatMatrix& a, std::size_t factor) {
            std::size_t stride = 1;
            for (std::size_t k = factor + 1; k < factors; ++k) stride *= d;
            Sparse s;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    if (!a(i, j).is_zero()) s[{i * stride, j * stride}] = a(i, j);
            return s;
        };
        Sparse prod;
        for (std::size_t j = 0; j < word.size(); ++j) {
            const auto pos = static_cast<std::size_t>(
                std::lower_bound(distinct.begin(), distinct.end(), copies[j]) - distinct.begin());
            Sparse e = embed(elements.at(static_cast<std::size_t>(word[j])), pos);
            prod = j == 0 ? std::move(e) : sparse_mul(prod, e);
        }
        if (f == Functional::phi) {
            auto it = prod.find({0, 0});
            return it == prod.end() ? Rational(0) : it->second;
        }
        Rational tr;
        for (const auto& [ij, v] : prod)
            if (ij.first == ij.second) tr += v;
        // the trace over the full space counts the P factors once each
        (void)total;
        return tr;
    };
    return o;
}

Rational partitioned_moment(const MultiMomentOracle& o, const SetPartition& pi, const std::vector<int>& word,
                            Functional f) {
    if (static_cast<std::size_t>(pi.n()) != word.size()) throw std::invalid_argument("word length must equal n");
    return o.eval(word, pi.labels(), f);
}

std::vector<SetPartition> refinements(const SetPartition& pi) {
    std::vector<std::vector<Block>> partial{{}};
    for (const auto& block : pi.blocks()) {
        const int m = static_cast<int>(block.size());
        std::vector<std::vector<Block>> next;
        std::vector<SetPartition> local;
        if (m == 1)
            local.push_back(SetPartition::coarsest(1));
        else
            local = enumerate_set_partitions(m);
        for (const auto& prefix : partial)
            for (const auto& q : local) {
                auto blocks = prefix;
                for (const auto& b : q.blocks()) {
                    Block mapped;
                    for (int v : b) mapped.push_back(block[v - 1]);
                    blocks.push_back(std::move(mapped));
                }
                next.push_back(std::move(blocks));
            }
        partial = std::move(next);
    }
    std::vector<SetPartition> out;
    for (auto& b : partial) out.emplace_back(pi.n(), std::move(b));
    std::sort(out.begin(), out.end());
    return out;
}

Rational partition_cumulant(const MultiMomentOracle& o, const SetPartition& pi, const std::vector<int>& word) {
    check_word(word);
    if (static_cast<std::size_t>(pi.n()) != word.size()) throw std::invalid_argument("word length must equal n");
    MomentCache cache(o, word);
    return cache.moebius_sum(pi, Functional::omega);
}

Rational boolean_partition_cumulant(const MultiMomentOracle& o, const SetPartition& pi,
                                    const std::vector<int>& word) {
    check_word(word);
    if (static_cast<std::size_t>(pi.n()) != word.size()) throw std::invalid_argument("word length must equal n");
    MomentCache cache(o, word);
    return cache.moebius_sum(pi, Functional::phi);
}

Rational case_split_cumulant(const MultiMomentOracle& o, const SetPartition& pi, const std::vector<int>& word) {
    check_word(word);
    const int n = pi.n();
    if (static_cast<std::size_t>(n) != word.size()) throw std::invalid_argument("word length must equal n");
    if (!is_cyclic_interval(pi)) return Rational(0);
    if (pi.is_coarsest()) {
        Rational s = partitioned_moment(o, pi, word);
        for (const auto& q : enumerate_cyclic_interval_partitions(n))
            if (!q.is_coarsest()) s -= case_split_cumulant(o, q, word);
        return s;
    }
    if (pi.is_interval()) return boolean_partition_cumulant(o, pi, word);
    const auto [r, q] = rotate_to_interval(pi);
    return boolean_partition_cumulant(o, q, rotated_word(word, r));
}

CumulantCheck moment_cumulant_check(const MomentData& m, const std::vector<Rational>& c, std::size_t n) {
    CumulantCheck out;
    if (n > m.order || n >= c.size()) throw std::invalid_argument("not enough moments or cumulants");
    if (n > static_cast<std::size_t>(kMaxIntervalN)) throw std::invalid_argument("n too large");
    const auto b = boolean_cumulants(m);
    for (std::size_t k = 1; k <= n; ++k) {
        Rational s = c[k];
        for (const auto& pi : enumerate_cyclic_interval_partitions(static_cast<int>(k))) {
            if (pi.is_coarsest()) continue;
            Rational prod(1);
            for (const auto& blk : pi.blocks()) prod *= b[blk.size()];
            s += prod;
        }
        if (s != m.omega[k]) {
            std::ostringstream os;
            os << "n=" << k << ": omega=" << m.omega[k] << " but cumulant sum=" << s;
            out.ok = false;
            out.mismatches.push_back(os.str());
        }
    }
    return out;
}

CumulantCheck moment_cumulant_check(const MultiMomentOracle& o, const std::vector<int>& word) {
    check_word(word);
    const int n = static_cast<int>(word.size());
    CumulantCheck out;
    MomentCache cache(o, word);
    Rational ci_sum;
    auto fail = [&](const std::string& what, const SetPartition& pi, const Rational& a, const Rational& b) {
        std::ostringstream os;
        os << what << " at " << pi.to_string() << ": " << a << " vs " << b;
        out.ok = false;
        out.mismatches.push_back(os.str());
    };
    for_each_set_partition(n, [&](const SetPartition& pi) {
        const Rational k = cache.moebius_sum(pi, Functional::omega);
        if (!is_cyclic_interval(pi)) {
            if (!k.is_zero()) fail("vanishing", pi, k, Rational(0));
            return;
        }
        ci_sum += k;
        if (pi.is_coarsest()) return;
        Rational split;
        if (pi.is_interval()) {
            split = cache.moebius_sum(pi, Functional::phi);
        } else {
            const auto [r, q] = rotate_to_interval(pi);
            MomentCache rotated(o, rotated_word(word, r));
            split = rotated.moebius_sum(q, Functional::phi);
        }
        if (k != split) fail("case analysis", pi, k, split);
    });
    const Rational total = cache.get(SetPartition::coarsest(n), Functional::omega);
    if (ci_sum != total) fail("moment-cumulant formula", SetPartition::coarsest(n), total, ci_sum);
    return out;
}

std::string cumulant_table_csv(const MomentData& m) {
    const auto c = cyclic_boolean_cumulants(m);
    const auto b = boolean_cumulants(m);
    std::vector<Rational> h(m.order + 1);
    if (m.order >= 2) h = h_coefficients(m);
    std::ostringstream os;
    os << "n,c_n,h_n,b_n\n";
    for (std::size_t n = 1; n <= m.order; ++n) {
        const Rational hn = m.order >= 2 ? h[n] : m.omega[1] - m.phi[1];
        os << n << "," << c[n] << "," << hn << "," << b[n] << "\n";
    }
    return os.str();
}

}  // namespace cyclic_spectra
