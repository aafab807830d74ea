#pragma once

// Set partitions of [n] = {1..n}, interval and cyclic-interval partitions,
// ordered set partitions, kernels and the Mobius function of the refinement order.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclic_spectra {

using Block = std::vector<int>;  // sorted, 1-based

class SetPartition {
public:
    SetPartition() = default;
    /// Validates disjointness and covering; canonicalizes block order by minimum.
    SetPartition(int n, std::vector<Block> blocks);

    static SetPartition finest(int n);    // 0-hat
    static SetPartition coarsest(int n);  // 1-hat
    /// From a restricted growth string (labels 0-based, first occurrence order).
    static SetPartition from_labels(const std::vector<int>& labels);
    /// "1,2/3" style; n is the largest element.
    static SetPartition parse(const std::string& text);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    /// 0-based block index of every element (restricted growth string).
    std::vector<int> labels() const;
    bool is_coarsest() const { return blocks_.size() == 1; }

    /// this <= other in the refinement order (every block of this inside a block of other).
    bool refines(const SetPartition& other) const;
    bool is_interval() const;

    std::string to_string() const;
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) { return a.labels() <=> b.labels(); }

private:
    int n_ = 0;
    std::vector<Block> blocks_;
};

class OrderedSetPartition {
public:
    OrderedSetPartition() = default;
    OrderedSetPartition(int n, std::vector<Block> blocks);
    static OrderedSetPartition parse(const std::string& text);

    int n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    SetPartition unordered() const { return {n_, blocks_}; }
    std::string to_string() const;
    friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;

private:
    int n_ = 0;
    std::vector<Block> blocks_;
};

enum class PartitionFamily { set, interval, cyclic_interval, ordered };

inline constexpr int kMaxSetPartitionN = 12;
inline constexpr int kMaxOrderedPartitionN = 9;
inline constexpr int kMaxIntervalN = 20;

/// Enumeration in lexicographic order of restricted growth strings (ordered
/// partitions: by underlying partition, then block permutations in lex order).
std::vector<SetPartition> enumerate_set_partitions(int n);
std::vector<SetPartition> enumerate_interval_partitions(int n);
std::vector<SetPartition> enumerate_cyclic_interval_partitions(int n);
std::vector<OrderedSetPartition> enumerate_ordered_partitions(int n);
void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& fn);
std::uint64_t family_count(int n, PartitionFamily family);

SetPartition kernel(const std::vector<int>& tuple);
OrderedSetPartition ordered_kernel(const std::vector<int>& tuple);
std::vector<int> packed_word(const OrderedSetPartition& p);

/// Circular gaps: gap g (1 <= g <= n) sits between g and g + 1 (gap n between n and 1).
/// Separator set of a cyclic-interval partition; empty for 1-hat; nullopt if p is not in CI(n).
std::optional<std::vector<int>> separators(const SetPartition& p);
SetPartition from_separators(int n, const std::vector<int>& gaps);
bool is_cyclic_interval(const SetPartition& p);
/// Rotates element i to i - r (mod n) with the smallest r >= 0 that yields an interval partition.
std::pair<int, SetPartition> rotate_to_interval(const SetPartition& p);
SetPartition rotate_left(const SetPartition& p, int r);

/// mu(rho, pi) on the set-partition lattice; throws unless rho <= pi.
std::int64_t moebius(const SetPartition& rho, const SetPartition& pi);

/// Maximal cyclic intervals of B inside Z_n, each listed in circular order.
std::vector<Block> maximal_arcs(const Block& b, int n);

}  // namespace cyclic_spectra
