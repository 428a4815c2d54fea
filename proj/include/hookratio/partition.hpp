#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hookratio/number_theory.hpp"

namespace hookratio {

/// Largest size enumerate_partitions accepts unless the caller raises the cap.
inline constexpr int kDefaultMaxPartitionSize = 40;

/// A box of a Young diagram, 0-based, English convention (row 0 is the longest).
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing finite sequence of positive parts. Immutable.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument on a non-positive part. Parts are sorted
    /// into weakly decreasing order.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t row) const { return parts_[row]; }

    std::int64_t size() const { return size_; }

    bool contains(Cell c) const;
    Partition conjugate() const;

    /// Hook length of the (0,0) cell; 0 for the empty partition.
    int largest_hook() const;

    /// Comma-separated parts, runs of four or more written as "b^e".
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    std::int64_t size_ = 0;
};

/// Multiset of positive integers (hook lengths), stored as value -> multiplicity.
class HookMultiset {
public:
    void add(int value, std::int64_t multiplicity = 1);
    void merge(const HookMultiset& other);

    std::int64_t cardinality() const { return cardinality_; }
    std::int64_t count(int value) const;
    const std::map<int, std::int64_t>& counts() const { return counts_; }

    /// Ascending list with repetitions.
    std::vector<int> values() const;

    friend bool operator==(const HookMultiset&, const HookMultiset&) = default;

private:
    std::map<int, std::int64_t> counts_;
    std::int64_t cardinality_ = 0;
};

/// Partition literal: `part ("," part)*`, `part := INT | INT "^" INT`, whitespace ignored.
/// The empty string is the empty partition. Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

/// arm + leg + 1. Throws std::out_of_range if the cell is not in the diagram.
int hook_length(const Partition& lambda, Cell c);

/// Row-by-row hook lengths, as drawn in a Young diagram.
std::vector<std::vector<int>> hook_diagram(const Partition& lambda);

HookMultiset hook_multiset(const Partition& lambda);

/// {h / r : h a hook length divisible by r}. Throws std::invalid_argument for r < 1.
HookMultiset restricted_hooks(const Partition& lambda, int r);

/// (1 + arm, 1^leg): hooks are {1..arm} u {1..leg} u {arm + leg + 1}.
Partition construct_hook_partition(int arm, int leg);

/// Number of standard Young tableaux, |lambda|! / prod(hooks), exact.
BigInt dimension(const Partition& lambda);

/// Calls visit on every partition of n, lexicographically descending.
/// Throws std::out_of_range if n is negative or above max_size.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit,
                        int max_size = kDefaultMaxPartitionSize);

std::vector<Partition> enumerate_partitions(int n, int max_size = kDefaultMaxPartitionSize);

}  // namespace hookratio
