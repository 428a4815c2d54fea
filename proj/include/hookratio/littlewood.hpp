#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hookratio/boundary.hpp"
#include "hookratio/partition.hpp"

namespace hookratio {

/// p-core, p-quotients and per-residue charges of a partition.
///
/// Quotient j reads the subsequence (x_{p*i + j})_i of the centered boundary
/// sequence, index 0 sitting just after the centering mark. charges[j] is the
/// charge of that subsequence; the charges sum to zero.
struct LittlewoodDecomposition {
    int p = 2;
    Partition core;
    std::vector<Partition> quotients;
    std::vector<std::int64_t> charges;

    friend bool operator==(const LittlewoodDecomposition&, const LittlewoodDecomposition&) = default;
};

/// Residue-class subsequences: result[j] has entries x_{p*i + j}.
std::vector<BoundarySequence> split_by_residue(const BoundarySequence& b, int p);

/// Inverse of split_by_residue.
BoundarySequence interleave(const std::vector<BoundarySequence>& parts);

/// Throws std::invalid_argument for p < 2.
LittlewoodDecomposition decompose(const Partition& lambda, int p);

/// The unique lambda with decompose(lambda, p) == (core, quotients).
/// Throws std::invalid_argument if core is not a p-core or quotients.size() != p.
Partition compose(const Partition& core, const std::vector<Partition>& quotients, int p);

Partition p_core(const Partition& lambda, int p);

/// True iff no hook equals p (equivalently, no hook is divisible by p).
bool is_p_core(const Partition& lambda, int p);

/// Start indices i of removable p-rim hooks: x_i = 1 and x_{i+p} = 0.
std::vector<std::int64_t> removable_rim_hooks(const BoundarySequence& b, int p);

/// p-core by removing rim hooks one at a time in a pseudo-random order.
/// Used to cross-check the charge-based core.
Partition p_core_by_removal(const Partition& lambda, int p, std::uint64_t seed);

/// Address of a vertex of the p-ary tree: (i_1, ..., i_d), each in [0, p).
using TreeWord = std::vector<int>;

/// "i1.i2.i3"; the root is "".
std::string word_to_string(const TreeWord& word);

enum class TowerKind { quotient, core };

/// Finitely supported labelling of the p-ary tree by partitions.
/// Only nonempty labels are stored; the root is always present.
class PartitionTower {
public:
    PartitionTower(TowerKind kind, int p) : kind_(kind), p_(p) {}

    TowerKind kind() const { return kind_; }
    int p() const { return p_; }

    /// Empty partition for words outside the support.
    const Partition& label(const TreeWord& word) const;
    const std::map<TreeWord, Partition>& labels() const { return labels_; }

    /// Largest word length carrying a nonempty label (0 if only the root).
    int depth() const;

    void set(TreeWord word, Partition label);

private:
    TowerKind kind_;
    int p_;
    std::map<TreeWord, Partition> labels_;
};

/// label(()) = lambda, label(w.j) = j-th p-quotient of label(w).
PartitionTower quotient_tower(const Partition& lambda, int p);

/// label(w) = p-core of the quotient-tower label at w.
PartitionTower core_tower(const Partition& lambda, int p);

/// h_r(lambda): number of hooks divisible by r, computed as
/// (|lambda| - |r-core|) / r in time linear in the boundary window.
std::int64_t hook_count_divisible(const Partition& lambda, std::int64_t r);

/// v_p of the hook product, as sum over i >= 1 of h_{p^i}. Throws
/// std::invalid_argument if p is not prime.
std::int64_t valuation_hook_product(const Partition& lambda, std::int64_t p);

/// Cells whose hook is divisible by p^d but not by p^(d+1).
std::int64_t cells_with_exact_valuation(const Partition& lambda, std::int64_t p, int d);

}  // namespace hookratio
