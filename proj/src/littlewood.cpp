#include "hookratio/littlewood.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace hookratio {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

void require_modulus(int p) {
    if (p < 2) throw std::invalid_argument("modulus p must be >= 2, got " + std::to_string(p));
}

}  // namespace

std::vector<BoundarySequence> split_by_residue(const BoundarySequence& b, int p) {
    require_modulus(p);
    const std::int64_t o = b.offset();
    const auto n = static_cast<std::int64_t>(b.window().size());
    std::vector<BoundarySequence> parts;
    parts.reserve(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) {
        const std::int64_t klo = floor_div(o - j, p) - 1;
        const std::int64_t khi = floor_div(o + n - j, p) + 1;
        std::vector<std::uint8_t> window;
        window.reserve(static_cast<std::size_t>(khi - klo + 1));
        for (std::int64_t k = klo; k <= khi; ++k) window.push_back(static_cast<std::uint8_t>(b.at(p * k + j)));
        parts.emplace_back(klo, std::move(window));
    }
    return parts;
}

BoundarySequence interleave(const std::vector<BoundarySequence>& parts) {
    const auto p = static_cast<std::int64_t>(parts.size());
    require_modulus(static_cast<int>(p));
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (std::int64_t j = 0; j < p; ++j) {
        const auto& part = parts[static_cast<std::size_t>(j)];
        const std::int64_t first = p * (part.offset() - 1) + j;
        const std::int64_t last = p * (part.offset() + static_cast<std::int64_t>(part.window().size())) + j;
        lo = j == 0 ? first : std::min(lo, first);
        hi = j == 0 ? last : std::max(hi, last);
    }
    std::vector<std::uint8_t> window;
    window.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i) {
        const auto& part = parts[static_cast<std::size_t>(floor_mod(i, p))];
        window.push_back(static_cast<std::uint8_t>(part.at(floor_div(i, p))));
    }
    return BoundarySequence(lo, std::move(window));
}

LittlewoodDecomposition decompose(const Partition& lambda, int p) {
    require_modulus(p);
    LittlewoodDecomposition out;
    out.p = p;
    const auto parts = split_by_residue(to_boundary(lambda), p);
    std::vector<BoundarySequence> core_parts;
    core_parts.reserve(parts.size());
    for (const auto& part : parts) {
        out.quotients.push_back(from_boundary(part));
        out.charges.push_back(part.charge());
        // A trivial shape with transition at index c has charge c.
        core_parts.emplace_back(part.charge(), std::vector<std::uint8_t>{});
    }
    out.core = from_boundary(interleave(core_parts));
    return out;
}

Partition compose(const Partition& core, const std::vector<Partition>& quotients, int p) {
    require_modulus(p);
    if (quotients.size() != static_cast<std::size_t>(p)) {
        throw std::invalid_argument("compose needs exactly p = " + std::to_string(p) + " quotients, got " +
                                    std::to_string(quotients.size()));
    }
    if (!is_p_core(core, p)) {
        throw std::invalid_argument("(" + core.to_string() + ") is not a " + std::to_string(p) + "-core");
    }
    const auto core_parts = split_by_residue(to_boundary(core), p);
    std::vector<BoundarySequence> parts;
    parts.reserve(quotients.size());
    for (std::size_t j = 0; j < quotients.size(); ++j) {
        parts.push_back(to_boundary(quotients[j]).shifted(core_parts[j].charge()));
    }
    return from_boundary(interleave(parts));
}

Partition p_core(const Partition& lambda, int p) { return decompose(lambda, p).core; }

std::vector<std::int64_t> removable_rim_hooks(const BoundarySequence& b, int p) {
    require_modulus(p);
    std::vector<std::int64_t> out;
    const auto window = b.window();
    const auto n = static_cast<std::int64_t>(window.size());
    for (std::int64_t k = 0; k + p < n; ++k) {
        if (window[static_cast<std::size_t>(k)] == 1 && window[static_cast<std::size_t>(k + p)] == 0) {
            out.push_back(b.offset() + k);
        }
    }
    return out;
}

bool is_p_core(const Partition& lambda, int p) { return removable_rim_hooks(to_boundary(lambda), p).empty(); }

Partition p_core_by_removal(const Partition& lambda, int p, std::uint64_t seed) {
    require_modulus(p);
    std::mt19937_64 rng(seed);
    BoundarySequence b = to_boundary(lambda);
    while (true) {
        const auto starts = removable_rim_hooks(b, p);
        if (starts.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
        const std::int64_t i = starts[pick(rng)];
        std::vector<std::uint8_t> window(b.window().begin(), b.window().end());
        std::swap(window[static_cast<std::size_t>(i - b.offset())], window[static_cast<std::size_t>(i + p - b.offset())]);
        b = BoundarySequence(b.offset(), std::move(window));
    }
    return from_boundary(b);
}

std::string word_to_string(const TreeWord& word) {
    std::string out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k > 0) out += '.';
        out += std::to_string(word[k]);
    }
    return out;
}

const Partition& PartitionTower::label(const TreeWord& word) const {
    static const Partition kEmpty;
    auto it = labels_.find(word);
    return it == labels_.end() ? kEmpty : it->second;
}

int PartitionTower::depth() const {
    int d = 0;
    for (const auto& [word, label] : labels_) {
        if (!label.empty()) d = std::max(d, static_cast<int>(word.size()));
    }
    return d;
}

void PartitionTower::set(TreeWord word, Partition label) {
    if (!word.empty() && label.empty()) {
        labels_.erase(word);
        return;
    }
    labels_[std::move(word)] = std::move(label);
}

PartitionTower quotient_tower(const Partition& lambda, int p) {
    require_modulus(p);
    PartitionTower tower(TowerKind::quotient, p);
    tower.set({}, lambda);
    std::deque<TreeWord> pending{TreeWord{}};
    while (!pending.empty()) {
        TreeWord word = std::move(pending.front());
        pending.pop_front();
        const Partition& label = tower.label(word);
        if (label.empty()) continue;
        const auto quotients = decompose(label, p).quotients;
        for (int j = 0; j < p; ++j) {
            if (quotients[static_cast<std::size_t>(j)].empty()) continue;
            TreeWord child = word;
            child.push_back(j);
            tower.set(child, quotients[static_cast<std::size_t>(j)]);
            pending.push_back(std::move(child));
        }
    }
    return tower;
}

PartitionTower core_tower(const Partition& lambda, int p) {
    const PartitionTower quotients = quotient_tower(lambda, p);
    PartitionTower tower(TowerKind::core, p);
    tower.set({}, p_core(lambda, p));
    for (const auto& [word, label] : quotients.labels()) {
        if (!word.empty()) tower.set(word, p_core(label, p));
    }
    return tower;
}

std::int64_t hook_count_divisible(const Partition& lambda, std::int64_t r) {
    if (r < 1) throw std::invalid_argument("hook_count_divisible needs r >= 1");
    if (r == 1) return lambda.size();
    if (r > lambda.largest_hook()) return 0;
    const Partition core = p_core(lambda, static_cast<int>(r));
    return (lambda.size() - core.size()) / r;
}

std::int64_t valuation_hook_product(const Partition& lambda, std::int64_t p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw std::invalid_argument(std::to_string(p) + " is not prime; the hook-count valuation identity needs a prime");
    }
    std::int64_t total = 0;
    const std::int64_t largest = lambda.largest_hook();
    for (std::int64_t q = p; q <= largest; q *= p) {
        total += hook_count_divisible(lambda, q);
        if (q > largest / p) break;
    }
    return total;
}

std::int64_t cells_with_exact_valuation(const Partition& lambda, std::int64_t p, int d) {
    if (p < 2) throw std::invalid_argument("modulus p must be >= 2");
    if (d < 1) throw std::invalid_argument("exact valuation level d must be >= 1");
    const std::int64_t largest = lambda.largest_hook();
    std::int64_t q = 1;
    for (int k = 0; k < d; ++k) {
        if (q > largest / p) return 0;
        q *= p;
    }
    const std::int64_t next = q > largest / p ? 0 : hook_count_divisible(lambda, q * p);
    return hook_count_divisible(lambda, q) - next;
}

}  // namespace hookratio
