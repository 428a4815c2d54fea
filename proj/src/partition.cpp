#include "hookratio/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hookratio {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int part : parts_) {
        if (part <= 0) throw std::invalid_argument("partition parts must be positive, got " + std::to_string(part));
        size_ += part;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

bool Partition::contains(Cell c) const {
    return c.row >= 0 && c.col >= 0 && static_cast<std::size_t>(c.row) < parts_.size() && c.col < parts_[c.row];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(parts_.front()), 0);
    for (int part : parts_) {
        for (int c = 0; c < part; ++c) ++cols[c];
    }
    return Partition(std::move(cols));
}

int Partition::largest_hook() const {
    if (parts_.empty()) return 0;
    return parts_.front() + static_cast<int>(parts_.size()) - 1;
}

std::string Partition::to_string() const {
    std::string out;
    std::size_t i = 0;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        const std::size_t run = j - i;
        auto append = [&out](const std::string& token) {
            if (!out.empty()) out += ',';
            out += token;
        };
        if (run >= 4) {
            append(std::to_string(parts_[i]) + "^" + std::to_string(run));
        } else {
            for (std::size_t k = 0; k < run; ++k) append(std::to_string(parts_[i]));
        }
        i = j;
    }
    return out;
}

void HookMultiset::add(int value, std::int64_t multiplicity) {
    if (value <= 0) throw std::invalid_argument("hook values must be positive");
    if (multiplicity <= 0) return;
    counts_[value] += multiplicity;
    cardinality_ += multiplicity;
}

void HookMultiset::merge(const HookMultiset& other) {
    for (const auto& [value, mult] : other.counts_) add(value, mult);
}

std::int64_t HookMultiset::count(int value) const {
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
}

std::vector<int> HookMultiset::values() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality_));
    for (const auto& [value, mult] : counts_) out.insert(out.end(), static_cast<std::size_t>(mult), value);
    return out;
}

namespace {

int parse_positive(std::string_view token, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument("malformed partition token '" + std::string(token) + "' in '" + std::string(whole) + "'");
    }
    if (value <= 0) throw std::invalid_argument("non-positive part in '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    }
    if (compact.empty() || compact == "()") return {};
    if (compact.front() == '(' && compact.back() == ')') compact = compact.substr(1, compact.size() - 2);

    std::vector<int> parts;
    std::string_view rest(compact);
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        const auto caret = token.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_positive(token, text));
        } else {
            const int base = parse_positive(token.substr(0, caret), text);
            const int reps = parse_positive(token.substr(caret + 1), text);
            parts.insert(parts.end(), static_cast<std::size_t>(reps), base);
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

int hook_length(const Partition& lambda, Cell c) {
    if (!lambda.contains(c)) {
        throw std::out_of_range("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is outside " +
                                "(" + lambda.to_string() + ")");
    }
    const int arm = lambda[static_cast<std::size_t>(c.row)] - c.col - 1;
    int leg = 0;
    for (std::size_t r = static_cast<std::size_t>(c.row) + 1; r < lambda.length() && lambda[r] > c.col; ++r) ++leg;
    return arm + leg + 1;
}

std::vector<std::vector<int>> hook_diagram(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    std::vector<std::vector<int>> rows(lambda.length());
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        rows[r].reserve(static_cast<std::size_t>(lambda[r]));
        for (int c = 0; c < lambda[r]; ++c) {
            rows[r].push_back(lambda[r] - c - 1 + conj[static_cast<std::size_t>(c)] - static_cast<int>(r));
        }
    }
    return rows;
}

HookMultiset hook_multiset(const Partition& lambda) {
    HookMultiset out;
    if (lambda.empty()) return out;
    const Partition conj = lambda.conjugate();
    for (std::size_t r = 0; r < lambda.length(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) {
            out.add(lambda[r] - c - 1 + conj[static_cast<std::size_t>(c)] - static_cast<int>(r));
        }
    }
    return out;
}

HookMultiset restricted_hooks(const Partition& lambda, int r) {
    if (r < 1) throw std::invalid_argument("restricted_hooks needs r >= 1");
    HookMultiset out;
    const HookMultiset all = hook_multiset(lambda);
    for (const auto& [h, mult] : all.counts()) {
        if (h % r == 0) out.add(h / r, mult);
    }
    return out;
}

Partition construct_hook_partition(int arm, int leg) {
    if (arm < 0 || leg < 0) throw std::invalid_argument("arm and leg must be nonnegative");
    std::vector<int> parts(static_cast<std::size_t>(leg) + 1, 1);
    parts[0] = 1 + arm;
    return Partition(std::move(parts));
}

BigInt dimension(const Partition& lambda) {
    const auto n = static_cast<std::uint64_t>(lambda.size());
    std::map<std::uint64_t, std::int64_t> exponents;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (is_prime(p)) exponents[p] = factorial_valuation(n, p);
    }
    const HookMultiset hooks = hook_multiset(lambda);
    for (const auto& [h, mult] : hooks.counts()) {
        for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(h))) exponents[p] -= e * mult;
    }
    BigInt result = 1;
    for (const auto& [p, e] : exponents) {
        if (e < 0) throw std::logic_error("hook product does not divide n!");
        result *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
    }
    return result;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit, int max_size) {
    if (n < 0) throw std::out_of_range("partition size must be nonnegative");
    if (n > max_size) {
        throw std::out_of_range("partition size " + std::to_string(n) + " exceeds enumeration cap " +
                                std::to_string(max_size));
    }
    if (n == 0) {
        visit(Partition{});
        return;
    }
    std::vector<int> parts{n};
    while (true) {
        visit(Partition(parts));
        // Rightmost part larger than 1.
        std::size_t k = parts.size();
        int freed = 0;
        while (k > 0 && parts[k - 1] == 1) {
            --k;
            ++freed;
        }
        if (k == 0) return;
        --k;
        const int v = parts[k] - 1;
        freed += 1;
        parts.resize(k + 1);
        parts[k] = v;
        while (freed > 0) {
            const int piece = std::min(v, freed);
            parts.push_back(piece);
            freed -= piece;
        }
    }
}

std::vector<Partition> enumerate_partitions(int n, int max_size) {
    std::vector<Partition> out;
    for_each_partition(n, [&out](const Partition& p) { out.push_back(p); }, max_size);
    return out;
}

}  // namespace hookratio
