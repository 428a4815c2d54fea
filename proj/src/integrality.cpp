#include "hookratio/integrality.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hookratio/height1.hpp"

namespace hookratio {

namespace {

int worker_count(const SearchOptions& options) { return std::max(1, options.workers); }

// Runs body(w) for w in [0, workers) on separate threads.
template <class Body>
void fan_out(int workers, Body body) {
    if (workers == 1) {
        body(0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
}

std::int64_t hook_signature(std::int64_t arm, std::int64_t leg, const RatioParams& params) {
    // Hooks of (1 + arm, 1^leg) are 1..arm, 1..leg and arm + leg + 1.
    return f_value(arm, params) + f_value(leg, params) + g_value(arm + leg + 1, params);
}

}  // namespace

void FactoredRatio::add(std::uint64_t p, std::int64_t e) {
    if (e == 0) return;
    auto& slot = exponents_[p];
    slot += e;
    if (slot == 0) exponents_.erase(p);
}

void FactoredRatio::multiply(std::uint64_t n, std::int64_t power) {
    if (n == 0) throw std::invalid_argument("FactoredRatio cannot hold zero");
    for (const auto& [p, e] : factorize(n)) add(p, power * e);
}

void FactoredRatio::multiply(const FactoredRatio& other, std::int64_t power) {
    for (const auto& [p, e] : other.exponents_) add(p, power * e);
}

std::int64_t FactoredRatio::exponent(std::uint64_t p) const {
    const auto it = exponents_.find(p);
    return it == exponents_.end() ? 0 : it->second;
}

bool FactoredRatio::is_integral() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](const auto& kv) { return kv.second > 0; });
}

BigInt FactoredRatio::numerator() const {
    BigInt out = 1;
    for (const auto& [p, e] : exponents_)
        if (e > 0) out *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
    return out;
}

BigInt FactoredRatio::denominator() const {
    BigInt out = 1;
    for (const auto& [p, e] : exponents_)
        if (e < 0) out *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-e));
    return out;
}

std::string FactoredRatio::to_string() const {
    auto side = [this](bool positive) {
        std::string out;
        for (const auto& [p, e] : exponents_) {
            if ((e > 0) != positive) continue;
            if (!out.empty()) out += " * ";
            out += std::to_string(p);
            const auto mag = e > 0 ? e : -e;
            if (mag != 1) out += "^" + std::to_string(mag);
        }
        return out;
    };
    const std::string num = side(true);
    const std::string den = side(false);
    if (den.empty()) return num.empty() ? "1" : num;
    return (num.empty() ? "1" : num) + " / " + den;
}

FactoredRatio hook_product_factored(const Partition& lambda, std::int64_t r) {
    if (r < 1) throw std::invalid_argument("hook product modulus must be >= 1");
    FactoredRatio out;
    const HookMultiset hooks = restricted_hooks(lambda, static_cast<int>(r));
    for (const auto& [value, count] : hooks.counts()) out.multiply(static_cast<std::uint64_t>(value), count);
    return out;
}

FactoredRatio ratio_factored(const Partition& lambda, const RatioParams& params) {
    FactoredRatio out;
    for (auto g : params.gammas()) out.multiply(hook_product_factored(lambda, g), 1);
    for (auto d : params.deltas()) out.multiply(hook_product_factored(lambda, d), -1);
    return out;
}

std::int64_t counts_signature(const Partition& mu, const RatioParams& params) {
    std::int64_t s = 0;
    for (auto g : params.gammas()) s += hook_count_divisible(mu, g);
    for (auto d : params.deltas()) s -= hook_count_divisible(mu, d);
    return s;
}

std::int64_t valuation_at(const Partition& lambda, const RatioParams& params, std::uint64_t p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    const auto prime = static_cast<std::int64_t>(p);
    const std::int64_t largest = lambda.largest_hook();
    auto side = [&](const std::vector<std::int64_t>& values) {
        std::int64_t total = 0;
        for (auto v : values) {
            for (std::int64_t q = v; q <= largest / prime;) {
                q *= prime;
                total += hook_count_divisible(lambda, q);
            }
        }
        return total;
    };
    return side(params.gammas()) - side(params.deltas());
}

std::optional<HookShape> find_failing_hook(const RatioParams& params, const SearchOptions& options) {
    std::int64_t range = 0;
    std::optional<FTable> table;
    if (params.is_balanced()) {
        table = build_ftable(params);
        range = table->period;
    } else {
        range = params.lcm();
    }
    auto f = [&](std::int64_t x) { return table ? table->at(x) : f_value(x, params); };

    // Worker w owns the anti-diagonals a + l = s with s = w mod W and stops once
    // another worker has a hit on a smaller diagonal.
    const int workers = worker_count(options);
    const std::int64_t none = std::numeric_limits<std::int64_t>::max();
    std::atomic<std::int64_t> best_diagonal{none};
    std::vector<std::optional<HookShape>> found(static_cast<std::size_t>(workers));
    fan_out(workers, [&](int w) {
        for (std::int64_t s = w; s <= 2 * range - 2; s += workers) {
            if (s >= best_diagonal.load()) return;
            for (std::int64_t a = std::max<std::int64_t>(0, s - range + 1); a <= std::min(s, range - 1); ++a) {
                const std::int64_t l = s - a;
                if (f(a) + f(l) + f(s + 1) - f(s) < 0) {
                    found[static_cast<std::size_t>(w)] = HookShape{static_cast<int>(a), static_cast<int>(l)};
                    std::int64_t cur = best_diagonal.load();
                    while (s < cur && !best_diagonal.compare_exchange_weak(cur, s)) {
                    }
                    return;
                }
            }
        }
    });

    std::optional<HookShape> best;
    for (const auto& hit : found) {
        if (!hit) continue;
        if (!best || std::pair(hit->arm + hit->leg, hit->arm) < std::pair(best->arm + best->leg, best->arm)) best = hit;
    }
    if (best && hook_signature(best->arm, best->leg, params) >= 0) {
        throw std::logic_error("hook scan disagrees with the direct signature");
    }
    return best;
}

std::optional<Partition> find_failing_mu(const RatioParams& params, int size_bound, bool hooks_only,
                                         const SearchOptions& options) {
    if (size_bound < 0) throw std::out_of_range("size bound must be >= 0");
    if (hooks_only) {
        const auto hook = find_failing_hook(params, options);
        if (!hook) return std::nullopt;
        return construct_hook_partition(hook->arm, hook->leg);
    }

    // Hooks inside the bound: a + l + 1 <= size_bound, least (a + l, a).
    for (int s = 0; s + 1 <= size_bound; ++s) {
        for (int a = 0; a <= s; ++a) {
            if (hook_signature(a, s - a, params) < 0) return construct_hook_partition(a, s - a);
        }
    }

    const int workers = worker_count(options);
    for (int n = 1; n <= size_bound; ++n) {
        std::vector<std::optional<Partition>> found(static_cast<std::size_t>(workers));
        fan_out(workers, [&](int w) {
            std::int64_t index = 0;
            for_each_partition(
                n,
                [&](const Partition& mu) {
                    if (index++ % workers != w) return;
                    auto& slot = found[static_cast<std::size_t>(w)];
                    if (slot && *slot < mu) return;
                    if (counts_signature(mu, params) < 0) slot = mu;
                },
                size_bound);
        });
        std::optional<Partition> best;
        for (auto& hit : found)
            if (hit && (!best || *hit < *best)) best = std::move(hit);
        if (best) return best;
    }
    return std::nullopt;
}

FailingLambda construct_failing_lambda(const Partition& mu, const RatioParams& params) {
    const auto signature = counts_signature(mu, params);
    if (signature >= 0) {
        throw std::invalid_argument("mu = (" + mu.to_string() + ") has signature " + std::to_string(signature) +
                                    " >= 0 for " + params.to_string());
    }
    const std::uint64_t p = next_prime_above(static_cast<std::uint64_t>(mu.largest_hook()));
    const std::vector<Partition> copies(static_cast<std::size_t>(p), mu);
    return {p, compose(Partition{}, copies, static_cast<int>(p))};
}

ExtractedMu extract_failing_mu(const Partition& lambda, const RatioParams& params, std::uint64_t p) {
    const auto total = valuation_at(lambda, params, p);
    if (total >= 0) {
        throw std::invalid_argument("the ratio at (" + lambda.to_string() + ") has exponent " + std::to_string(total) +
                                    " >= 0 at " + std::to_string(p));
    }
    const auto tower = quotient_tower(lambda, static_cast<int>(p));
    std::vector<const std::pair<const TreeWord, Partition>*> nodes;
    for (const auto& node : tower.labels())
        if (!node.first.empty()) nodes.push_back(&node);
    std::stable_sort(nodes.begin(), nodes.end(),
                     [](const auto* x, const auto* y) { return x->first.size() < y->first.size(); });
    for (const auto* node : nodes) {
        const auto s = counts_signature(node->second, params);
        if (s < 0) return {node->first, node->second, s};
    }
    throw std::logic_error("negative exponent at " + std::to_string(p) + " but no tower label has negative signature");
}

bool check_multinomial(const Partition& lambda, std::int64_t s, std::int64_t t) {
    if (s < 1 || t < 1) throw std::invalid_argument("s and t must be positive");
    const bool counts_ok = hook_count_divisible(lambda, s) - t * hook_count_divisible(lambda, s * t) >= 0;
    FactoredRatio ratio = hook_product_factored(lambda, s);
    ratio.multiply(hook_product_factored(lambda, s * t), -t);
    return counts_ok && ratio.is_integral();
}

bool check_divisor_family(const Partition& lambda, std::int64_t x, const std::vector<std::int64_t>& deltas) {
    if (x < 1 || deltas.empty()) throw std::invalid_argument("divisor family needs x >= 1 and a nonempty delta");
    for (auto d : deltas) {
        if (d < 1 || d % x != 0) {
            throw std::invalid_argument(std::to_string(x) + " does not divide delta entry " + std::to_string(d));
        }
    }
    const RatioParams params({x}, deltas);
    if (!params.is_balanced()) throw std::invalid_argument("1/x != sum 1/delta for " + params.to_string());
    return ratio_factored(lambda, params).is_integral();
}

std::string status_name(Status status) {
    switch (status) {
        case Status::integral_certified:
            return "Integral-Certified";
        case Status::fails:
            return "Fails";
        case Status::unknown_up_to_bound:
            return "Unknown-UpToBound";
    }
    return "?";
}

Verdict failing_verdict(const RatioParams& params, const Partition& mu, std::optional<HookShape> hook,
                        std::optional<int> bound, std::string reason) {
    auto [p, lambda] = construct_failing_lambda(mu, params);
    const auto v = valuation_at(lambda, params, p);
    const auto expected = static_cast<std::int64_t>(p) * counts_signature(mu, params);
    if (v >= 0 || v != expected) {
        throw std::logic_error("witness re-verification failed for " + params.to_string() + ": exponent " +
                               std::to_string(v) + " at " + std::to_string(p));
    }
    Witness witness{mu, p, std::move(lambda), v, hook};
    return Verdict{Status::fails, params, std::move(witness), bound, std::move(reason)};
}

bool is_divisor_family(const RatioParams& params) {
    if (params.num_gammas() != 1 || !params.is_balanced()) return false;
    const auto x = params.gammas()[0];
    return std::all_of(params.deltas().begin(), params.deltas().end(), [x](std::int64_t d) { return d % x == 0; });
}

Verdict decide(const RatioParams& params, int size_bound, const SearchOptions& options) {
    if (!params.is_balanced()) throw std::domain_error(params.to_string() + " is not balanced");
    if (size_bound < 0) throw std::out_of_range("size bound must be >= 0");
    if (params.height() == 1) {
        Verdict v = decide_height1(params, options);
        v.bound = size_bound;
        return v;
    }
    if (is_divisor_family(params)) {
        return Verdict{Status::integral_certified, params, std::nullopt, size_bound,
                       "gamma_1 divides every delta_l"};
    }
    if (const auto hook = find_failing_hook(params, options)) {
        return failing_verdict(params, construct_hook_partition(hook->arm, hook->leg), hook, size_bound,
                               "hook with arm " + std::to_string(hook->arm) + " and leg " + std::to_string(hook->leg));
    }
    if (const auto mu = find_failing_mu(params, size_bound, false, options)) {
        return failing_verdict(params, *mu, std::nullopt, size_bound, "exhaustive search");
    }
    return Verdict{Status::unknown_up_to_bound, params, std::nullopt, size_bound,
                   "no negative signature up to size " + std::to_string(size_bound)};
}

}  // namespace hookratio
