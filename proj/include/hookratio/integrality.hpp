#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hookratio/littlewood.hpp"
#include "hookratio/number_theory.hpp"
#include "hookratio/partition.hpp"
#include "hookratio/ratio_params.hpp"

namespace hookratio {

/// Nonzero rational number kept as prime -> signed exponent. The empty map is 1.
class FactoredRatio {
public:
    /// Multiplies by n^power, n >= 1.
    void multiply(std::uint64_t n, std::int64_t power = 1);
    void multiply(const FactoredRatio& other, std::int64_t power = 1);

    const std::map<std::uint64_t, std::int64_t>& exponents() const { return exponents_; }
    std::int64_t exponent(std::uint64_t p) const;

    bool is_integral() const;
    bool is_one() const { return exponents_.empty(); }

    BigInt numerator() const;
    BigInt denominator() const;

    /// "2^60 * 3^53 / 11^11"; "1" for the empty map.
    std::string to_string() const;

    friend bool operator==(const FactoredRatio&, const FactoredRatio&) = default;

private:
    void add(std::uint64_t p, std::int64_t e);

    std::map<std::uint64_t, std::int64_t> exponents_;
};

/// H_r(lambda) = product of h / r over hooks h divisible by r.
FactoredRatio hook_product_factored(const Partition& lambda, std::int64_t r);

/// prod_k H_{gamma_k}(lambda) / prod_l H_{delta_l}(lambda).
FactoredRatio ratio_factored(const Partition& lambda, const RatioParams& params);

/// sum_k h_{gamma_k}(mu) - sum_l h_{delta_l}(mu).
std::int64_t counts_signature(const Partition& mu, const RatioParams& params);

/// Exponent of the prime p in the ratio at lambda, from hook counts only:
/// sum_k sum_{i>=1} h_{gamma_k p^i} - sum_l sum_{i>=1} h_{delta_l p^i}.
/// Throws std::invalid_argument if p is not prime.
std::int64_t valuation_at(const Partition& lambda, const RatioParams& params, std::uint64_t p);

struct SearchOptions {
    int workers = 1;
};

/// Arm and leg of a hook partition (1 + arm, 1^leg).
struct HookShape {
    int arm = 0;
    int leg = 0;
};

/// Least (arm + leg, arm) over arm, leg in [0, P) with f(a) + f(l) + f(a+l+1) - f(a+l) < 0,
/// the hook partition's signature. P is the period of f for balanced parameters and
/// the lcm otherwise.
std::optional<HookShape> find_failing_hook(const RatioParams& params, const SearchOptions& options = {});

/// A partition with negative signature. hooks_only restricts to the hook scan
/// (no size limit). Otherwise hooks of size <= size_bound come first, then every
/// partition by increasing size up to size_bound; within the first size with a
/// hit the lexicographically least partition is returned.
/// Throws std::out_of_range when size_bound is negative.
std::optional<Partition> find_failing_mu(const RatioParams& params, int size_bound, bool hooks_only,
                                         const SearchOptions& options = {});

struct FailingLambda {
    std::uint64_t p = 0;
    Partition lambda;
};

/// p = least prime above every hook of mu; lambda has empty p-core and p
/// copies of mu as its p-quotient. The exponent of p in the ratio at lambda is
/// p * counts_signature(mu). Throws std::invalid_argument unless the signature is negative.
FailingLambda construct_failing_lambda(const Partition& mu, const RatioParams& params);

struct ExtractedMu {
    TreeWord word;
    Partition mu;
    std::int64_t signature = 0;
};

/// Quotient-tower label lambda^(w), |w| >= 1, with negative signature; words are
/// scanned by length and then lexicographically. Throws std::invalid_argument
/// when the exponent of p in the ratio at lambda is nonnegative.
ExtractedMu extract_failing_mu(const Partition& lambda, const RatioParams& params, std::uint64_t p);

/// h_s(lambda) - t h_{st}(lambda) >= 0 and H_s(lambda) / H_{st}(lambda)^t is an integer.
/// Throws std::invalid_argument unless s, t >= 1.
bool check_multinomial(const Partition& lambda, std::int64_t s, std::int64_t t);

/// Integrality of prod H_x / prod H_{delta_l} at lambda. Throws std::invalid_argument
/// unless x divides every delta_l and 1/x = sum 1/delta_l.
bool check_divisor_family(const Partition& lambda, std::int64_t x, const std::vector<std::int64_t>& deltas);

enum class Status { integral_certified, fails, unknown_up_to_bound };

/// "Integral-Certified", "Fails", "Unknown-UpToBound".
std::string status_name(Status status);

struct Witness {
    Partition mu;
    std::uint64_t p = 0;
    Partition lambda;
    std::int64_t valuation_at_p = 0;
    std::optional<HookShape> hook;
};

struct Verdict {
    Status status = Status::unknown_up_to_bound;
    RatioParams params;
    std::optional<Witness> witness;
    std::optional<int> bound;
    std::string reason;
};

/// Builds and re-verifies the witness for mu. Throws std::logic_error if the
/// constructed lambda does not have a negative exponent at p.
Verdict failing_verdict(const RatioParams& params, const Partition& mu, std::optional<HookShape> hook,
                        std::optional<int> bound, std::string reason);

/// K = 1 and gamma_1 divides every delta_l (balanced). Covers ((s),(st^t)).
bool is_divisor_family(const RatioParams& params);

/// Fails with a re-verified witness, Integral-Certified for whitelisted
/// families, Unknown-UpToBound otherwise. Height 1 is decided completely.
/// Throws std::domain_error for unbalanced parameters, std::out_of_range for a negative bound.
Verdict decide(const RatioParams& params, int size_bound, const SearchOptions& options = {});

}  // namespace hookratio
