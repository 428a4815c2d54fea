#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hookratio {

/// Parameter vectors (gamma, delta) of a hook ratio
/// prod_k H_{gamma_k}(lambda) / prod_l H_{delta_l}(lambda).
///
/// Entries are positive and no gamma_k equals a delta_l. Order is kept as
/// given.
class RatioParams {
public:
    /// Throws std::invalid_argument on a non-positive entry, a value shared by
    /// both sides, or two empty vectors.
    RatioParams(std::vector<std::int64_t> gammas, std::vector<std::int64_t> deltas);

    /// Cancels values common to both sides (one occurrence against one) before
    /// constructing. The ratio is unchanged by the cancellation.
    static RatioParams reduced(std::vector<std::int64_t> gammas, std::vector<std::int64_t> deltas);

    const std::vector<std::int64_t>& gammas() const { return gammas_; }
    const std::vector<std::int64_t>& deltas() const { return deltas_; }

    std::size_t num_gammas() const { return gammas_.size(); }
    std::size_t num_deltas() const { return deltas_.size(); }

    /// L - K.
    std::int64_t height() const;

    /// lcm of every entry. Throws std::overflow_error past int64.
    std::int64_t lcm() const;

    /// sum 1/gamma_k == sum 1/delta_l, decided in integers over the common denominator lcm().
    bool is_balanced() const;

    /// "((1,30),(2,3,5))".
    std::string to_string() const;

    friend bool operator==(const RatioParams&, const RatioParams&) = default;

private:
    std::vector<std::int64_t> gammas_;
    std::vector<std::int64_t> deltas_;
};

/// sum_k floor(x / gamma_k) - sum_l floor(x / delta_l), for x >= 0.
std::int64_t f_value(std::int64_t x, const RatioParams& params);

/// sum_k [gamma_k | y] - sum_l [delta_l | y], for y >= 1.
std::int64_t g_value(std::int64_t y, const RatioParams& params);

/// One period window of f for balanced parameters.
struct FTable {
    RatioParams params;
    std::int64_t modulus = 0;  // M, the lcm of all parameters
    std::int64_t period = 0;   // least P dividing M with f P-periodic
    std::vector<std::int64_t> values;  // f(0..M-1)
    std::int64_t min = 0;
    std::int64_t max = 0;

    /// f(x) for any x >= 0, by periodicity.
    std::int64_t at(std::int64_t x) const { return values[static_cast<std::size_t>(x % modulus)]; }
};

/// Throws std::domain_error for unbalanced parameters.
FTable build_ftable(const RatioParams& params);

/// Outcome of each of the f-table properties, evaluated on integers.
struct FProperties {
    bool periodic = false;       // f(x + M) = f(x) over a 3M window
    bool symmetric = false;      // f(x) + f(M - 1 - x) = L - K on [0, M)
    bool endpoint = false;       // f(M - 1) = f(P - 1) = L - K
    bool bounded = false;        // 0 <= f <= L - K, or true when some f(x) < 0
    bool one_row_integral = false;
};

/// Throws std::domain_error for unbalanced parameters.
FProperties check_f_properties(const RatioParams& params);

/// min f >= 0 over one period: integrality of the one-row (factorial) ratio for every n.
/// Throws std::domain_error for unbalanced parameters.
bool landau_one_row_check(const RatioParams& params);

/// (mu, nu) -> ((M / mu_k), (M / nu_l)), M the lcm of all entries.
RatioParams phi_bijection(const RatioParams& params);

/// An instance of one of the three infinite height-1 families of integral
/// factorial ratios u(n; alpha, beta) = prod (alpha_k n)! / prod (beta_l n)!.
struct BoberInstance {
    int family = 1;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::vector<std::int64_t> alpha;
    std::vector<std::int64_t> beta;

    /// Some alpha_k equals some beta_l, so the instance collapses to a lower
    /// factor count and is outside the family's hypotheses.
    bool degenerate() const;

    /// (alpha, beta) with shared values cancelled.
    RatioParams reduced_params() const;
};

/// Substitutes (x, y) into the applicable families, in family order:
/// ((x+y),(x,y)); ((2x,y),(x,2y,x-y)) when x > y; ((2x,2y),(x,y,x+y)).
/// Throws std::invalid_argument unless x, y >= 1 and gcd(x, y) = 1.
std::vector<BoberInstance> bober_families(std::int64_t x, std::int64_t y);

/// K + L <= 287 (L - K)^3.44. Throws std::domain_error when L - K <= 0.
bool check_size_bound(std::size_t num_gammas, std::size_t num_deltas);
bool check_size_bound(const RatioParams& params);

}  // namespace hookratio
