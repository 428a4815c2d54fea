#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hookratio/integrality.hpp"
#include "hookratio/ratio_params.hpp"

namespace hookratio {

/// Sorted distinct residues in [0, P).
using ResidueSet = std::vector<std::int64_t>;

/// Level sets of f over one period, for height-1 parameters with 0 <= f <= 1.
struct PeriodSets {
    std::int64_t period = 0;
    ResidueSet a0;  // f(x) = 0
    ResidueSet a1;  // f(x) = 1
    ResidueSet y;   // drops: f(y) = 1 and f(y + 1 mod P) = 0
};

/// Throws std::domain_error unless the parameters are balanced of height 1 and
/// f is nonnegative.
PeriodSets period_sets(const RatioParams& params);

struct SumsetReport {
    ResidueSet sumset;
    ResidueSet stabilizer;
    std::int64_t kneser_lhs = 0;  // |A + B|
    std::int64_t kneser_rhs = 0;  // |A + S| + |B + S| - |S|
};

/// A + B in Z/P with its stabilizer. Throws std::invalid_argument on an empty
/// set, P < 1, or a residue outside [0, P).
SumsetReport sumset(const ResidueSet& a, const ResidueSet& b, std::int64_t modulus);

/// K = 1, L = 2 and delta_1 = delta_2 = 2 gamma_1.
bool is_canonical_exception(const RatioParams& params);

/// The hook scan found nothing for parameters other than the canonical exception.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Complete decision at height 1. If f is negative somewhere, fails on the one-row
/// partition (x) at the least such x. Otherwise scans hooks in (a + l, a) order;
/// with no hit the parameters must be the canonical exception (certified), else
/// TheoremViolation is thrown. Throws std::domain_error for wrong height or unbalanced input.
Verdict decide_height1(const RatioParams& params, const SearchOptions& options = {});

struct Height1Report {
    std::optional<PeriodSets> sets;  // absent when f takes negative values
    ResidueSet sumset_missing;       // Z/P minus (A0 + A0)
    Verdict verdict;
};

Height1Report analyze_height1(const RatioParams& params, const SearchOptions& options = {});

}  // namespace hookratio
