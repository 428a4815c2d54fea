#include "hookratio/height1.hpp"

#include <algorithm>

namespace hookratio {

namespace {

void require_height1(const RatioParams& params) {
    if (params.height() != 1) {
        throw std::domain_error("height-1 analysis needs L - K = 1; " + params.to_string() + " has height " +
                                std::to_string(params.height()));
    }
    if (!params.is_balanced()) throw std::domain_error(params.to_string() + " is not balanced");
}

ResidueSet normalized(const ResidueSet& s, std::int64_t modulus) {
    if (s.empty()) throw std::invalid_argument("sumset needs nonempty sets");
    ResidueSet out = s;
    for (auto v : out) {
        if (v < 0 || v >= modulus) throw std::invalid_argument("residue " + std::to_string(v) + " outside [0, P)");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ResidueSet add_sets(const ResidueSet& a, const ResidueSet& b, std::int64_t modulus) {
    std::vector<bool> hit(static_cast<std::size_t>(modulus));
    for (auto x : a)
        for (auto y : b) hit[static_cast<std::size_t>((x + y) % modulus)] = true;
    ResidueSet out;
    for (std::int64_t v = 0; v < modulus; ++v)
        if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

}  // namespace

PeriodSets period_sets(const RatioParams& params) {
    require_height1(params);
    const FTable table = build_ftable(params);
    if (table.min < 0) throw std::domain_error("f takes negative values for " + params.to_string());
    PeriodSets sets;
    sets.period = table.period;
    for (std::int64_t x = 0; x < table.period; ++x) {
        const auto v = table.at(x);
        (v == 0 ? sets.a0 : sets.a1).push_back(x);
        if (v == 1 && table.at((x + 1) % table.period) == 0) sets.y.push_back(x);
    }
    return sets;
}

SumsetReport sumset(const ResidueSet& a, const ResidueSet& b, std::int64_t modulus) {
    if (modulus < 1) throw std::invalid_argument("modulus must be positive");
    const ResidueSet aa = normalized(a, modulus);
    const ResidueSet bb = normalized(b, modulus);
    SumsetReport report;
    report.sumset = add_sets(aa, bb, modulus);

    std::vector<bool> in_sum(static_cast<std::size_t>(modulus));
    for (auto v : report.sumset) in_sum[static_cast<std::size_t>(v)] = true;
    for (std::int64_t g = 0; g < modulus; ++g) {
        const bool stable = std::all_of(report.sumset.begin(), report.sumset.end(), [&](std::int64_t v) {
            return in_sum[static_cast<std::size_t>((v + g) % modulus)];
        });
        if (stable) report.stabilizer.push_back(g);
    }

    const auto& s = report.stabilizer;
    report.kneser_lhs = static_cast<std::int64_t>(report.sumset.size());
    report.kneser_rhs = static_cast<std::int64_t>(add_sets(aa, s, modulus).size() + add_sets(bb, s, modulus).size()) -
                        static_cast<std::int64_t>(s.size());
    return report;
}

bool is_canonical_exception(const RatioParams& params) {
    const auto& g = params.gammas();
    const auto& d = params.deltas();
    return g.size() == 1 && d.size() == 2 && d[0] == 2 * g[0] && d[1] == 2 * g[0];
}

Verdict decide_height1(const RatioParams& params, const SearchOptions& options) {
    require_height1(params);
    const FTable table = build_ftable(params);
    if (table.min < 0) {
        std::int64_t x = 1;
        while (table.at(x) >= 0) ++x;
        return failing_verdict(params, Partition{static_cast<int>(x)}, std::nullopt, std::nullopt,
                               "one-row partition with f(" + std::to_string(x) + ") < 0");
    }
    if (const auto hook = find_failing_hook(params, options)) {
        return failing_verdict(params, construct_hook_partition(hook->arm, hook->leg), hook, std::nullopt,
                               "hook with arm " + std::to_string(hook->arm) + " and leg " + std::to_string(hook->leg));
    }
    if (!is_canonical_exception(params)) {
        throw TheoremViolation("no failing hook for " + params.to_string() +
                               ", which is not of the form ((x),(2x,2x)); this contradicts the height-1 classification");
    }
    Verdict v{Status::integral_certified, params, std::nullopt, std::nullopt, "canonical height-1 exception ((x),(2x,2x))"};
    return v;
}

Height1Report analyze_height1(const RatioParams& params, const SearchOptions& options) {
    Height1Report report{std::nullopt, {}, decide_height1(params, options)};
    const FTable table = build_ftable(params);
    if (table.min >= 0) {
        report.sets = period_sets(params);
        const auto sums = sumset(report.sets->a0, report.sets->a0, report.sets->period);
        std::vector<bool> hit(static_cast<std::size_t>(report.sets->period));
        for (auto v : sums.sumset) hit[static_cast<std::size_t>(v)] = true;
        for (std::int64_t v = 0; v < report.sets->period; ++v)
            if (!hit[static_cast<std::size_t>(v)]) report.sumset_missing.push_back(v);
    }
    return report;
}

}  // namespace hookratio
