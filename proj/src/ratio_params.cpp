#include "hookratio/ratio_params.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hookratio/number_theory.hpp"

namespace hookratio {

namespace {

std::string join(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

void require_balanced(const RatioParams& params, const char* what) {
    if (!params.is_balanced()) {
        throw std::domain_error(std::string(what) + " needs balanced parameters; " + params.to_string() +
                                " has sum 1/gamma != sum 1/delta");
    }
}

}  // namespace

RatioParams::RatioParams(std::vector<std::int64_t> gammas, std::vector<std::int64_t> deltas)
    : gammas_(std::move(gammas)), deltas_(std::move(deltas)) {
    if (gammas_.empty() && deltas_.empty()) throw std::invalid_argument("ratio parameters are both empty");
    for (const auto* side : {&gammas_, &deltas_}) {
        for (auto v : *side) {
            if (v <= 0) throw std::invalid_argument("ratio parameters must be positive, got " + std::to_string(v));
        }
    }
    for (auto g : gammas_) {
        if (std::find(deltas_.begin(), deltas_.end(), g) != deltas_.end()) {
            throw std::invalid_argument("value " + std::to_string(g) + " appears in both gamma and delta");
        }
    }
}

RatioParams RatioParams::reduced(std::vector<std::int64_t> gammas, std::vector<std::int64_t> deltas) {
    std::vector<std::int64_t> kept;
    for (auto g : gammas) {
        auto it = std::find(deltas.begin(), deltas.end(), g);
        if (it != deltas.end()) {
            deltas.erase(it);
        } else {
            kept.push_back(g);
        }
    }
    return RatioParams(std::move(kept), std::move(deltas));
}

std::int64_t RatioParams::height() const {
    return static_cast<std::int64_t>(deltas_.size()) - static_cast<std::int64_t>(gammas_.size());
}

std::int64_t RatioParams::lcm() const {
    std::int64_t m = 1;
    for (auto v : gammas_) m = checked_lcm(m, v);
    for (auto v : deltas_) m = checked_lcm(m, v);
    return m;
}

bool RatioParams::is_balanced() const {
    const std::int64_t m = lcm();
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    for (auto v : gammas_) lhs += m / v;
    for (auto v : deltas_) rhs += m / v;
    return lhs == rhs;
}

std::string RatioParams::to_string() const { return "((" + join(gammas_) + "),(" + join(deltas_) + "))"; }

std::int64_t f_value(std::int64_t x, const RatioParams& params) {
    if (x < 0) throw std::invalid_argument("f is evaluated at x >= 0 only");
    std::int64_t s = 0;
    for (auto g : params.gammas()) s += x / g;
    for (auto d : params.deltas()) s -= x / d;
    return s;
}

std::int64_t g_value(std::int64_t y, const RatioParams& params) {
    if (y < 1) throw std::invalid_argument("g is evaluated at y >= 1 only");
    std::int64_t s = 0;
    for (auto g : params.gammas()) s += (y % g == 0);
    for (auto d : params.deltas()) s -= (y % d == 0);
    return s;
}

FTable build_ftable(const RatioParams& params) {
    require_balanced(params, "build_ftable");
    FTable table{params, 0, 0, {}, 0, 0};
    table.modulus = params.lcm();
    table.values.resize(static_cast<std::size_t>(table.modulus));
    // Prefix sums of g reproduce f.
    std::int64_t running = 0;
    table.values[0] = 0;
    for (std::int64_t x = 1; x < table.modulus; ++x) {
        running += g_value(x, params);
        table.values[static_cast<std::size_t>(x)] = running;
    }
    const auto [lo, hi] = std::minmax_element(table.values.begin(), table.values.end());
    table.min = *lo;
    table.max = *hi;

    table.period = table.modulus;
    for (std::int64_t p = 1; p < table.modulus; ++p) {
        if (table.modulus % p != 0) continue;
        bool periodic = true;
        for (std::int64_t x = 0; x + p < table.modulus && periodic; ++x) {
            periodic = table.values[static_cast<std::size_t>(x)] == table.values[static_cast<std::size_t>(x + p)];
        }
        if (periodic) {
            table.period = p;
            break;
        }
    }
    return table;
}

FProperties check_f_properties(const RatioParams& params) {
    const FTable table = build_ftable(params);
    const std::int64_t m = table.modulus;
    const std::int64_t h = params.height();
    FProperties out;

    out.periodic = true;
    for (std::int64_t x = 0; x < 2 * m && out.periodic; ++x) out.periodic = f_value(x, params) == f_value(x + m, params);

    out.symmetric = true;
    for (std::int64_t x = 0; x < m && out.symmetric; ++x) out.symmetric = table.at(x) + table.at(m - 1 - x) == h;

    out.endpoint = table.at(m - 1) == h && table.at(table.period - 1) == h;
    out.one_row_integral = table.min >= 0;
    out.bounded = !out.one_row_integral || (table.min >= 0 && table.max <= h);
    return out;
}

bool landau_one_row_check(const RatioParams& params) { return build_ftable(params).min >= 0; }

RatioParams phi_bijection(const RatioParams& params) {
    const std::int64_t m = params.lcm();
    std::vector<std::int64_t> gammas;
    std::vector<std::int64_t> deltas;
    for (auto v : params.gammas()) gammas.push_back(m / v);
    for (auto v : params.deltas()) deltas.push_back(m / v);
    return RatioParams(std::move(gammas), std::move(deltas));
}

bool BoberInstance::degenerate() const {
    return std::any_of(alpha.begin(), alpha.end(),
                       [this](std::int64_t a) { return std::find(beta.begin(), beta.end(), a) != beta.end(); });
}

RatioParams BoberInstance::reduced_params() const { return RatioParams::reduced(alpha, beta); }

std::vector<BoberInstance> bober_families(std::int64_t x, std::int64_t y) {
    if (x < 1 || y < 1) throw std::invalid_argument("family parameters must be positive");
    if (std::gcd(x, y) != 1) {
        throw std::invalid_argument("family parameters need gcd(x, y) = 1, got (" + std::to_string(x) + "," +
                                    std::to_string(y) + ")");
    }
    std::vector<BoberInstance> out;
    out.push_back({1, x, y, {x + y}, {x, y}});
    if (x > y) out.push_back({2, x, y, {2 * x, y}, {x, 2 * y, x - y}});
    out.push_back({3, x, y, {2 * x, 2 * y}, {x, y, x + y}});
    return out;
}

bool check_size_bound(std::size_t num_gammas, std::size_t num_deltas) {
    if (num_deltas <= num_gammas) throw std::domain_error("the size bound is stated for positive height only");
    const double height = static_cast<double>(num_deltas - num_gammas);
    return static_cast<double>(num_gammas + num_deltas) <= 287.0 * std::pow(height, 3.44);
}

bool check_size_bound(const RatioParams& params) {
    return check_size_bound(params.num_gammas(), params.num_deltas());
}

}  // namespace hookratio
