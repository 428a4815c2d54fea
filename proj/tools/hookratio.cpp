// hookratio: command-line front end for the partition, ratio and integrality library.
//
// Exit codes: 0 certified / integral / ok, 1 fails / non-integral, 2 unknown up
// to the bound, 64 input error, 70 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hookratio/boundary.hpp"
#include "hookratio/height1.hpp"
#include "hookratio/integrality.hpp"
#include "hookratio/littlewood.hpp"
#include "hookratio/serialize.hpp"

using namespace hookratio;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Options {
    std::string partition;
    bool has_partition = false;
    std::string gamma;
    std::string delta;
    std::string params_file;
    int p = 0;
    int bound = 20;
    bool hooks_only = false;
    bool json = false;
    std::uint64_t seed = 20240917;
    int workers = 1;
    std::string core;
    std::vector<std::string> quotients;
    std::string kind = "quotient";
    std::int64_t s = 1;
    std::int64_t t = 2;
    std::int64_t max_xy = 6;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string paren(const Partition& lambda) { return "(" + lambda.to_string() + ")"; }

int size_cap() {
    if (const char* env = std::getenv("HOOKRATIO_MAX_SIZE")) {
        const int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return kDefaultMaxPartitionSize;
}

int capped_bound(int bound) {
    const int cap = size_cap();
    if (bound > cap) {
        std::cerr << "note: bound " << bound << " capped at " << cap << " (HOOKRATIO_MAX_SIZE)\n";
        return cap;
    }
    return bound;
}

Partition require_partition(const Options& o) {
    if (!o.has_partition) throw UsageError("--partition is required");
    return parse_partition(o.partition);
}

int require_p(const Options& o) {
    if (o.p < 2) throw UsageError("--p must be at least 2");
    return o.p;
}

RatioParams require_params(const Options& o) {
    if (!o.params_file.empty()) return read_params_file(o.params_file);
    if (o.gamma.empty() && o.delta.empty()) throw UsageError("give --gamma and --delta, or --params FILE");
    return RatioParams(parse_int_list(o.gamma), parse_int_list(o.delta));
}

int verdict_exit(Status s) {
    switch (s) {
        case Status::integral_certified:
            return kExitOk;
        case Status::fails:
            return kExitFails;
        case Status::unknown_up_to_bound:
            return kExitUnknown;
    }
    return kExitInternal;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_verdict(const Verdict& v) {
    std::cout << "params: " << v.params.to_string() << '\n';
    std::cout << "status: " << status_name(v.status) << '\n';
    if (v.bound) std::cout << "bound: " << *v.bound << '\n';
    std::cout << "reason: " << v.reason << '\n';
    if (v.witness) {
        const auto& w = *v.witness;
        std::cout << "mu: " << paren(w.mu) << '\n';
        if (w.hook) std::cout << "hook: arm " << w.hook->arm << ", leg " << w.hook->leg << '\n';
        std::cout << "p: " << w.p << '\n';
        std::cout << "lambda: " << paren(w.lambda) << '\n';
        std::cout << "valuation at p: " << w.valuation_at_p << '\n';
    }
}

// The core computed by the abacus agrees with random-order rim-hook removal.
void cross_check_core(const Partition& lambda, int p, std::uint64_t seed) {
    if (p_core_by_removal(lambda, p, seed) != p_core(lambda, p)) {
        throw std::logic_error("p-core mismatch between abacus and rim-hook removal");
    }
}

int run_hooks(const Options& o) {
    const Partition lambda = require_partition(o);
    const auto hooks = hook_multiset(lambda);
    if (o.json) {
        Json rows = Json::array();
        for (const auto& row : hook_diagram(lambda)) rows.push_back(row);
        print_json(Json{{"partition", to_json(lambda)},
                        {"size", lambda.size()},
                        {"hooks", rows},
                        {"multiset", hooks.values()},
                        {"dimension", dimension(lambda).str()}});
        return kExitOk;
    }
    std::cout << render_hook_diagram(lambda);
    std::cout << "size: " << lambda.size() << '\n';
    std::cout << "dimension: " << dimension(lambda).str() << '\n';
    return kExitOk;
}

int run_boundary(const Options& o) {
    const Partition lambda = require_partition(o);
    const auto b = to_boundary(lambda);
    if (o.json) {
        print_json(Json{{"partition", to_json(lambda)},
                        {"boundary", b.to_string()},
                        {"interior_zeros", b.interior_zeros()},
                        {"charge", b.charge()}});
        return kExitOk;
    }
    std::cout << b.to_string() << '\n';
    return kExitOk;
}

int run_decompose(const Options& o) {
    const Partition lambda = require_partition(o);
    const int p = require_p(o);
    const auto d = decompose(lambda, p);
    cross_check_core(lambda, p, o.seed);
    if (o.json) {
        Json j = to_json(d);
        j["partition"] = to_json(lambda);
        print_json(j);
        return kExitOk;
    }
    std::cout << "core: " << paren(d.core) << '\n';
    std::cout << "quotients:";
    for (const auto& q : d.quotients) std::cout << ' ' << paren(q);
    std::cout << "\ncharges:";
    for (auto c : d.charges) std::cout << ' ' << c;
    std::cout << '\n';
    return kExitOk;
}

int run_compose(const Options& o) {
    const int p = require_p(o);
    const Partition core = parse_partition(o.core);
    std::vector<Partition> quotients;
    for (const auto& q : o.quotients) quotients.push_back(parse_partition(q));
    if (quotients.empty()) quotients.resize(static_cast<std::size_t>(p));
    const Partition lambda = compose(core, quotients, p);
    if (o.json) {
        print_json(Json{{"partition", to_json(lambda)}, {"size", lambda.size()}});
    } else {
        std::cout << paren(lambda) << '\n';
    }
    return kExitOk;
}

int run_tower(const Options& o) {
    const Partition lambda = require_partition(o);
    const int p = require_p(o);
    if (o.kind != "quotient" && o.kind != "core") throw UsageError("--kind is quotient or core");
    cross_check_core(lambda, p, o.seed);
    const auto tower = o.kind == "core" ? core_tower(lambda, p) : quotient_tower(lambda, p);
    if (o.json) {
        print_json(to_json(tower));
        return kExitOk;
    }
    for (const auto& [word, label] : tower.labels()) {
        std::cout << (word.empty() ? "root" : word_to_string(word)) << ": " << paren(label) << '\n';
    }
    return kExitOk;
}

int run_ratio(const Options& o) {
    const Partition lambda = require_partition(o);
    const RatioParams params = require_params(o);
    const auto r = ratio_factored(lambda, params);
    if (o.json) {
        Json j = to_json(r);
        j["partition"] = to_json(lambda);
        j["gamma"] = params.gammas();
        j["delta"] = params.deltas();
        print_json(j);
    } else {
        std::cout << r.to_string() << '\n';
    }
    return r.is_integral() ? kExitOk : kExitFails;
}

int run_ftable(const Options& o) {
    const RatioParams params = require_params(o);
    const FTable table = build_ftable(params);
    if (o.json) {
        print_json(to_json(table));
        return kExitOk;
    }
    std::cout << "M: " << table.modulus << "\nP: " << table.period << "\nmin: " << table.min << "\nmax: " << table.max
              << '\n';
    for (std::int64_t x = 0; x < table.modulus; ++x) std::cout << "f(" << x << ") = " << table.at(x) << '\n';
    return kExitOk;
}

int run_check(const Options& o) {
    const RatioParams params = require_params(o);
    const Verdict v = decide(params, capped_bound(o.bound), {o.workers});
    if (o.json) {
        print_json(to_json(v));
    } else {
        print_verdict(v);
    }
    return verdict_exit(v.status);
}

int run_search_mu(const Options& o) {
    const RatioParams params = require_params(o);
    const int bound = capped_bound(o.bound);
    const auto mu = find_failing_mu(params, bound, o.hooks_only, {o.workers});
    if (o.json) {
        Json j{{"gamma", params.gammas()}, {"delta", params.deltas()}, {"bound", bound}, {"hooks_only", o.hooks_only}};
        j["mu"] = mu ? to_json(*mu) : Json(nullptr);
        j["signature"] = mu ? Json(counts_signature(*mu, params)) : Json(nullptr);
        print_json(j);
    } else if (mu) {
        std::cout << "mu: " << paren(*mu) << "\nsignature: " << counts_signature(*mu, params) << '\n';
    } else {
        std::cout << "no failing partition found\n";
    }
    return mu ? kExitFails : kExitUnknown;
}

int run_construct_lambda(const Options& o) {
    const Partition mu = require_partition(o);
    const RatioParams params = require_params(o);
    const auto built = construct_failing_lambda(mu, params);
    const auto v = valuation_at(built.lambda, params, built.p);
    if (o.json) {
        print_json(Json{{"mu", to_json(mu)},
                        {"signature", counts_signature(mu, params)},
                        {"p", built.p},
                        {"lambda", to_json(built.lambda)},
                        {"valuation_at_p", v}});
    } else {
        std::cout << "p: " << built.p << "\nlambda: " << paren(built.lambda) << "\nvaluation at p: " << v << '\n';
    }
    return kExitFails;
}

int run_extract_mu(const Options& o) {
    const Partition lambda = require_partition(o);
    const RatioParams params = require_params(o);
    const auto got = extract_failing_mu(lambda, params, static_cast<std::uint64_t>(require_p(o)));
    if (o.json) {
        print_json(Json{{"lambda", to_json(lambda)},
                        {"p", o.p},
                        {"word", word_to_string(got.word)},
                        {"mu", to_json(got.mu)},
                        {"signature", got.signature}});
    } else {
        std::cout << "word: " << word_to_string(got.word) << "\nmu: " << paren(got.mu)
                  << "\nsignature: " << got.signature << '\n';
    }
    return kExitFails;
}

int run_height1(const Options& o) {
    const RatioParams params = require_params(o);
    const auto report = analyze_height1(params, {o.workers});
    if (o.json) {
        print_json(to_json(report));
    } else {
        if (report.sets) {
            auto list = [](const ResidueSet& s) {
                std::string out;
                for (auto v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
                return "{" + out + "}";
            };
            std::cout << "P: " << report.sets->period << "\nA0: " << list(report.sets->a0)
                      << "\nA1: " << list(report.sets->a1) << "\nY: " << list(report.sets->y)
                      << "\nmissing from A0+A0: " << list(report.sumset_missing) << '\n';
        }
        print_verdict(report.verdict);
    }
    return verdict_exit(report.verdict.status);
}

int run_multinomial(const Options& o) {
    if (o.s < 1 || o.t < 1) throw UsageError("--s and --t must be positive");
    if (o.has_partition) {
        const bool ok = check_multinomial(parse_partition(o.partition), o.s, o.t);
        if (o.json) {
            print_json(Json{{"partition", o.partition}, {"s", o.s}, {"t", o.t}, {"holds", ok}});
        } else {
            std::cout << (ok ? "holds" : "violated") << '\n';
        }
        return ok ? kExitOk : kExitFails;
    }
    const int bound = capped_bound(o.bound);
    std::int64_t checked = 0;
    std::optional<Partition> first_bad;
    for (int n = 0; n <= bound && !first_bad; ++n) {
        for_each_partition(
            n,
            [&](const Partition& lambda) {
                ++checked;
                if (!first_bad && !check_multinomial(lambda, o.s, o.t)) first_bad = lambda;
            },
            bound);
    }
    if (o.json) {
        print_json(Json{{"s", o.s},
                        {"t", o.t},
                        {"bound", bound},
                        {"checked", checked},
                        {"counterexample", first_bad ? to_json(*first_bad) : Json(nullptr)}});
    } else {
        std::cout << "checked " << checked << " partitions up to size " << bound << ": "
                  << (first_bad ? "violated at " + paren(*first_bad) : std::string("holds")) << '\n';
    }
    return first_bad ? kExitFails : kExitOk;
}

int run_bober_scan(const Options& o) {
    if (o.max_xy < 1) throw UsageError("--max-xy must be positive");
    Json rows = Json::array();
    for (std::int64_t x = 1; x <= o.max_xy; ++x) {
        for (std::int64_t y = 1; y <= o.max_xy; ++y) {
            if (std::gcd(x, y) != 1) continue;
            for (const auto& inst : bober_families(x, y)) {
                const RatioParams image = phi_bijection(inst.reduced_params());
                const Verdict v = decide_height1(image, {o.workers});
                Json row{{"family", inst.family},
                         {"x", x},
                         {"y", y},
                         {"alpha", inst.alpha},
                         {"beta", inst.beta},
                         {"degenerate", inst.degenerate()},
                         {"gamma", image.gammas()},
                         {"delta", image.deltas()},
                         {"status", status_name(v.status)}};
                row["mu"] = v.witness ? to_json(v.witness->mu) : Json(nullptr);
                row["p"] = v.witness ? Json(v.witness->p) : Json(nullptr);
                if (!o.json) {
                    std::cout << "family " << inst.family << " (" << x << "," << y << ") -> " << image.to_string()
                              << (inst.degenerate() ? " [degenerate]" : "") << ": " << status_name(v.status);
                    if (v.witness) std::cout << ", mu " << paren(v.witness->mu) << ", p " << v.witness->p;
                    std::cout << '\n';
                }
                rows.push_back(row);
            }
        }
    }
    if (o.json) print_json(rows);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hook products, Littlewood decompositions and integrality of hook ratios"};
    app.require_subcommand(1);
    Options o;
    if (const char* s = std::getenv("HOOKRATIO_SEED")) o.seed = std::strtoull(s, nullptr, 10);

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "Machine-readable output");
        sub->add_option("--workers", o.workers, "Worker threads for searches")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "Seed for randomized cross-checks");
    };
    auto with_partition = [&](CLI::App* sub) {
        sub->add_option_function<std::string>(
            "--partition",
            [&](const std::string& v) {
                o.partition = v;
                o.has_partition = true;
            },
            "Partition, e.g. 18,7,6 or 66^55");
    };
    auto with_params = [&](CLI::App* sub) {
        sub->add_option("--gamma", o.gamma, "Numerator parameters, e.g. 1,30");
        sub->add_option("--delta", o.delta, "Denominator parameters, e.g. 2,3,5");
        sub->add_option("--params", o.params_file, "File with 'gamma:' and 'delta:' lines");
    };
    auto with_p = [&](CLI::App* sub) { sub->add_option("--p", o.p, "Modulus or prime"); };
    auto with_bound = [&](CLI::App* sub) { sub->add_option("--bound", o.bound, "Largest partition size searched"); };

    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> verbs;
    auto verb = [&](const char* name, const char* help, int (*fn)(const Options&)) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        verbs.emplace_back(sub, fn);
        return sub;
    };

    auto* hooks = verb("hooks", "Hook lengths of a partition", run_hooks);
    with_partition(hooks);
    auto* boundary = verb("boundary", "Boundary 01-sequence", run_boundary);
    with_partition(boundary);
    auto* dec = verb("decompose", "p-core and p-quotient", run_decompose);
    with_partition(dec);
    with_p(dec);
    auto* comp = verb("compose", "Partition from a p-core and p-quotient", run_compose);
    with_p(comp);
    comp->add_option("--core", o.core, "p-core (default empty)");
    comp->add_option("--quotient", o.quotients, "Quotient partition; repeat p times")->take_all();
    auto* tower = verb("tower", "Quotient or core tower", run_tower);
    with_partition(tower);
    with_p(tower);
    tower->add_option("--kind", o.kind, "quotient or core");
    auto* ratio = verb("ratio", "Exact factored hook ratio at a partition", run_ratio);
    with_partition(ratio);
    with_params(ratio);
    auto* ftable = verb("f-table", "Step function over one period", run_ftable);
    with_params(ftable);
    auto* check = verb("check", "Decide integrality for all partitions", run_check);
    with_params(check);
    with_bound(check);
    auto* search = verb("search-mu", "Search for a partition with negative signature", run_search_mu);
    with_params(search);
    with_bound(search);
    search->add_flag("--hooks-only", o.hooks_only, "Only scan hook shapes");
    auto* construct = verb("construct-lambda", "Non-integral partition from a failing mu", run_construct_lambda);
    with_partition(construct);
    with_params(construct);
    auto* extract = verb("extract-mu", "Failing mu from a non-integral partition", run_extract_mu);
    with_partition(extract);
    with_params(extract);
    with_p(extract);
    auto* h1 = verb("height1", "Height-1 period sets and decision", run_height1);
    with_params(h1);
    auto* multi = verb("multinomial", "h_s - t h_st >= 0 and integrality of H_s / H_st^t", run_multinomial);
    with_partition(multi);
    with_bound(multi);
    multi->add_option("--s", o.s, "s >= 1");
    multi->add_option("--t", o.t, "t >= 1");
    auto* bober = verb("bober-scan", "Decide the images of the three height-1 factorial families", run_bober_scan);
    bober->add_option("--max-xy", o.max_xy, "Largest x and y");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        for (const auto& [sub, fn] : verbs) {
            if (sub->parsed()) return fn(o);
        }
    } catch (const TheoremViolation& e) {
        std::cerr << "diagnostic: " << e.what() << '\n';
        return kExitInternal;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
