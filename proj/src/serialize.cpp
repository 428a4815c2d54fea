#include "hookratio/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace hookratio {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

Json int_array(const std::vector<std::int64_t>& values) {
    Json out = Json::array();
    for (auto v : values) out.push_back(v);
    return out;
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        std::int64_t v = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
            throw std::invalid_argument("bad integer '" + std::string(item) + "' in list '" + std::string(text) + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

RatioParams parse_params_text(std::string_view text) {
    std::optional<std::vector<std::int64_t>> gammas;
    std::optional<std::vector<std::int64_t>> deltas;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'gamma: ...' or 'delta: ...'");
        }
        const auto key = trim(line.substr(0, colon));
        if (key != "gamma" && key != "delta") {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
        auto values = parse_int_list(line.substr(colon + 1));
        auto& slot = key == "gamma" ? gammas : deltas;
        if (slot) throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate '" + std::string(key) + "'");
        slot = std::move(values);
    }
    if (!gammas || !deltas) throw std::invalid_argument("parameter file needs both 'gamma:' and 'delta:' lines");
    return RatioParams(std::move(*gammas), std::move(*deltas));
}

RatioParams read_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open parameter file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_params_text(buf.str());
}

Json to_json(const Partition& lambda) { return lambda.to_string(); }

Json to_json(const LittlewoodDecomposition& d) {
    Json quotients = Json::array();
    for (const auto& q : d.quotients) quotients.push_back(to_json(q));
    return Json{{"p", d.p}, {"core", to_json(d.core)}, {"quotients", quotients}, {"charges", int_array(d.charges)}};
}

Json to_json(const PartitionTower& tower) {
    Json labels = Json::object();
    for (const auto& [word, label] : tower.labels()) labels[word_to_string(word)] = to_json(label);
    return Json{{"kind", tower.kind() == TowerKind::quotient ? "quotient" : "core"},
                {"p", tower.p()},
                {"depth", tower.depth()},
                {"labels", labels}};
}

Json to_json(const FTable& table) {
    return Json{{"M", table.modulus},
                {"P", table.period},
                {"values", int_array(table.values)},
                {"min", table.min},
                {"max", table.max}};
}

Json to_json(const FactoredRatio& ratio) {
    Json exponents = Json::object();
    for (const auto& [p, e] : ratio.exponents()) exponents[std::to_string(p)] = e;
    return Json{{"exponents", exponents}, {"integral", ratio.is_integral()}, {"text", ratio.to_string()}};
}

Json to_json(const Verdict& verdict) {
    Json out{{"status", status_name(verdict.status)},
             {"gamma", int_array(verdict.params.gammas())},
             {"delta", int_array(verdict.params.deltas())}};
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        Json witness{{"mu", to_json(w.mu)}, {"p", w.p}, {"lambda", to_json(w.lambda)}};
        if (w.hook) witness["hook"] = Json{{"arm", w.hook->arm}, {"leg", w.hook->leg}};
        out["witness"] = witness;
    } else {
        out["witness"] = nullptr;
    }
    out["bound"] = verdict.bound ? Json(*verdict.bound) : Json(nullptr);
    out["valuation_at_p"] = verdict.witness ? Json(verdict.witness->valuation_at_p) : Json(nullptr);
    out["reason"] = verdict.reason;
    return out;
}

Json to_json(const PeriodSets& sets) {
    return Json{{"P", sets.period}, {"A0", int_array(sets.a0)}, {"A1", int_array(sets.a1)}, {"Y", int_array(sets.y)}};
}

Json to_json(const Height1Report& report) {
    Json out = Json::object();
    if (report.sets) {
        out = to_json(*report.sets);
        out["sumset_missing"] = int_array(report.sumset_missing);
    } else {
        out = Json{{"P", nullptr}, {"A0", nullptr}, {"A1", nullptr}, {"Y", nullptr}, {"sumset_missing", nullptr}};
    }
    const Json verdict = to_json(report.verdict);
    out["verdict"] = verdict["status"];
    out["witness"] = verdict["witness"];
    return out;
}

std::string render_hook_diagram(const Partition& lambda) {
    const auto rows = hook_diagram(lambda);
    if (rows.empty()) return "(empty)\n";
    const auto width = std::to_string(rows.front().front()).size();
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            const auto cell = std::to_string(row[c]);
            if (c > 0) out += ' ';
            out += std::string(width - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

}  // namespace hookratio
