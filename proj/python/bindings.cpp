#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hookratio/boundary.hpp"
#include "hookratio/height1.hpp"
#include "hookratio/integrality.hpp"
#include "hookratio/littlewood.hpp"
#include "hookratio/serialize.hpp"

namespace py = pybind11;
using namespace hookratio;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

std::vector<int> to_list(const Partition& lambda) { return {lambda.parts().begin(), lambda.parts().end()}; }

RatioParams to_params(const std::vector<std::int64_t>& gammas, const std::vector<std::int64_t>& deltas) {
    return RatioParams(gammas, deltas);
}

py::object verdict_dict(const Verdict& v) {
    return py::module_::import("json").attr("loads")(to_json(v).dump());
}

}  // namespace

PYBIND11_MODULE(_hookratio, m) {
    m.doc() = "Hook products, Littlewood decompositions and integrality of hook ratios";

    py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_RuntimeError);

    m.def("parse_partition", [](const std::string& text) { return to_list(parse_partition(text)); }, py::arg("text"));
    m.def("partition_text", [](const std::vector<int>& parts) { return to_partition(parts).to_string(); },
          py::arg("parts"));
    m.def("hook_lengths", [](const std::vector<int>& parts) { return hook_multiset(to_partition(parts)).values(); },
          py::arg("parts"));
    m.def("hook_diagram", [](const std::vector<int>& parts) { return hook_diagram(to_partition(parts)); },
          py::arg("parts"));
    m.def("boundary", [](const std::vector<int>& parts) { return to_boundary(to_partition(parts)).to_string(); },
          py::arg("parts"));

    m.def(
        "decompose",
        [](const std::vector<int>& parts, int p) {
            const auto d = decompose(to_partition(parts), p);
            std::vector<std::vector<int>> quotients;
            for (const auto& q : d.quotients) quotients.push_back(to_list(q));
            return py::make_tuple(to_list(d.core), quotients, d.charges);
        },
        py::arg("parts"), py::arg("p"));
    m.def(
        "compose",
        [](const std::vector<int>& core, const std::vector<std::vector<int>>& quotients, int p) {
            std::vector<Partition> qs;
            for (const auto& q : quotients) qs.push_back(to_partition(q));
            return to_list(compose(to_partition(core), qs, p));
        },
        py::arg("core"), py::arg("quotients"), py::arg("p"));
    m.def("p_core", [](const std::vector<int>& parts, int p) { return to_list(p_core(to_partition(parts), p)); },
          py::arg("parts"), py::arg("p"));

    m.def(
        "f_table",
        [](const std::vector<std::int64_t>& gammas, const std::vector<std::int64_t>& deltas) {
            const FTable t = build_ftable(to_params(gammas, deltas));
            py::dict out;
            out["M"] = t.modulus;
            out["P"] = t.period;
            out["values"] = t.values;
            out["min"] = t.min;
            out["max"] = t.max;
            return out;
        },
        py::arg("gammas"), py::arg("deltas"));

    m.def(
        "ratio_exponents",
        [](const std::vector<int>& parts, const std::vector<std::int64_t>& gammas,
           const std::vector<std::int64_t>& deltas) {
            return ratio_factored(to_partition(parts), to_params(gammas, deltas)).exponents();
        },
        py::arg("parts"), py::arg("gammas"), py::arg("deltas"));
    m.def(
        "counts_signature",
        [](const std::vector<int>& parts, const std::vector<std::int64_t>& gammas,
           const std::vector<std::int64_t>& deltas) {
            return counts_signature(to_partition(parts), to_params(gammas, deltas));
        },
        py::arg("parts"), py::arg("gammas"), py::arg("deltas"));
    m.def(
        "construct_failing_lambda",
        [](const std::vector<int>& mu, const std::vector<std::int64_t>& gammas, const std::vector<std::int64_t>& deltas) {
            const auto built = construct_failing_lambda(to_partition(mu), to_params(gammas, deltas));
            return py::make_tuple(built.p, built.lambda.to_string());
        },
        py::arg("mu"), py::arg("gammas"), py::arg("deltas"));
    m.def(
        "decide",
        [](const std::vector<std::int64_t>& gammas, const std::vector<std::int64_t>& deltas, int bound, int workers) {
            Verdict v = [&] {
                py::gil_scoped_release release;
                return decide(to_params(gammas, deltas), bound, {workers});
            }();
            return verdict_dict(v);
        },
        py::arg("gammas"), py::arg("deltas"), py::arg("bound") = 20, py::arg("workers") = 1);
    m.def(
        "decide_height1",
        [](const std::vector<std::int64_t>& gammas, const std::vector<std::int64_t>& deltas) {
            return verdict_dict(decide_height1(to_params(gammas, deltas)));
        },
        py::arg("gammas"), py::arg("deltas"));
}
