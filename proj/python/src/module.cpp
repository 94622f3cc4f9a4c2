#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsl/fusion.hpp"
#include "bsl/galois_ring.hpp"
#include "bsl/hadamard.hpp"
#include "bsl/scheme.hpp"
#include "bsl/serialize.hpp"

namespace py = pybind11;
using namespace bsl;

namespace {

// Results cross the boundary as plain dicts/lists, same layout as the CLI JSON.
py::object to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

std::shared_ptr<const GaloisRing> ring(int e, std::optional<Gf2Poly> phi) {
    return GaloisRing::construct(e, phi);
}

Constancy parse_constancy(const std::string& mode, std::size_t samples, std::uint64_t seed) {
    if (mode == "full") return Constancy::full();
    if (mode == "sample") return Constancy::sample(samples, seed);
    throw std::invalid_argument("constancy must be 'full' or 'sample'");
}

const std::vector<std::size_t> kClass3Pairing{0, 2, 1, 3};

}  // namespace

PYBIND11_MODULE(_bsl, m) {
    m.doc() = "Association schemes on GR(4,e), their fusions and hermitian Butson Hadamard weights";

    m.def(
        "ring_summary", [](int e, std::optional<Gf2Poly> phi) { return to_py(ring_summary(*ring(e, phi))); },
        py::arg("e"), py::arg("phi") = py::none());

    m.def(
        "eigenmatrix",
        [](int e, const std::string& constancy, std::size_t samples, std::uint64_t seed, std::optional<Gf2Poly> phi) {
            const auto part = build_partition(ring(e, phi));
            Eigenmatrix P;
            {
                py::gil_scoped_release release;
                P = eigenmatrix(part, parse_constancy(constancy, samples, seed));
            }
            return to_py(to_json(P));
        },
        py::arg("e"), py::arg("constancy") = "full", py::arg("samples") = 1000, py::arg("seed") = 0,
        py::arg("phi") = py::none());

    m.def(
        "verify_scheme",
        [](int e, std::optional<Gf2Poly> phi) {
            const auto part = build_partition(ring(e, phi));
            Scheme s;
            {
                py::gil_scoped_release release;
                s = verify_scheme(part);
            }
            return to_py(to_json(s));
        },
        py::arg("e"), py::arg("phi") = py::none());

    m.def(
        "fusion_table",
        [](int e, std::size_t min_class) {
            const auto part = build_partition(ring(e, std::nullopt));
            const auto table = fusion_table(eigenmatrix(part), part.pairing(), min_class);
            json rows = json::array();
            for (const auto& f : table) {
                json row = to_json(f);
                row["t_invariant"] = t_invariance(part, f.partition);
                rows.push_back(std::move(row));
            }
            return to_py(rows);
        },
        py::arg("e"), py::arg("min_class") = 3);

    m.def(
        "chm_search",
        [](int e, int roots) {
            const auto part = build_partition(ring(e, std::nullopt));
            const auto sols = search_butson(eigenmatrix(part), part.pairing(), roots);
            json out = json::array();
            for (const auto& s : sols) out.push_back(to_json(s));
            return to_py(out);
        },
        py::arg("e"), py::arg("roots") = 4);

    m.def(
        "chm_class3_search",
        [](long long a, int roots) {
            if (a < 1) throw std::invalid_argument("a must be positive");
            const auto sols = search_butson(class3_eigenmatrix(class3_case_i(a)), kClass3Pairing, roots);
            json out = json::array();
            for (const auto& s : sols) out.push_back(to_json(s));
            return to_py(out);
        },
        py::arg("a"), py::arg("roots") = 4);

    m.def(
        "chm_verify",
        [](int e, std::vector<long long> exponents, int roots, bool dense) {
            const auto part = build_partition(ring(e, std::nullopt));
            if (exponents.size() != part.classes().size())
                throw std::invalid_argument("expected " + std::to_string(part.classes().size()) + " exponents");
            const WeightVector w(roots, std::move(exponents));
            const auto P = eigenmatrix(part);
            json out{{"weights", to_json(w)},
                     {"hermitian", w.is_hermitian(part.pairing())},
                     {"chm_gamma", is_chm_gamma(P, w)},
                     {"chm_ezero", is_chm_ezero(P, w)},
                     {"form", form_name(classify(w).form)}};
            out["chm_direct"] = dense ? json(is_chm_direct(dense_weight_matrix(part, w))) : json(nullptr);
            return to_py(out);
        },
        py::arg("e"), py::arg("exponents"), py::arg("roots") = 4, py::arg("dense") = true);

    m.def(
        "check_identity",
        [](const std::string& name, int e) {
            const IdentityId id = parse_identity_id(name);
            const auto P = eigenmatrix(build_partition(ring(e, std::nullopt)));
            return to_py(to_json(verify_identity(id, &P)));
        },
        py::arg("name"), py::arg("e") = 3);

    m.def("identity_names", [] {
        std::vector<std::string> names;
        for (auto id : all_identity_ids()) names.push_back(identity_name(id));
        return names;
    });
}
