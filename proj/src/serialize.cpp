#include "bsl/serialize.hpp"

#include <limits>

namespace bsl {

json to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

json to_json(const GaussInt& z) { return json::array({to_json(z.re()), to_json(z.im())}); }

GaussInt gauss_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("GaussInt must be [re, im]");
    return GaussInt(integer_from_json(j[0]), integer_from_json(j[1]));
}

json to_json(const CycInt& z) {
    json coeffs = json::array();
    for (const auto& c : z.coeffs()) coeffs.push_back(to_json(c));
    return json{{"order", z.order()}, {"coeffs", coeffs}};
}

CycInt cyc_from_json(const json& j) {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(integer_from_json(c));
    return CycInt(j.at("order").get<int>(), std::move(coeffs));
}

json ring_summary(const GaloisRing& ring) {
    json phi2 = json::array();
    for (int k = 0; k <= ring.e(); ++k) phi2.push_back((ring.phi2() >> k) & 1u);
    json phi4 = json::array();
    for (auto c : ring.phi4()) phi4.push_back(c);
    return json{{"e", ring.e()}, {"b", ring.b()}, {"n", ring.n()}, {"phi2", phi2}, {"Phi4", phi4}};
}

json to_json(const Eigenmatrix& P) {
    json rows = json::array();
    for (std::size_t i = 0; i < P.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < P.size(); ++j) row.push_back(to_json(P.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const Scheme& s) {
    const std::size_t size = s.d + 1;
    json p = json::array();
    for (std::size_t i = 0; i < size; ++i) {
        json pi = json::array();
        for (std::size_t j = 0; j < size; ++j) {
            json pij = json::array();
            for (std::size_t k = 0; k < size; ++k) pij.push_back(s.p(i, j, k));
            pi.push_back(pij);
        }
        p.push_back(pi);
    }
    return json{{"n", s.n}, {"d", s.d}, {"valencies", s.valencies}, {"pairing", s.pairing}, {"intersection_numbers", p}};
}

json to_json(const AdmissiblePartition& p) { return p.blocks; }

json to_json(const FusionResult& f) {
    return json{{"blocks", to_json(f.partition)},
                {"fused_relations", f.partition.fused_blocks()},
                {"class", f.class_count},
                {"symmetric", f.symmetric},
                {"delta", f.delta},
                {"fused_pairing", f.fused_pairing},
                {"P", to_json(f.fused_P)}};
}

json to_json(const WeightVector& w) {
    json values = json::array();
    for (std::size_t j = 0; j < w.size(); ++j) {
        const auto g = w.value(j).to_gauss();
        values.push_back(g ? to_json(*g) : to_json(w.value(j)));
    }
    return json{{"order", w.order()}, {"exponents", w.exponents()}, {"values", values}};
}

json to_json(const ButsonSolution& s) {
    json j{{"weights", to_json(s.w)}, {"form", form_name(s.form)}};
    if (s.form != ButsonForm::other) {
        j["eps1"] = s.eps1;
        j["eps2"] = s.eps2;
    }
    return j;
}

json to_json(const IdentityReport& r) {
    return json{{"id", r.id}, {"statement", r.statement}, {"instances", r.instances}, {"passed", r.passed}};
}

}  // namespace bsl
