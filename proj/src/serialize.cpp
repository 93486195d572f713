#include "semicyclic/serialize.hpp"

namespace semicyclic {

nlohmann::json to_json(const CycScalar& s) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [k, coeffs] : s.terms()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : coeffs)
            arr.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
        terms[std::to_string(k)] = std::move(arr);
    }
    return nlohmann::json{{"a_terms", std::move(terms)}};
}

CycScalar cycscalar_from_json(const FieldSpecPtr& spec, const nlohmann::json& j) {
    CycScalar out = CycScalar::zero(spec);
    const auto& terms = j.at("a_terms");
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        const long k = std::stol(it.key());
        CycCoeffs coeffs;
        for (const auto& entry : it.value()) {
            Rational r(entry.get<std::string>());
            r.canonicalize();
            coeffs.push_back(std::move(r));
        }
        out += CycScalar::term(spec, k, std::move(coeffs));
    }
    return out;
}

const char* rep_kind_name(RepKind kind) {
    switch (kind) {
    case RepKind::semicyclic: return "semicyclic";
    case RepKind::standard: return "standard";
    case RepKind::custom_f: return "custom_f";
    }
    return "?";
}

namespace {

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) rows.push_back(to_json(m.at(r, c)));
    return rows;
}

} // namespace

nlohmann::json rep_to_json(const Rep& rep) {
    return nlohmann::json{{"n", rep.n()},
                          {"kind", rep_kind_name(rep.kind())},
                          {"i", rep.index()},
                          {"a", to_json(rep.a())},
                          {"mat_E", matrix_to_json(rep.E())},
                          {"mat_F", matrix_to_json(rep.F())},
                          {"mat_K", matrix_to_json(rep.K())},
                          {"mat_Kinv", matrix_to_json(rep.Kinv())},
                          {"weights", rep.weights()}};
}

nlohmann::json to_json(const CheckItem& item) {
    nlohmann::json j{{"identity", item.name}, {"holds", item.holds}};
    if (item.expected_to_fail) j["expected_to_fail"] = true;
    if (!item.witness.empty()) j["witness"] = item.witness;
    return j;
}

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& item : report.items) arr.push_back(to_json(item));
    return arr;
}

} // namespace semicyclic
