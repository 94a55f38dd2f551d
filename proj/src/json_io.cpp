#include "kappa/json_io.hpp"

#include <fstream>

#include "kappa/errors.hpp"

namespace kappa {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back({e.real(), e.imag()});
    return json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("matrix JSON must be an object with \"dim\" and \"entries\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw ParseError("\"dim\" must be a positive integer");
    const auto dim = j["dim"].get<std::size_t>();
    const auto& entries = j["entries"];
    if (!entries.is_array() || entries.size() != dim * dim)
        throw ParseError("\"entries\" must hold exactly dim*dim [re, im] pairs");
    std::vector<cplx> data;
    data.reserve(dim * dim);
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError("each entry must be a [re, im] pair of numbers");
        data.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    ComplexMatrix m(dim, std::move(data));
    if (!m.all_finite()) throw ParseError("matrix entries must be finite");
    return m;
}

PsdMatrix load_psd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": invalid JSON: " + e.what());
    }
    return PsdMatrix(matrix_from_json(j));
}

json to_json(const DistanceReport& r) {
    return json{
        {"p", r.p},
        {"d", r.d},
        {"d_squared", r.gap > 0.0 ? r.gap : 0.0},
        {"trace_arith", r.trace_arith},
        {"trace_kappa", r.trace_kappa},
        {"gap", r.gap},
        {"condition_hint", r.condition_hint},
    };
}

json to_json(const InequalityReport& r) {
    json j{
        {"name", r.name},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
        {"margins", r.margins},
        {"passed", r.passed},
        {"tolerance", r.tolerance},
    };
    if (r.mid) j["mid"] = *r.mid;
    return j;
}

json to_json(const CounterexampleReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back(json{
            {"name", c.name},
            {"computed", c.computed},
            {"reference", c.reference},
            {"deviation", c.deviation},
            {"tolerance", c.tolerance},
            {"passed", c.passed},
        });
    }
    const auto triple = counterexample_triple();
    return json{
        {"A", matrix_to_json(triple.a.matrix())},
        {"B", matrix_to_json(triple.b.matrix())},
        {"C", matrix_to_json(triple.c.matrix())},
        {"d2_ab", r.d2_ab},
        {"d2_ac", r.d2_ac},
        {"d2_bc", r.d2_bc},
        {"triangle_margin", r.triangle_margin},
        {"checks", std::move(checks)},
        {"passed", r.passed},
    };
}

}  // namespace kappa
