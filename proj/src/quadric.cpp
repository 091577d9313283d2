#include "wsham/quadric.hpp"

namespace wsham {

Variable dual_variable(const Variable& v) {
    switch (v.kind) {
        case Variable::Kind::GraphValue:
            return pi_var("Pi");
        case Variable::Kind::Pi:
            return graph_value_var("Lambda");
        case Variable::Kind::PolyCoord: {
            std::string name = v.name;
            if (!name.empty() && name.front() == 'X') name.front() = 'P';
            return momentum_var(std::move(name), v.momentum);
        }
        case Variable::Kind::Momentum: {
            std::string name = v.name;
            if (!name.empty() && name.front() == 'P') name.front() = 'X';
            return polycoord_var(std::move(name), v.momentum);
        }
        default:
            throw StructuralError("variable has no projective dual: " + v.name);
    }
}

nlohmann::ordered_json ImplicitSurface::to_json() const {
    nlohmann::ordered_json j;
    j["n_fields"] = n_fields;
    j["n_worldsheet"] = n_worldsheet;
    j["degree"] = degree();
    auto pj = eta.to_json();
    j["variables"] = pj["variables"];
    j["terms"] = pj["terms"];
    return j;
}

ImplicitSurface ImplicitSurface::from_json(const nlohmann::json& j) {
    ImplicitSurface s;
    s.n_fields = j.at("n_fields").get<int>();
    s.n_worldsheet = j.at("n_worldsheet").get<int>();
    s.eta = Polynomial::from_json(j);
    return s;
}

} // namespace wsham
