#include "wsham/models.hpp"

namespace wsham {

namespace {

// One-term helper: exponents given as (var index, power) pairs.
void put(Polynomial& p, std::initializer_list<std::pair<int, int>> mono, double coeff) {
    std::vector<int> e(p.n_vars(), 0);
    for (auto [i, pow] : mono) e[i] += pow;
    p.add_term(std::move(e), coeff);
}

std::vector<Variable> ed_x_side() {
    return {
        graph_value_var("Lambda"),
        polycoord_var("XA0A1", MultiIndex({0, 1})),
        polycoord_var("XA0x0", MultiIndex({0, 2})),
        polycoord_var("XA0x1", MultiIndex({0, 3})),
        polycoord_var("XA1x0", MultiIndex({1, 2})),
        polycoord_var("XA1x1", MultiIndex({1, 3})),
        polycoord_var("Xx0x1", MultiIndex({2, 3})),
    };
}

std::vector<Variable> ed_p_side() {
    return {
        momentum_var("PA0A1", MultiIndex({0, 1})),
        momentum_var("PA0x0", MultiIndex({0, 2})),
        momentum_var("PA0x1", MultiIndex({0, 3})),
        momentum_var("PA1x0", MultiIndex({1, 2})),
        momentum_var("PA1x1", MultiIndex({1, 3})),
        momentum_var("Px0x1", MultiIndex({2, 3})),
    };
}

} // namespace

LagrangianDensity ModelSpec::density() const {
    switch (kind) {
        case ModelKind::ScalarQuadratic:
            return LagrangianDensity::quadratic_scalar(n_worldsheet, metric, potential);
        case ModelKind::Electrodynamics1p1:
            return LagrangianDensity::maxwell_1p1(c0, potential);
    }
    throw StructuralError("unreachable");
}

Polynomial scalar_mass_potential(double mass) {
    Polynomial psi({field_var("phi", 0)});
    put(psi, {{0, 2}}, -0.5 * mass * mass);
    return psi;
}

Polynomial zero_scalar_potential() { return Polynomial({field_var("phi", 0)}); }

Polynomial zero_ed_potential() {
    return Polynomial({field_var("A0", 0), field_var("A1", 1)});
}

std::vector<std::string> scalar_momentum_names(int n_worldsheet) {
    std::vector<std::string> names{"Pphi"};
    for (int i = 0; i < n_worldsheet; ++i) names.push_back("P" + std::to_string(i));
    return names;
}

std::vector<std::string> ed_momentum_names() {
    return {"PA0A1", "PA0x0", "PA0x1", "PA1x0", "PA1x1", "Px0x1"};
}

ImplicitSurface scalar_expected_surface(const Mat& g, const Polynomial& psi) {
    const int nw = g.size();
    Mat gcheck(nw);
    for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nw; ++j)
            gcheck(i, j) = (((i + j) % 2 == 0) ? 1.0 : -1.0) * g(i, j);
    const Mat gcheck_lower = inverse(gcheck);

    std::vector<Variable> vars;
    vars.push_back(momentum_var("Pphi", worldsheet_volume_index(1, nw)));
    for (int i = 0; i < nw; ++i)
        vars.push_back(momentum_var("P" + std::to_string(i),
                                    graph_momentum_index(1, nw, 0, i)));
    for (const auto& v : psi.variables()) vars.push_back(v);

    Polynomial eta(vars);
    put(eta, {{0, 1}}, 1.0);
    for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nw; ++j)
            put(eta, {{1 + i, 1}, {1 + j, 1}}, 0.5 * gcheck_lower(i, j));
    eta -= lifted(psi, vars);

    ImplicitSurface s;
    s.n_fields = 1;
    s.n_worldsheet = nw;
    s.eta = std::move(eta);
    return s;
}

ImplicitSurface ed_expected_surface(double c0, const Polynomial& phi_pot) {
    const double c = 2.0 * c0;
    std::vector<Variable> vars = ed_p_side();
    for (const auto& v : phi_pot.variables()) vars.push_back(v);
    // Slots: 0 PA0A1, 1 PA0x0, 2 PA0x1, 3 PA1x0, 4 PA1x1, 5 Px0x1.
    Polynomial factor(vars); // PA0A1 - 4C   (Pi = -1)
    put(factor, {{0, 1}}, 1.0);
    put(factor, {}, -4.0 * c);

    Polynomial bracket(vars); // PA0A1 (Px0x1 - Phi) - PA0x0 PA1x1 + PA0x1 PA1x0
    put(bracket, {{0, 1}, {5, 1}}, 1.0);
    put(bracket, {{1, 1}, {4, 1}}, -1.0);
    put(bracket, {{2, 1}, {3, 1}}, 1.0);
    Polynomial pa0a1 = Polynomial::var(vars, 0);
    bracket -= pa0a1 * lifted(phi_pot, vars);

    Polynomial trace(vars); // PA0x0 + PA1x1
    put(trace, {{1, 1}}, 1.0);
    put(trace, {{4, 1}}, 1.0);

    Polynomial eta = factor * bracket - c * (trace * trace);

    ImplicitSurface s;
    s.n_fields = 2;
    s.n_worldsheet = 2;
    s.eta = std::move(eta);
    return s;
}

ModelSpec kg_1p1(double mass) {
    if (mass < 0.0) throw ConfigError("mass must be nonnegative");
    Mat g(2);
    g(0, 0) = 1.0;
    g(1, 1) = -1.0;
    ModelSpec m = scalar_ndim(g, scalar_mass_potential(mass));
    m.name = "kg1p1";
    m.mass = mass;
    return m;
}

ModelSpec scalar_ndim(Mat g, Polynomial psi) {
    if (!g.is_symmetric()) throw StructuralError("metric must be symmetric");
    if (symmetric_rank(g) < g.size())
        throw StructuralError("metric must be nondegenerate");
    for (const auto& v : psi.variables())
        if (v.kind != Variable::Kind::Field && v.kind != Variable::Kind::Worldsheet)
            throw StructuralError("scalar potential must be a polynomial in phi and x");
    ModelSpec m;
    m.kind = ModelKind::ScalarQuadratic;
    m.name = "scalar-ndim";
    m.n_worldsheet = g.size();
    m.n_fields = 1;
    m.metric = g;
    m.potential = psi;
    m.expected_surface = scalar_expected_surface(g, psi);
    return m;
}

ModelSpec electrodynamics_1p1(double c0, Polynomial phi_pot) {
    if (c0 == 0.0) throw ConfigError("coupling c0 must be nonzero");
    ModelSpec m;
    m.kind = ModelKind::Electrodynamics1p1;
    m.name = "ed1p1";
    m.n_worldsheet = 2;
    m.n_fields = 2;
    m.c0 = c0;
    m.potential = std::move(phi_pot);
    m.expected_surface = ed_expected_surface(c0, m.potential);
    m.plucker_polys = {ed_plucker_polynomial()};
    return m;
}

ModelSpec electrodynamics_1p1(double c0) {
    return electrodynamics_1p1(c0, zero_ed_potential());
}

Polynomial ed_graph_polynomial(const ModelSpec& model, const BasePoint& at) {
    if (model.kind != ModelKind::Electrodynamics1p1)
        throw UnsupportedModelError("graph polynomial is the ED fiber construction");
    const double c = model.coupling();
    const double phi0 = eval_potential(model.potential, at);
    auto vars = ed_x_side();
    // Slots: 0 Lambda, 1 XA0A1, 2 XA0x0, 3 XA0x1, 4 XA1x0, 5 XA1x1, 6 Xx0x1.
    Polynomial f(vars);
    put(f, {{0, 1}, {6, 1}}, 1.0);
    put(f, {{2, 2}}, -c);
    put(f, {{2, 1}, {5, 1}}, -2.0 * c);
    put(f, {{5, 2}}, -c);
    put(f, {{6, 2}}, -phi0);
    return f;
}

Polynomial ed_plucker_polynomial() {
    auto vars = ed_x_side();
    Polynomial p(vars);
    put(p, {{1, 1}, {6, 1}}, 1.0);
    put(p, {{2, 1}, {5, 1}}, -1.0);
    put(p, {{3, 1}, {4, 1}}, 1.0);
    return p;
}

Polynomial ed_eta_projective(const ModelSpec& model, const BasePoint& at) {
    if (model.kind != ModelKind::Electrodynamics1p1)
        throw UnsupportedModelError("projective dual surface is the ED fiber construction");
    const double c = model.coupling();
    const double phi0 = eval_potential(model.potential, at);
    std::vector<Variable> vars;
    vars.push_back(pi_var("Pi"));
    for (auto& v : ed_p_side()) vars.push_back(std::move(v));
    // Slots: 0 Pi, 1 PA0A1, 2 PA0x0, 3 PA0x1, 4 PA1x0, 5 PA1x1, 6 Px0x1.
    Polynomial factor(vars); // 4 Pi C + PA0A1
    put(factor, {{0, 1}}, 4.0 * c);
    put(factor, {{1, 1}}, 1.0);

    Polynomial bracket(vars); // PA0A1 (Pi Phi0 + Px0x1) - PA0x0 PA1x1 + PA0x1 PA1x0
    put(bracket, {{1, 1}, {0, 1}}, phi0);
    put(bracket, {{1, 1}, {6, 1}}, 1.0);
    put(bracket, {{2, 1}, {5, 1}}, -1.0);
    put(bracket, {{3, 1}, {4, 1}}, 1.0);

    Polynomial trace(vars); // PA0x0 + PA1x1
    put(trace, {{2, 1}}, 1.0);
    put(trace, {{5, 1}}, 1.0);

    Polynomial pi = Polynomial::var(vars, 0);
    return factor * bracket + c * (pi * trace * trace);
}

} // namespace wsham
