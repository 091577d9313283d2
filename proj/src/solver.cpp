#include "wsham/solver.hpp"

#include <algorithm>
#include <cmath>

namespace wsham {

namespace {

void require_scalar_solver_model(const ModelSpec& model) {
    if (model.kind != ModelKind::ScalarQuadratic || model.n_worldsheet != 2)
        throw UnsupportedModelError("time integration supports the 1+1 scalar family");
    if (model.metric(0, 0) != 1.0 || model.metric(1, 1) != -1.0 ||
        model.metric(0, 1) != 0.0)
        throw UnsupportedModelError("scalar integration needs metric diag(1,-1)");
    for (const auto& v : model.potential.variables())
        if (v.kind == Variable::Kind::Worldsheet)
            throw UnsupportedModelError("scalar integration needs an x-independent potential");
}

void require_ed_solver_model(const ModelSpec& model) {
    if (model.kind != ModelKind::Electrodynamics1p1)
        throw UnsupportedModelError("not an ED model");
    if (!model.potential.is_zero())
        throw UnsupportedModelError("ED integration supports Phi = 0 only");
}

inline int wrap(int j, int n) { return (j % n + n) % n; }

// Centered first difference on the periodic grid.
std::vector<double> centered_diff(const std::vector<double>& u, double h) {
    const int n = static_cast<int>(u.size());
    std::vector<double> d(n);
    for (int j = 0; j < n; ++j)
        d[j] = (u[wrap(j + 1, n)] - u[wrap(j - 1, n)]) / (2.0 * h);
    return d;
}

double psi_value(const ModelSpec& model, double phi) {
    BasePoint at;
    at.phi = {phi};
    at.x.assign(model.n_worldsheet, 0.0);
    return eval_potential(model.potential, at);
}

double psi_slope(const Polynomial& psi_phi, int nw, double phi) {
    BasePoint at;
    at.phi = {phi};
    at.x.assign(nw, 0.0);
    return eval_potential(psi_phi, at);
}

// d/dt P0 = d/dx1 P1 + dPsi/dphi with P1 = centered dphi/dx1.
std::vector<double> scalar_acceleration(const ModelSpec& model, const Polynomial& psi_phi,
                                        const std::vector<double>& phi, double h) {
    const auto p1 = centered_diff(phi, h);
    auto acc = centered_diff(p1, h);
    for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] += psi_slope(psi_phi, model.n_worldsheet, phi[j]);
    return acc;
}

// d/dt Pphi = (d0 P1) P1 - (d1 P1) P0, the surface-tracking slot.
std::vector<double> pphi_rate(const std::vector<double>& phi,
                              const std::vector<double>& p0, double h) {
    const auto p1 = centered_diff(phi, h);
    const auto d0p1 = centered_diff(p0, h); // d0 P1 = d1 (d0 phi) = d1 P0
    const auto d1p1 = centered_diff(p1, h);
    std::vector<double> rate(phi.size());
    for (std::size_t j = 0; j < rate.size(); ++j)
        rate[j] = d0p1[j] * p1[j] - d1p1[j] * p0[j];
    return rate;
}

// Steps may run backward (reversibility checks), so the bound is on |dt|.
void check_cfl(const FieldState& s, double dt) {
    if (dt == 0.0) throw ConfigError("time step must be nonzero");
    if (std::abs(dt) > s.h) throw ConfigError("CFL violation: |dt| must not exceed h");
}

} // namespace

FieldState make_scalar_state(const ModelSpec& model, int nodes, double h,
                             const Profile& phi0, const Profile& dphi0_dt) {
    require_scalar_solver_model(model);
    if (nodes < 3 || h <= 0.0) throw ConfigError("need at least 3 nodes and h > 0");
    FieldState s;
    s.kind = ModelKind::ScalarQuadratic;
    s.h = h;
    s.nodes = nodes;
    s.phi.resize(nodes);
    s.p0.resize(nodes);
    s.pphi.resize(nodes);
    for (int j = 0; j < nodes; ++j) {
        const double x = j * h;
        s.phi[j] = phi0(x);
        s.p0[j] = dphi0_dt(x);
    }
    const auto p1 = centered_diff(s.phi, h);
    for (int j = 0; j < nodes; ++j)
        s.pphi[j] = psi_value(model, s.phi[j]) - 0.5 * (s.p0[j] * s.p0[j] - p1[j] * p1[j]);
    return s;
}

FieldState make_ed_state(const ModelSpec& model, int nodes, double h,
                         const Profile& a0_init, const Profile& a1_init,
                         double e01_init) {
    require_ed_solver_model(model);
    if (nodes < 3 || h <= 0.0) throw ConfigError("need at least 3 nodes and h > 0");
    FieldState s;
    s.kind = ModelKind::Electrodynamics1p1;
    s.h = h;
    s.nodes = nodes;
    s.a0.resize(nodes);
    s.a1.resize(nodes);
    s.e01.assign(nodes, e01_init);
    for (int j = 0; j < nodes; ++j) {
        const double x = j * h;
        s.a0[j] = a0_init(x);
        s.a1[j] = a1_init(x);
    }
    return s;
}

FieldState step_hamiltonian(const ModelSpec& model, const FieldState& s, double dt) {
    check_cfl(s, dt);
    FieldState out = s;
    if (s.kind == ModelKind::ScalarQuadratic) {
        require_scalar_solver_model(model);
        const Polynomial psi_phi =
            model.potential.derivative(model.potential.var_index("phi"));
        const int n = s.nodes;

        // Half kick; Pphi rides along with the P0 midpoint so the step stays
        // exactly reversible.
        auto acc = scalar_acceleration(model, psi_phi, out.phi, s.h);
        std::vector<double> p0_half(n), p0_mid(n);
        for (int j = 0; j < n; ++j) {
            p0_half[j] = out.p0[j] + 0.5 * dt * acc[j];
            p0_mid[j] = 0.5 * (out.p0[j] + p0_half[j]);
        }
        auto rate = pphi_rate(out.phi, p0_mid, s.h);
        for (int j = 0; j < n; ++j) out.pphi[j] += 0.5 * dt * rate[j];

        // Drift.
        for (int j = 0; j < n; ++j) out.phi[j] += dt * p0_half[j];

        // Second half kick.
        acc = scalar_acceleration(model, psi_phi, out.phi, s.h);
        std::vector<double> p0_new(n);
        for (int j = 0; j < n; ++j) {
            p0_new[j] = p0_half[j] + 0.5 * dt * acc[j];
            p0_mid[j] = 0.5 * (p0_half[j] + p0_new[j]);
        }
        rate = pphi_rate(out.phi, p0_mid, s.h);
        for (int j = 0; j < n; ++j) {
            out.pphi[j] += 0.5 * dt * rate[j];
            out.p0[j] = p0_new[j];
        }
    } else {
        require_ed_solver_model(model);
        // dA1/dt = e01 + d1 A0 (A0 frozen), de01/dt = 0.
        const auto d1a0 = centered_diff(s.a0, s.h);
        for (int j = 0; j < s.nodes; ++j) out.a1[j] += dt * (s.e01[j] + d1a0[j]);
    }
    out.t = s.t + dt;
    return out;
}

ReferenceState make_reference_state(const ModelSpec& model, int nodes, double h,
                                    const Profile& phi0, const Profile& dphi0_dt) {
    require_scalar_solver_model(model);
    ReferenceState s;
    s.h = h;
    s.nodes = nodes;
    s.phi.resize(nodes);
    s.v0.resize(nodes);
    for (int j = 0; j < nodes; ++j) {
        const double x = j * h;
        s.phi[j] = phi0(x);
        s.v0[j] = dphi0_dt(x);
    }
    return s;
}

ReferenceState step_reference_lagrangian(const ModelSpec& model, const ReferenceState& s,
                                         double dt) {
    require_scalar_solver_model(model);
    if (dt <= 0.0) throw ConfigError("time step must be positive");
    if (dt > s.h) throw ConfigError("CFL violation: dt must not exceed h");
    const Polynomial psi_phi = model.potential.derivative(model.potential.var_index("phi"));
    const int n = s.nodes;

    // Compact second difference of the field equation.
    std::vector<double> acc(n);
    for (int j = 0; j < n; ++j) {
        const double lap = (s.phi[wrap(j + 1, n)] - 2.0 * s.phi[j] + s.phi[wrap(j - 1, n)]) /
                           (s.h * s.h);
        acc[j] = lap + psi_slope(psi_phi, model.n_worldsheet, s.phi[j]);
    }

    ReferenceState out = s;
    out.started = true;
    out.t = s.t + dt;
    out.phi_prev = s.phi;
    if (!s.started) {
        for (int j = 0; j < n; ++j)
            out.phi[j] = s.phi[j] + dt * s.v0[j] + 0.5 * dt * dt * acc[j];
    } else {
        for (int j = 0; j < n; ++j)
            out.phi[j] = 2.0 * s.phi[j] - s.phi_prev[j] + dt * dt * acc[j];
    }
    return out;
}

ScalarNodeMomenta scalar_node_momenta(const ModelSpec& model, const FieldState& s, int j) {
    const int n = s.nodes;
    ScalarNodeMomenta m{};
    m.p0 = s.p0[j];
    m.p1 = (s.phi[wrap(j + 1, n)] - s.phi[wrap(j - 1, n)]) / (2.0 * s.h);
    m.pphi = s.pphi[j];
    m.eta = m.pphi + 0.5 * (m.p0 * m.p0 - m.p1 * m.p1) - psi_value(model, s.phi[j]);
    return m;
}

EdNodeMomenta ed_node_momenta(const ModelSpec& model, const FieldState& s, int j) {
    const double c = model.coupling();
    EdNodeMomenta m{};
    m.f01 = s.e01[j];
    // Gradient representative with zero constraint multiplier on the graph
    // chart; only the field-strength combination enters it.
    const double t = m.f01; // f^1_0 - f^0_1
    m.pa0a1 = 0.0;
    m.pa0x1 = 0.0;
    m.pa1x0 = 0.0;
    m.pa0x0 = 2.0 * c * t;
    m.pa1x1 = 2.0 * c * t;
    m.px0x1 = -c * t * t;
    // Surface residual of that representative.
    const Polynomial& eta = model.expected_surface.eta;
    std::vector<double> values(eta.n_vars(), 0.0);
    for (int v = 0; v < eta.n_vars(); ++v) {
        const std::string& name = eta.variables()[v].name;
        if (name == "PA0A1") values[v] = m.pa0a1;
        else if (name == "PA0x0") values[v] = m.pa0x0;
        else if (name == "PA0x1") values[v] = m.pa0x1;
        else if (name == "PA1x0") values[v] = m.pa1x0;
        else if (name == "PA1x1") values[v] = m.pa1x1;
        else if (name == "Px0x1") values[v] = m.px0x1;
        else if (name == "A0") values[v] = s.a0[j];
        else if (name == "A1") values[v] = s.a1[j];
    }
    m.eta = eta.eval(values);
    return m;
}

DiagnosticsSample diagnostics(const ModelSpec& model, const FieldState& s) {
    DiagnosticsSample d;
    d.t = s.t;
    if (s.kind == ModelKind::ScalarQuadratic) {
        const auto p1 = centered_diff(s.phi, s.h);
        double energy = 0.0, eta_max = 0.0;
        for (int j = 0; j < s.nodes; ++j) {
            energy += 0.5 * s.p0[j] * s.p0[j] + 0.5 * p1[j] * p1[j] -
                      psi_value(model, s.phi[j]);
            eta_max = std::max(eta_max, std::abs(scalar_node_momenta(model, s, j).eta));
        }
        d.energy = energy * s.h;
        d.max_abs_eta = eta_max;
    } else {
        double energy = 0.0, eta_max = 0.0;
        double lo = s.e01[0], hi = s.e01[0];
        for (int j = 0; j < s.nodes; ++j) {
            energy += model.coupling() * s.e01[j] * s.e01[j];
            eta_max = std::max(eta_max, std::abs(ed_node_momenta(model, s, j).eta));
            lo = std::min(lo, s.e01[j]);
            hi = std::max(hi, s.e01[j]);
        }
        d.energy = energy * s.h;
        d.max_abs_eta = eta_max;
        d.f01_min = lo;
        d.f01_max = hi;
    }
    return d;
}

Trajectory run(const ModelSpec& model, const FieldState& initial, double T, double dt,
               int stride) {
    if (T < 0.0) throw ConfigError("T must be nonnegative");
    if (stride < 1) throw ConfigError("stride must be at least 1");
    Trajectory traj;
    FieldState s = initial;
    traj.snapshots.emplace_back(s.t, s);
    traj.series.push_back(diagnostics(model, s));
    traj.probe.emplace_back(s.t, s.kind == ModelKind::ScalarQuadratic ? s.phi[0] : s.a1[0]);
    if (T == 0.0) return traj;

    if (dt <= 0.0) throw ConfigError("time step must be positive");
    check_cfl(s, dt);
    const long steps = std::lround(T / dt);
    for (long k = 1; k <= steps; ++k) {
        s = step_hamiltonian(model, s, dt);
        traj.probe.emplace_back(s.t, s.kind == ModelKind::ScalarQuadratic ? s.phi[0] : s.a1[0]);
        if (k % stride == 0 || k == steps) {
            traj.snapshots.emplace_back(s.t, s);
            traj.series.push_back(diagnostics(model, s));
        }
    }
    return traj;
}

double measure_frequency(const std::vector<std::pair<double, double>>& probe) {
    std::vector<double> crossings;
    for (std::size_t i = 1; i < probe.size(); ++i) {
        const auto [t0, v0] = probe[i - 1];
        const auto [t1, v1] = probe[i];
        if (v0 == 0.0) continue;
        if ((v0 < 0.0 && v1 >= 0.0) || (v0 > 0.0 && v1 <= 0.0))
            crossings.push_back(t0 + (t1 - t0) * v0 / (v0 - v1));
    }
    if (crossings.size() < 3)
        throw ConfigError("not enough zero crossings to measure a frequency");
    const double span = crossings.back() - crossings.front();
    const double mean_gap = span / static_cast<double>(crossings.size() - 1);
    return M_PI / mean_gap;
}

} // namespace wsham
