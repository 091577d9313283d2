#include "wsham/motion.hpp"

#include <algorithm>
#include <cmath>

namespace wsham {

PhaseSpaceLayout PhaseSpaceLayout::make(int n_fields, int n_worldsheet) {
    PhaseSpaceLayout l;
    l.n_fields = n_fields;
    l.n_worldsheet = n_worldsheet;
    l.momenta = all_multi_indices(n_fields + n_worldsheet, n_worldsheet);
    return l;
}

int PhaseSpaceLayout::momentum_axis(const MultiIndex& k) const {
    auto it = std::lower_bound(momenta.begin(), momenta.end(), k);
    if (it == momenta.end() || !(*it == k))
        throw StructuralError("unknown momentum coordinate " + k.to_string());
    return targetspace_dim() + static_cast<int>(it - momenta.begin());
}

std::string PhaseSpaceLayout::slot_name(int axis) const {
    if (axis < n_fields) return "dphi" + std::to_string(axis);
    if (axis < targetspace_dim()) return "dx" + std::to_string(axis - n_fields);
    return "dP" + momenta[axis - targetspace_dim()].to_string();
}

namespace {

// Tangent polyvector of the phase-space section in the flat fiber layout,
// worldsheet projection normalized to 1.
Polyvector section_tangent(const PhaseSpaceLayout& l, const ExtendedJet& jet) {
    Polyvector xi(l.dim(), 0);
    xi.set(MultiIndex(), 1.0);
    for (int i = 0; i < l.n_worldsheet; ++i) {
        Polyvector leg(l.dim(), 1);
        leg.set(MultiIndex({l.n_fields + i}), 1.0);
        for (int a = 0; a < l.n_fields; ++a)
            leg.add(MultiIndex({a}), jet.deriv(a, i, l.n_worldsheet));
        for (std::size_t m = 0; m < l.momenta.size(); ++m) {
            auto it = jet.pderiv.find(l.momenta[m]);
            if (it == jet.pderiv.end()) continue;
            leg.add(MultiIndex({l.targetspace_dim() + static_cast<int>(m)}),
                    it->second.at(i));
        }
        xi = wedge(xi, leg);
    }
    return xi;
}

// omega = sum_K dP_K ^ dx^K as a form on the flat fiber layout; moving dP_K
// behind the N targetspace factors costs (-1)^N.
PolyForm action_form_derivative(const PhaseSpaceLayout& l) {
    const int n = l.n_worldsheet;
    PolyForm omega(l.dim(), n + 1);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t m = 0; m < l.momenta.size(); ++m) {
        std::vector<int> axes = l.momenta[m].axes();
        axes.push_back(l.targetspace_dim() + static_cast<int>(m));
        omega.set(MultiIndex(std::move(axes)), sign);
    }
    return omega;
}

// Values of the surface variables at the jet's phase-space point.
std::vector<double> surface_point(const ImplicitSurface& sigma, const ExtendedJet& jet) {
    std::vector<double> values(sigma.eta.n_vars(), 0.0);
    for (int v = 0; v < sigma.eta.n_vars(); ++v) {
        const Variable& var = sigma.eta.variables()[v];
        switch (var.kind) {
            case Variable::Kind::Field:
                values[v] = jet.at.phi.at(var.index);
                break;
            case Variable::Kind::Worldsheet:
                values[v] = jet.at.x.at(var.index);
                break;
            case Variable::Kind::Momentum: {
                auto it = jet.p.find(var.momentum);
                values[v] = it == jet.p.end() ? 0.0 : it->second;
                break;
            }
            default:
                throw StructuralError("surface variable not bound to the phase space: " +
                                      var.name);
        }
    }
    return values;
}

// Axis of the phase-space layout a surface variable differentiates along.
int variable_axis(const PhaseSpaceLayout& l, const Variable& var) {
    switch (var.kind) {
        case Variable::Kind::Field:
            return var.index;
        case Variable::Kind::Worldsheet:
            return l.n_fields + var.index;
        case Variable::Kind::Momentum:
            return l.momentum_axis(var.momentum);
        default:
            throw StructuralError("surface variable has no phase-space axis: " + var.name);
    }
}

} // namespace

std::vector<double> degeneracy_residual(const ImplicitSurface& sigma,
                                        const ExtendedJet& jet, double alpha) {
    const PhaseSpaceLayout l = PhaseSpaceLayout::make(sigma.n_fields, sigma.n_worldsheet);
    const Polyvector xi = section_tangent(l, jet);
    const PolyForm omega = action_form_derivative(l);
    const PolyForm contracted = interior(xi, omega);

    std::vector<double> residual(l.dim(), 0.0);
    for (int axis = 0; axis < l.dim(); ++axis)
        residual[axis] = contracted.coeff(MultiIndex({axis}));

    const std::vector<double> point = surface_point(sigma, jet);
    for (int v = 0; v < sigma.eta.n_vars(); ++v) {
        const double g = sigma.eta.derivative(v).eval(point);
        residual[variable_axis(l, sigma.eta.variables()[v])] -= alpha * g;
    }
    return residual;
}

void ResidualStat::add(double v) {
    max_abs = std::max(max_abs, std::abs(v));
    sum_sq += v * v;
    ++count;
}

double ResidualStat::l2() const { return count ? std::sqrt(sum_sq / count) : 0.0; }

double ResidualReport::max_abs(const std::string& key) const {
    auto it = stats.find(key);
    return it == stats.end() ? 0.0 : it->second.max_abs;
}

double ResidualReport::max_abs_over_all() const {
    double m = 0.0;
    for (const auto& [k, s] : stats) m = std::max(m, s.max_abs);
    return m;
}

nlohmann::ordered_json ResidualReport::to_json() const {
    nlohmann::ordered_json j;
    for (const auto& [k, s] : stats) {
        j[k] = {{"max_abs", s.max_abs}, {"l2", s.l2()}, {"count", s.count}};
    }
    return j;
}

MotionSystem build_motion_system(const ImplicitSurface& sigma, const ModelSpec& model) {
    if (sigma.n_fields != model.n_fields || sigma.n_worldsheet != model.n_worldsheet)
        throw StructuralError("surface dimensions do not match the model");

    MotionSystem sys;
    sys.model_ = model;
    sys.sigma_ = sigma;
    sys.layout_ = PhaseSpaceLayout::make(model.n_fields, model.n_worldsheet);
    const PhaseSpaceLayout& l = sys.layout_;
    sys.labels_.assign(l.dim(), "");
    sys.dependent_.assign(l.dim(), false);

    if (model.kind == ModelKind::ScalarQuadratic) {
        const int nw = model.n_worldsheet;
        const bool kg_names = (model.name == "kg1p1");
        sys.labels_[0] = kg_names ? "Part2_3" : "HE3";
        for (int k = 0; k < nw; ++k) {
            const int axis = 1 + k;
            sys.labels_[axis] = kg_names ? ("Part2_" + std::to_string(4 + k))
                                         : ("HE4_" + std::to_string(k));
            sys.dependent_[axis] = true;
        }
        const MultiIndex kws = worldsheet_volume_index(1, nw);
        sys.labels_[l.momentum_axis(kws)] = "HE1";
        for (int i = 0; i < nw; ++i) {
            const int axis = l.momentum_axis(graph_momentum_index(1, nw, 0, i));
            // Part2_1 is the p_{phi 0} slot (i = 1), Part2_2 the p_{phi 1}
            // slot (i = 0).
            sys.labels_[axis] = kg_names ? ("Part2_" + std::to_string(i == 1 ? 1 : 2))
                                         : ("HE2_" + std::to_string(i));
        }
    } else {
        if (model.n_fields != 2 || model.n_worldsheet != 2)
            throw UnsupportedModelError("unrecognized surface family");
        sys.labels_[0] = "HEEM7";
        sys.labels_[1] = "HEEM8";
        sys.labels_[2] = "HEEM9";
        sys.labels_[3] = "HEEM10";
        sys.labels_[l.momentum_axis(MultiIndex({0, 1}))] = "HEEM6";
        sys.labels_[l.momentum_axis(MultiIndex({0, 2}))] = "HEEM2";
        sys.labels_[l.momentum_axis(MultiIndex({0, 3}))] = "HEEM3";
        sys.labels_[l.momentum_axis(MultiIndex({1, 2}))] = "HEEM4";
        sys.labels_[l.momentum_axis(MultiIndex({1, 3}))] = "HEEM5";
        sys.labels_[l.momentum_axis(MultiIndex({2, 3}))] = "HEEM1";
        sys.dependent_[2] = true;                              // HEEM9
        sys.dependent_[3] = true;                              // HEEM10
        sys.dependent_[l.momentum_axis(MultiIndex({0, 1}))] =
            model.potential.is_zero();                          // HEEM6 needs Phi = 0
    }
    return sys;
}

std::vector<std::string> MotionSystem::dependent_labels() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (dependent_[i]) out.push_back(labels_[i]);
    return out;
}

double MotionSystem::alpha_for(const ExtendedJet& jet) const {
    // The pure-worldsheet momentum slot reads (i_Xi omega) = (-1)^N on a
    // unit-normalized section tangent, so alpha = (-1)^N / (deta/dP_ws).
    const MultiIndex kws = worldsheet_volume_index(model_.n_fields, model_.n_worldsheet);
    const int v = sigma_.eta.var_index(momentum_name(kws));
    if (v < 0) throw StructuralError("surface lacks the pure-worldsheet momentum");
    const double g = sigma_.eta.derivative(v).eval(surface_point(sigma_, jet));
    if (g == 0.0) throw ConstraintError("multiplier slot degenerate at this jet");
    const double sign = (model_.n_worldsheet % 2 == 0) ? 1.0 : -1.0;
    return sign / g;
}

std::string MotionSystem::momentum_name(const MultiIndex& k) const {
    for (const auto& var : sigma_.eta.variables())
        if (var.kind == Variable::Kind::Momentum && var.momentum == k) return var.name;
    throw StructuralError("surface lacks momentum " + k.to_string());
}

std::map<MultiIndex, double> MotionSystem::momenta_from_jet(
    const BasePoint& at, const std::vector<double>& f) const {
    if (model_.kind != ModelKind::ScalarQuadratic)
        throw UnsupportedModelError("closed-form momenta only for the scalar family");
    const int nw = model_.n_worldsheet;
    std::map<MultiIndex, double> p;
    for (int i = 0; i < nw; ++i) {
        double s = 0.0;
        for (int j = 0; j < nw; ++j) s += model_.metric(i, j) * f.at(j);
        p[graph_momentum_index(1, nw, 0, i)] = ((i % 2 == 0) ? 1.0 : -1.0) * s;
    }
    // Membership: solve the (linear) pure-worldsheet slot of eta = 0.
    const MultiIndex kws = worldsheet_volume_index(1, nw);
    ExtendedJet probe;
    probe.at = at;
    probe.f = f;
    probe.p = p;
    probe.p[kws] = 0.0;
    std::vector<double> pt0 = surface_point(sigma_, probe);
    const double e0 = sigma_.eta.eval(pt0);
    probe.p[kws] = 1.0;
    std::vector<double> pt1 = surface_point(sigma_, probe);
    const double e1 = sigma_.eta.eval(pt1);
    if (e1 == e0) throw ConstraintError("surface is degenerate in the worldsheet momentum");
    p[kws] = -e0 / (e1 - e0);
    return p;
}

std::array<double, 4> MotionSystem::ed_jet_from_momenta(const ExtendedJet& jet) const {
    if (model_.kind != ModelKind::Electrodynamics1p1)
        throw UnsupportedModelError("momenta-to-velocities inversion is the ED relation");
    const double alpha = alpha_for(jet);
    const std::vector<double> pt = surface_point(sigma_, jet);
    auto slope = [&](const char* name) {
        return sigma_.eta.derivative(sigma_.eta.var_index(name)).eval(pt);
    };
    // f[a*2+i]; velocity slots of the dual-surface gradient.
    std::array<double, 4> f{};
    f[0 * 2 + 0] = alpha * slope("PA0x1");  // dA0/dx0
    f[0 * 2 + 1] = -alpha * slope("PA0x0"); // dA0/dx1
    f[1 * 2 + 0] = alpha * slope("PA1x1");  // dA1/dx0
    f[1 * 2 + 1] = -alpha * slope("PA1x0"); // dA1/dx1
    return f;
}

ExtendedJet MotionSystem::sample_constrained_jet(Rng& rng) const {
    const int nw = model_.n_worldsheet;
    const int nf = model_.n_fields;
    ExtendedJet jet;
    jet.at.x.resize(nw);
    jet.at.phi.resize(nf);
    for (double& v : jet.at.x) v = rng.uniform(-1.0, 1.0);
    for (double& v : jet.at.phi) v = rng.uniform(-1.0, 1.0);

    const MultiIndex kws = worldsheet_volume_index(nf, nw);

    if (model_.kind == ModelKind::ScalarQuadratic) {
        jet.f.resize(nw);
        for (double& v : jet.f) v = rng.uniform(-1.0, 1.0);
        jet.p = momenta_from_jet(jet.at, jet.f);
        for (const auto& k : layout_.momenta) {
            auto& d = jet.pderiv[k];
            d.assign(nw, 0.0);
            if (!(k == kws))
                for (double& v : d) v = rng.uniform(-1.0, 1.0);
        }
        // HE3 slot: solve the designated derivative entry (linear, unit
        // coefficient up to sign).
        solve_slot(jet, /*slot=*/0, graph_momentum_index(1, nw, 0, 0), 0);
    } else {
        if (!model_.potential.is_zero())
            throw UnsupportedModelError(
                "constrained-jet sampling for ED needs Phi = 0 (HEEM6 dependency)");
        const double c = model_.coupling();
        for (;;) {
            const double u = rng.uniform(-2.0, 2.0);
            if (std::abs(u) >= 0.3 && std::abs(u - 4.0 * c) >= 0.3) {
                jet.p[MultiIndex({0, 1})] = u;
                break;
            }
        }
        jet.p[MultiIndex({0, 2})] = rng.uniform(-1.0, 1.0);
        jet.p[MultiIndex({0, 3})] = rng.uniform(-1.0, 1.0);
        jet.p[MultiIndex({1, 2})] = rng.uniform(-1.0, 1.0);
        jet.p[MultiIndex({1, 3})] = rng.uniform(-1.0, 1.0);
        // Membership: eta is linear in the pure-worldsheet momentum.
        {
            ExtendedJet probe = jet;
            probe.f.assign(4, 0.0);
            probe.p[kws] = 0.0;
            const double e0 = sigma_.eta.eval(surface_point(sigma_, probe));
            probe.p[kws] = 1.0;
            const double e1 = sigma_.eta.eval(surface_point(sigma_, probe));
            jet.p[kws] = -e0 / (e1 - e0);
        }
        jet.f.assign(4, 0.0);
        const auto f = ed_jet_from_momenta(jet);
        jet.f.assign(f.begin(), f.end());

        for (const auto& k : layout_.momenta) {
            auto& d = jet.pderiv[k];
            d.assign(nw, 0.0);
            if (!(k == kws))
                for (double& v : d) v = rng.uniform(-1.0, 1.0);
        }
        solve_slot(jet, /*slot=*/0, MultiIndex({0, 2}), 1); // HEEM7 -> pi_{A0 x0;1}
        solve_slot(jet, /*slot=*/1, MultiIndex({1, 2}), 1); // HEEM8 -> pi_{A1 x0;1}
    }

    // First-order membership along each worldsheet direction: solve the
    // pure-worldsheet momentum derivative from
    //   sum_V (deta/dV) dV/dx^k = 0.
    const std::vector<double> pt = surface_point(sigma_, jet);
    std::vector<double> grad(sigma_.eta.n_vars());
    for (int v = 0; v < sigma_.eta.n_vars(); ++v)
        grad[v] = sigma_.eta.derivative(v).eval(pt);
    const int ws_var = sigma_.eta.var_index(momentum_name(kws));
    for (int k = 0; k < nw; ++k) {
        double rest = 0.0;
        for (int v = 0; v < sigma_.eta.n_vars(); ++v) {
            if (v == ws_var) continue;
            const Variable& var = sigma_.eta.variables()[v];
            switch (var.kind) {
                case Variable::Kind::Field:
                    rest += grad[v] * jet.deriv(var.index, k, nw);
                    break;
                case Variable::Kind::Worldsheet:
                    rest += grad[v] * (var.index == k ? 1.0 : 0.0);
                    break;
                case Variable::Kind::Momentum:
                    rest += grad[v] * jet.pderiv.at(var.momentum).at(k);
                    break;
                default:
                    break;
            }
        }
        jet.pderiv[kws][k] = -rest / grad[ws_var];
    }
    return jet;
}

std::vector<std::string> MotionSystem::describe() const {
    std::vector<std::string> out;
    if (model_.kind == ModelKind::ScalarQuadratic) {
        const int nw = model_.n_worldsheet;
        out.push_back("family: one scalar field over a " + std::to_string(nw) +
                      "-dimensional worldsheet");
        out.push_back("multiplier from the pure-worldsheet slot (HE1): alpha = (-1)^" +
                      std::to_string(nw));
        out.push_back("algebraic relations (HE2): P^i = (-1)^i g^{ij} dphi/dx^j");
        out.push_back("membership: Pphi = Psi - 1/2 gcheck_{ij} P^i P^j");
        if (model_.name == "kg1p1" && model_.mass != 0.0)
            out.push_back("field equation (HE3): laplacian(phi) = -m^2 phi, m = " +
                          std::to_string(model_.mass));
        else
            out.push_back("field equation (HE3): laplacian(phi) = dPsi/dphi");
        std::string dep = "dependent, certified numerically:";
        for (const auto& lbl : dependent_labels()) dep += " " + lbl;
        out.push_back(dep);
    } else {
        out.push_back("family: two potential fields on a 1+1 worldsheet");
        out.push_back("Pi held constant at -1 throughout the motion derivation");
        out.push_back("multiplier from the pure-worldsheet slot (HEEM1): alpha = 1 / (deta/dPx0x1)");
        out.push_back("velocities from momenta (HEEM2-HEEM5): dA/dx = +-alpha * momentum gradients of eta");
        out.push_back("field equations (HEEM7/HEEM8): dPhi/dA0 = 2C d/dx1 [dA0/dx1 - dA1/dx0], "
                      "dPhi/dA1 = -2C d/dx0 [dA0/dx1 - dA1/dx0]");
        if (model_.potential.is_zero())
            out.push_back("with Phi = 0: dA0/dx1 - dA1/dx0 = const");
        std::string dep = "dependent, certified numerically:";
        for (const auto& lbl : dependent_labels()) dep += " " + lbl;
        out.push_back(dep);
    }
    return out;
}

void MotionSystem::solve_slot(ExtendedJet& jet, int slot, const MultiIndex& k,
                              int direction) const {
    const double alpha = alpha_for(jet);
    auto residual_at = [&](double value) {
        jet.pderiv[k][direction] = value;
        return degeneracy_residual(sigma_, jet, alpha)[slot];
    };
    const double r0 = residual_at(0.0);
    const double r1 = residual_at(1.0);
    if (r1 == r0) throw ConstraintError("slot does not depend on the chosen unknown");
    jet.pderiv[k][direction] = -r0 / (r1 - r0);
}

ResidualReport redundancy_check(const MotionSystem& system,
                                const std::vector<ExtendedJet>& jets, double pre_tol) {
    ResidualReport report;
    for (const auto& jet : jets) {
        const double alpha = system.alpha_for(jet);
        const auto r = degeneracy_residual(system.sigma(), jet, alpha);
        for (std::size_t slot = 0; slot < r.size(); ++slot) {
            if (!system.is_dependent(static_cast<int>(slot)) &&
                std::abs(r[slot]) > pre_tol)
                throw ConstraintError(
                    "jet violates independent equation " +
                    system.label(static_cast<int>(slot)));
            report.stats[system.label(static_cast<int>(slot))].add(r[slot]);
        }
    }
    return report;
}

FieldGrid::FieldGrid(std::vector<int> shape_in) : shape(std::move(shape_in)) {
    std::size_t n = 1;
    for (int s : shape) {
        if (s < 3) throw ConfigError("grids need at least 3 points per axis");
        n *= static_cast<std::size_t>(s);
    }
    data.assign(n, 0.0);
}

std::size_t FieldGrid::flat_index(const std::vector<int>& idx) const {
    std::size_t flat = 0;
    for (std::size_t d = 0; d < shape.size(); ++d)
        flat = flat * static_cast<std::size_t>(shape[d]) + static_cast<std::size_t>(idx[d]);
    return flat;
}

double& FieldGrid::at(const std::vector<int>& idx) { return data[flat_index(idx)]; }
double FieldGrid::at(const std::vector<int>& idx) const { return data[flat_index(idx)]; }

namespace {

// Iterates interior points (margin cells away from every boundary).
template <typename Fn>
void for_interior(const std::vector<int>& shape, int margin, Fn&& fn) {
    std::vector<int> idx(shape.size(), margin);
    for (;;) {
        fn(idx);
        int d = static_cast<int>(shape.size()) - 1;
        while (d >= 0) {
            if (++idx[d] < shape[d] - margin) break;
            idx[d] = margin;
            --d;
        }
        if (d < 0) break;
    }
}

double second_diff(const FieldGrid& g, std::vector<int> idx, int d, double h) {
    const double c = g.at(idx);
    idx[d] += 1;
    const double p = g.at(idx);
    idx[d] -= 2;
    const double m = g.at(idx);
    return (p - 2.0 * c + m) / (h * h);
}

double cross_diff(const FieldGrid& g, std::vector<int> idx, int d1, int d2, double h1,
                  double h2) {
    auto v = [&](int s1, int s2) {
        std::vector<int> i = idx;
        i[d1] += s1;
        i[d2] += s2;
        return g.at(i);
    };
    return (v(1, 1) - v(1, -1) - v(-1, 1) + v(-1, -1)) / (4.0 * h1 * h2);
}

double first_diff(const FieldGrid& g, std::vector<int> idx, int d, double h) {
    idx[d] += 1;
    const double p = g.at(idx);
    idx[d] -= 2;
    const double m = g.at(idx);
    return (p - m) / (2.0 * h);
}

} // namespace

ResidualReport euler_lagrange_residual(const ModelSpec& model,
                                       const std::vector<FieldGrid>& fields,
                                       const std::vector<double>& spacing) {
    if (spacing.size() != static_cast<std::size_t>(model.n_worldsheet))
        throw ConfigError("one spacing per worldsheet axis");
    for (double h : spacing)
        if (h <= 0.0) throw ConfigError("grid spacing must be positive");

    ResidualReport report;
    if (model.kind == ModelKind::ScalarQuadratic) {
        if (fields.size() != 1) throw ConfigError("scalar model has one field grid");
        const FieldGrid& phi = fields[0];
        const int nw = model.n_worldsheet;
        Polynomial psi_phi = model.potential.derivative(model.potential.var_index("phi"));
        for_interior(phi.shape, 1, [&](const std::vector<int>& idx) {
            double lap = 0.0;
            for (int i = 0; i < nw; ++i) {
                for (int j = 0; j < nw; ++j) {
                    if (model.metric(i, j) == 0.0) continue;
                    lap += model.metric(i, j) *
                           (i == j ? second_diff(phi, idx, i, spacing[i])
                                   : cross_diff(phi, idx, i, j, spacing[i], spacing[j]));
                }
            }
            BasePoint at;
            at.phi = {phi.at(idx)};
            at.x.resize(nw);
            for (int i = 0; i < nw; ++i) at.x[i] = idx[i] * spacing[i];
            report.stats["Res"].add(lap - eval_potential(psi_phi, at));
        });
        return report;
    }

    if (fields.size() != 2) throw ConfigError("ED model has two field grids");
    const FieldGrid& a0 = fields[0];
    const FieldGrid& a1 = fields[1];
    if (a0.shape != a1.shape) throw ConfigError("field grids must share a shape");
    const double c = model.coupling();
    const double h0 = spacing[0], h1 = spacing[1];

    FieldGrid f01(a0.shape); // d0 A1 - d1 A0, interior only
    for_interior(a0.shape, 1, [&](const std::vector<int>& idx) {
        f01.at(idx) = first_diff(a1, idx, 0, h0) - first_diff(a0, idx, 1, h1);
    });

    Polynomial dphi_a0 = model.potential.derivative(model.potential.var_index("A0"));
    Polynomial dphi_a1 = model.potential.derivative(model.potential.var_index("A1"));
    for_interior(a0.shape, 2, [&](const std::vector<int>& idx) {
        BasePoint at;
        at.phi = {a0.at(idx), a1.at(idx)};
        at.x = {idx[0] * h0, idx[1] * h1};
        report.stats["Res1"].add(eval_potential(dphi_a0, at) +
                                 2.0 * c * first_diff(f01, idx, 1, h1));
        report.stats["Res2"].add(eval_potential(dphi_a1, at) -
                                 2.0 * c * first_diff(f01, idx, 0, h0));
    });
    return report;
}

} // namespace wsham
