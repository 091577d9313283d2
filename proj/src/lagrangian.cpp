#include "wsham/lagrangian.hpp"

#include <cmath>
#include <limits>

namespace wsham {

double eval_potential(const Polynomial& pot, const BasePoint& at) {
    std::vector<double> values(pot.n_vars(), 0.0);
    for (int i = 0; i < pot.n_vars(); ++i) {
        const Variable& v = pot.variables()[i];
        switch (v.kind) {
            case Variable::Kind::Field:
                values[i] = at.phi.at(v.index);
                break;
            case Variable::Kind::Worldsheet:
                values[i] = at.x.at(v.index);
                break;
            default:
                throw StructuralError("potential variable not bound to the targetspace: " + v.name);
        }
    }
    return pot.eval(values);
}

LagrangianDensity LagrangianDensity::quadratic_scalar(int n_worldsheet, Mat g,
                                                      Polynomial psi) {
    if (g.size() != n_worldsheet)
        throw StructuralError("metric size does not match worldsheet dimension");
    if (!g.is_symmetric())
        throw StructuralError("metric must be symmetric");
    LagrangianDensity d;
    d.kind_ = Kind::QuadraticScalar;
    d.n_fields_ = 1;
    d.n_worldsheet_ = n_worldsheet;
    d.g_ = std::move(g);
    d.potential_ = std::move(psi);
    return d;
}

LagrangianDensity LagrangianDensity::maxwell_1p1(double c0, Polynomial phi_pot) {
    if (c0 == 0.0) throw ConfigError("coupling c0 must be nonzero");
    LagrangianDensity d;
    d.kind_ = Kind::Maxwell1p1;
    d.n_fields_ = 2;
    d.n_worldsheet_ = 2;
    d.c_ = 2.0 * c0;
    d.potential_ = std::move(phi_pot);
    return d;
}

LagrangianDensity LagrangianDensity::custom(int n_fields, int n_worldsheet, EvalFn fn) {
    LagrangianDensity d;
    d.kind_ = Kind::Custom;
    d.n_fields_ = n_fields;
    d.n_worldsheet_ = n_worldsheet;
    d.fn_ = std::move(fn);
    return d;
}

Mat LagrangianDensity::check_metric() const {
    const int n = g_.size();
    Mat gc(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gc(i, j) = (((i + j) % 2 == 0) ? 1.0 : -1.0) * g_(i, j);
    return gc;
}

double LagrangianDensity::evaluate(const BasePoint& at, const JetSample& jet) const {
    if (jet.n_fields != n_fields_ || jet.n_worldsheet != n_worldsheet_)
        throw StructuralError("jet shape does not match the density");
    switch (kind_) {
        case Kind::QuadraticScalar: {
            double s = 0.0;
            for (int i = 0; i < n_worldsheet_; ++i)
                for (int j = 0; j < n_worldsheet_; ++j)
                    s += g_(i, j) * jet.deriv(0, i) * jet.deriv(0, j);
            return 0.5 * s + eval_potential(potential_, at);
        }
        case Kind::Maxwell1p1: {
            const double f01 = jet.deriv(1, 0) - jet.deriv(0, 1);
            return c_ * f01 * f01 + eval_potential(potential_, at);
        }
        case Kind::Custom:
            return fn_(at, jet);
    }
    throw StructuralError("unreachable");
}

MultiIndex worldsheet_volume_index(int n_fields, int n_worldsheet) {
    std::vector<int> axes(n_worldsheet);
    for (int i = 0; i < n_worldsheet; ++i) axes[i] = n_fields + i;
    return MultiIndex(std::move(axes));
}

MultiIndex graph_momentum_index(int n_fields, int n_worldsheet, int a, int i) {
    std::vector<int> axes;
    axes.push_back(a);
    for (int k = 0; k < n_worldsheet; ++k)
        if (k != i) axes.push_back(n_fields + k);
    return MultiIndex(std::move(axes));
}

JetSample jet_from_polyvector(const Polyvector& v, int n_fields, int n_worldsheet,
                              double decomposability_tol) {
    if (v.dim() != n_fields + n_worldsheet || v.grade() != n_worldsheet)
        throw StructuralError("polyvector shape does not match the targetspace");
    if (!is_decomposable(v, decomposability_tol))
        throw ConstraintError("polyvector is not decomposable");
    const double vws = v.coeff(worldsheet_volume_index(n_fields, n_worldsheet));
    if (std::abs(vws) <= 1e-14 * v.max_abs_coeff())
        throw ChartError("polyvector is not a graph over the worldsheet");
    JetSample jet(n_fields, n_worldsheet);
    for (int a = 0; a < n_fields; ++a) {
        for (int i = 0; i < n_worldsheet; ++i) {
            const double sign = (i % 2 == 0) ? 1.0 : -1.0;
            jet.deriv(a, i) =
                sign * v.coeff(graph_momentum_index(n_fields, n_worldsheet, a, i)) / vws;
        }
    }
    return jet;
}

double HomogeneousLagrangian::evaluate(const Polyvector& v, const BasePoint& at) const {
    const JetSample jet =
        jet_from_polyvector(v, density_.n_fields(), density_.n_worldsheet());
    const double vws =
        v.coeff(worldsheet_volume_index(density_.n_fields(), density_.n_worldsheet()));
    return density_.evaluate(at, jet) * vws;
}

PolyForm HomogeneousLagrangian::gradient(const Polyvector& v, const BasePoint& at) const {
    const int nf = density_.n_fields();
    const int nw = density_.n_worldsheet();
    const int dim = nf + nw;
    if (v.dim() != dim || v.grade() != nw)
        throw StructuralError("polyvector shape does not match the density");
    if (!is_decomposable(v, 1e-10))
        throw ConstraintError("polyvector is not decomposable");

    const MultiIndex kws = worldsheet_volume_index(nf, nw);
    const double w = v.coeff(kws);
    if (std::abs(w) <= 1e-14 * v.max_abs_coeff())
        throw ChartError("polyvector is not a graph over the worldsheet");

    PolyForm grad(dim, nw);
    switch (density_.kind()) {
        case LagrangianDensity::Kind::QuadraticScalar: {
            const Mat gc = density_.check_metric();
            std::vector<double> xbar(nw);
            for (int i = 0; i < nw; ++i)
                xbar[i] = v.coeff(graph_momentum_index(nf, nw, 0, i));
            double quad = 0.0;
            for (int i = 0; i < nw; ++i)
                for (int j = 0; j < nw; ++j) quad += gc(i, j) * xbar[i] * xbar[j];
            grad.set(kws, -0.5 * quad / (w * w) + eval_potential(density_.potential(), at));
            for (int i = 0; i < nw; ++i) {
                double s = 0.0;
                for (int j = 0; j < nw; ++j) s += gc(i, j) * xbar[j];
                grad.set(graph_momentum_index(nf, nw, 0, i), s / w);
            }
            return grad;
        }
        case LagrangianDensity::Kind::Maxwell1p1: {
            const double c = density_.coupling();
            const MultiIndex k00({0, 2}), k11({1, 3});
            const double t = v.coeff(k00) + v.coeff(k11);
            grad.set(k00, 2.0 * c * t / w);
            grad.set(k11, 2.0 * c * t / w);
            grad.set(kws, -c * (t / w) * (t / w) + eval_potential(density_.potential(), at));
            return grad;
        }
        case LagrangianDensity::Kind::Custom: {
            if (nf != 1)
                throw UnsupportedModelError(
                    "numeric gradient needs every polyvector decomposable (one field)");
            const double h =
                std::cbrt(std::numeric_limits<double>::epsilon()) *
                std::max(1.0, v.max_abs_coeff());
            for (const auto& k : all_multi_indices(dim, nw)) {
                Polyvector vp = v, vm = v;
                vp.add(k, h);
                vm.add(k, -h);
                grad.set(k, (evaluate(vp, at) - evaluate(vm, at)) / (2.0 * h));
            }
            return grad;
        }
    }
    throw StructuralError("unreachable");
}

QuadricVariety graph_variety(const LagrangianDensity& L, const BasePoint& at) {
    if (L.kind() != LagrangianDensity::Kind::QuadraticScalar)
        throw UnsupportedModelError("graph variety in quadric form needs a quadratic-scalar density");
    const int nw = L.n_worldsheet();
    const Mat gc = L.check_metric();

    QuadricVariety q;
    q.n_fields = 1;
    q.n_worldsheet = nw;
    q.G = Mat(2 + nw);
    q.G(0, 1) = q.G(1, 0) = 0.5;
    q.G(1, 1) = -eval_potential(L.potential(), at);
    for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nw; ++j) q.G(2 + i, 2 + j) = -0.5 * gc(i, j);

    q.coords.push_back(graph_value_var("Lambda"));
    q.coords.push_back(polycoord_var("Xphi", worldsheet_volume_index(1, nw)));
    for (int i = 0; i < nw; ++i)
        q.coords.push_back(
            polycoord_var("X" + std::to_string(i), graph_momentum_index(1, nw, 0, i)));
    return q;
}

} // namespace wsham
