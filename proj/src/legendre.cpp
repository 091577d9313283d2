#include "wsham/legendre.hpp"

#include <algorithm>
#include <cmath>

namespace wsham {

namespace {

Mat scale_sign_normalized(const Mat& m) {
    const double s = m.max_abs();
    if (s == 0.0) return m;
    Mat out = m.scaled(1.0 / s);
    // Fix the projective sign: first entry that is clearly nonzero becomes
    // positive.
    for (int i = 0; i < out.size(); ++i)
        for (int j = 0; j < out.size(); ++j) {
            if (std::abs(out(i, j)) > 1e-8) {
                if (out(i, j) < 0.0) out = out.scaled(-1.0);
                return out;
            }
        }
    return out;
}

} // namespace

QuadricVariety dual_quadric(const QuadricVariety& q, double rank_rel_tol) {
    const int rank = symmetric_rank(q.G, rank_rel_tol);
    if (rank < q.size())
        throw DegeneracyError("quadric is defected: dual is not a hypersurface", rank,
                              q.size());
    QuadricVariety out;
    const Mat inv = inverse(q.G);
    const double s = inv.max_abs();
    out.G = inv.scaled(s == 0.0 ? 1.0 : 1.0 / s);
    out.dual = !q.dual;
    out.n_fields = q.n_fields;
    out.n_worldsheet = q.n_worldsheet;
    out.coords.reserve(q.coords.size());
    for (const auto& v : q.coords) out.coords.push_back(dual_variable(v));
    return out;
}

ImplicitSurface affine_chart(const QuadricVariety& q_dual) {
    if (!q_dual.dual || q_dual.coords.empty() ||
        q_dual.coords[0].kind != Variable::Kind::Pi)
        throw StructuralError("affine chart needs a dual quadric with a Pi slot");
    const int n = q_dual.size();
    bool depends_on_pi = false;
    for (int j = 0; j < n; ++j)
        if (q_dual.G(0, j) != 0.0) depends_on_pi = true;
    if (!depends_on_pi)
        throw ChartError("dual quadric does not involve Pi; the chart is vacuous");

    std::vector<Variable> vars(q_dual.coords.begin() + 1, q_dual.coords.end());
    Polynomial eta(vars);
    const int m = n - 1;
    // Pi = -1: quadratic block, linear Pi cross terms, Pi^2 constant.
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            const double c = (i == j) ? q_dual.G(1 + i, 1 + j)
                                      : 2.0 * q_dual.G(1 + i, 1 + j);
            std::vector<int> e(m, 0);
            e[i] += 1;
            e[j] += 1;
            eta.add_term(std::move(e), c);
        }
    for (int j = 0; j < m; ++j) {
        std::vector<int> e(m, 0);
        e[j] = 1;
        eta.add_term(std::move(e), -2.0 * q_dual.G(0, 1 + j));
    }
    eta.add_term(std::vector<int>(m, 0), q_dual.G(0, 0));

    // Normalize on the distinguished momentum (slot 1 of the quadric).
    std::vector<int> lin(m, 0);
    lin[0] = 1;
    const double c1 = eta.coeff(lin);
    if (c1 == 0.0)
        throw ChartError("distinguished momentum is absent; no canonical normalization");
    eta *= 1.0 / c1;

    ImplicitSurface s;
    s.n_fields = q_dual.n_fields;
    s.n_worldsheet = q_dual.n_worldsheet;
    s.eta = std::move(eta);
    return s;
}

MomentumPoint legendre_map(const HomogeneousLagrangian& lambda, const Polyvector& xi,
                           const BasePoint& at) {
    MomentumPoint p;
    p.pi = -1.0;
    p.momenta = lambda.gradient(xi, at);
    if (lambda.density().kind() == LagrangianDensity::Kind::Maxwell1p1) {
        // Plucker constraints leave a free multiplier; this is the
        // zero-multiplier representative.
        p.multivalued = true;
        const double w =
            xi.coeff(worldsheet_volume_index(lambda.density().n_fields(),
                                             lambda.density().n_worldsheet()));
        p.multipliers = {-1.0 / w, 0.0};
    }
    return p;
}

MomentumPoint constrained_dual_sample(const Polynomial& f,
                                      const std::vector<Polynomial>& plucker,
                                      std::span<const double> x,
                                      std::span<const double> multipliers,
                                      double membership_tol) {
    if (multipliers.size() != plucker.size() + 1)
        throw StructuralError("need one multiplier for F and one per constraint");

    const double f_val = f.eval(x);
    const double f_scale = std::max(f.eval_abs(x), 1e-300);
    if (std::abs(f_val) > membership_tol * f_scale)
        throw ConstraintError("point is off the graph variety (F != 0)");
    for (const auto& p : plucker) {
        if (p.variables() != f.variables())
            throw StructuralError("constraint variables must match F");
        const double v = p.eval(x);
        if (std::abs(v) > membership_tol * std::max(p.eval_abs(x), 1e-300))
            throw ConstraintError("point is off the constraint variety (plucker != 0)");
    }

    // Covector components over F's variables.
    const int nv = f.n_vars();
    std::vector<double> cov(nv, 0.0);
    for (int v = 0; v < nv; ++v) {
        cov[v] = multipliers[0] * f.derivative(v).eval(x);
        for (std::size_t k = 0; k < plucker.size(); ++k)
            cov[v] += multipliers[k + 1] * plucker[k].derivative(v).eval(x);
    }

    int pi_slot = -1;
    int dim = 0, grade = 0;
    for (int v = 0; v < nv; ++v) {
        const Variable& var = f.variables()[v];
        if (var.kind == Variable::Kind::GraphValue) pi_slot = v;
        if (var.kind == Variable::Kind::PolyCoord) {
            grade = var.momentum.grade();
            if (!var.momentum.axes().empty())
                dim = std::max(dim, var.momentum.axes().back() + 1);
        }
    }
    if (pi_slot < 0) throw StructuralError("F has no graph-value variable");

    MomentumPoint out;
    out.multivalued = !plucker.empty();
    out.multipliers.assign(multipliers.begin(), multipliers.end());
    out.momenta = PolyForm(dim, grade);

    const double pi_raw = cov[pi_slot];
    double scale = 1.0;
    if (pi_raw == 0.0) {
        out.at_infinity = true;
        out.pi = 0.0;
    } else {
        scale = -1.0 / pi_raw;
        out.pi = -1.0;
    }
    for (int v = 0; v < nv; ++v) {
        const Variable& var = f.variables()[v];
        if (var.kind == Variable::Kind::PolyCoord)
            out.momenta.set(var.momentum, scale * cov[v]);
    }
    return out;
}

DualParametrization::DualParametrization(Polynomial graph_relation,
                                         std::vector<Polynomial> constraints)
    : graph_(std::move(graph_relation)), constraints_(std::move(constraints)) {
    for (const auto& c : constraints_)
        if (c.variables() != graph_.variables())
            throw StructuralError("constraint variables must match the graph relation");
}

double DualParametrization::rank_condition_residual(std::span<const double> x,
                                                    const MomentumPoint& p) const {
    const int nv = graph_.n_vars();
    // Covector in the graph-relation variable order.
    std::vector<double> cov(nv, 0.0);
    double scale = 1e-300;
    for (int v = 0; v < nv; ++v) {
        const Variable& var = graph_.variables()[v];
        cov[v] = var.kind == Variable::Kind::GraphValue ? p.pi
                                                        : p.momenta.coeff(var.momentum);
        scale = std::max(scale, std::abs(cov[v]));
    }
    // Gram-Schmidt the gradient rows, then project the covector out.
    std::vector<std::vector<double>> rows;
    auto add_row = [&](const Polynomial& poly) {
        std::vector<double> r(nv);
        for (int v = 0; v < nv; ++v) r[v] = poly.derivative(v).eval(x);
        for (const auto& q : rows) {
            double dot = 0.0;
            for (int v = 0; v < nv; ++v) dot += r[v] * q[v];
            for (int v = 0; v < nv; ++v) r[v] -= dot * q[v];
        }
        double norm = 0.0;
        for (double t : r) norm += t * t;
        norm = std::sqrt(norm);
        if (norm > 1e-12) {
            for (double& t : r) t /= norm;
            rows.push_back(std::move(r));
        }
    };
    add_row(graph_);
    for (const auto& c : constraints_) add_row(c);

    for (const auto& q : rows) {
        double dot = 0.0;
        for (int v = 0; v < nv; ++v) dot += cov[v] * q[v];
        for (int v = 0; v < nv; ++v) cov[v] -= dot * q[v];
    }
    double rest = 0.0;
    for (double t : cov) rest = std::max(rest, std::abs(t));
    return rest / scale;
}

double double_dual_check(const QuadricVariety& q) {
    const QuadricVariety once = dual_quadric(q);
    const QuadricVariety twice = dual_quadric(once);
    return frobenius_distance(scale_sign_normalized(twice.G),
                              scale_sign_normalized(q.G));
}

RankReport detect_degeneracy(const QuadricVariety& q, double rel_tol) {
    RankReport r;
    r.size = q.size();
    r.eigenvalues = symmetric_eigenvalues(q.G);
    std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    r.rank = symmetric_rank(q.G, rel_tol);
    r.defected = r.rank < r.size;
    return r;
}

} // namespace wsham
