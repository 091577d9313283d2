#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wsham/lagrangian.hpp"
#include "wsham/models.hpp"
#include "wsham/random.hpp"

using namespace wsham;

namespace {

Polyvector scalar_polyvector(double xphi, double x0, double x1) {
    // Axes: phi = 0, x0 = 1, x1 = 2; Xphi ~ e{12}, X0 ~ e{02}, X1 ~ e{01}.
    Polyvector v(3, 2);
    v.set(MultiIndex({1, 2}), xphi);
    v.set(MultiIndex({0, 2}), x0);
    v.set(MultiIndex({0, 1}), x1);
    return v;
}

BasePoint base11(double phi) {
    BasePoint bp = BasePoint::zero(1, 2);
    bp.phi[0] = phi;
    return bp;
}

} // namespace

TEST_CASE("jet read-off from polyvector coordinates") {
    const Polyvector v = scalar_polyvector(1.0, 3.0, -2.0);
    const JetSample jet = jet_from_polyvector(v, 1, 2);
    CHECK(jet.deriv(0, 0) == doctest::Approx(3.0));
    CHECK(jet.deriv(0, 1) == doctest::Approx(2.0));

    // Scale invariance of the chart.
    for (double s : {0.5, 2.0, 17.0}) {
        const JetSample j2 = jet_from_polyvector(s * v, 1, 2);
        CHECK(j2.deriv(0, 0) == doctest::Approx(3.0));
        CHECK(j2.deriv(0, 1) == doctest::Approx(2.0));
    }
}

TEST_CASE("jet chart errors") {
    CHECK_THROWS_AS(jet_from_polyvector(scalar_polyvector(0.0, 1.0, 1.0), 1, 2),
                    ChartError);

    Polyvector cross(4, 2);
    cross.set(MultiIndex({0, 1}), 1.0);
    cross.set(MultiIndex({2, 3}), 1.0);
    CHECK_THROWS_AS(jet_from_polyvector(cross, 2, 2), ConstraintError);
}

TEST_CASE("ED jet ratios follow the epsilon convention") {
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        JetSample jet(2, 2);
        for (double& d : jet.d) d = rng.uniform(-2.0, 2.0);
        const Polyvector v = graph_tangent(jet);
        const JetSample back = jet_from_polyvector(2.5 * v, 2, 2);
        for (int a = 0; a < 2; ++a)
            for (int i = 0; i < 2; ++i)
                CHECK(back.deriv(a, i) == doctest::Approx(jet.deriv(a, i)).epsilon(1e-12));
    }
}

TEST_CASE("homogenized density evaluates through the jet chart") {
    const HomogeneousLagrangian lambda = homogenize(kg_1p1(0.0).density());
    const BasePoint bp = base11(0.0);

    // (Xphi, X0, X1) = (2, 2, 0): jet (1, 0), L = 1/2, Lambda = 1.
    CHECK(lambda.evaluate(scalar_polyvector(2.0, 2.0, 0.0), bp) == doctest::Approx(1.0));

    // Null direction of the light cone.
    CHECK(lambda.evaluate(scalar_polyvector(1.0, 0.4, -0.4), bp) ==
          doctest::Approx(0.0).epsilon(1e-15));

    // Degree-1 homogeneity across three decades of scale.
    const Polyvector v = scalar_polyvector(1.3, -0.2, 0.8);
    const double base = lambda.evaluate(v, bp);
    for (double a : {0.5, 2.0, 10.0, 1000.0})
        CHECK(lambda.evaluate(a * v, bp) == doctest::Approx(a * base).epsilon(1e-12));

    // Off the decomposable cone the function is undefined.
    const HomogeneousLagrangian ed = homogenize(electrodynamics_1p1(0.25).density());
    Polyvector cross(4, 2);
    cross.set(MultiIndex({0, 1}), 1.0);
    cross.set(MultiIndex({2, 3}), 1.0);
    CHECK_THROWS_AS(ed.evaluate(cross, BasePoint::zero(2, 2)), ConstraintError);
}

TEST_CASE("homogenized value equals density times volume coordinate, same path") {
    Rng rng(5);
    const ModelSpec model = kg_1p1(1.7);
    const HomogeneousLagrangian lambda = homogenize(model.density());
    for (int t = 0; t < 1000; ++t) {
        JetSample jet(1, 2);
        jet.deriv(0, 0) = rng.uniform(-2.0, 2.0);
        jet.deriv(0, 1) = rng.uniform(-2.0, 2.0);
        const BasePoint bp = base11(rng.uniform(-1.0, 1.0));
        Polyvector v = graph_tangent(jet);
        v *= rng.nonzero(0.2) * 3.0;
        const double vws = v.coeff(MultiIndex({1, 2}));
        const JetSample back = jet_from_polyvector(v, 1, 2);
        CHECK(lambda.evaluate(v, bp) == model.density().evaluate(bp, back) * vws);
    }
}

TEST_CASE("analytic gradients match central differences") {
    Rng rng(7);
    const BasePoint bp11 = base11(0.6);
    const HomogeneousLagrangian kg = homogenize(kg_1p1(1.2).density());
    const HomogeneousLagrangian ed = homogenize(electrodynamics_1p1(0.35).density());
    const BasePoint bp_ed = BasePoint::zero(2, 2);

    auto check_gradient = [&](const HomogeneousLagrangian& lambda, const Polyvector& v,
                              const BasePoint& bp) {
        const PolyForm grad = lambda.gradient(v, bp);
        const double h = 1e-6 * std::max(1.0, v.max_abs_coeff());
        for (const auto& k : all_multi_indices(v.dim(), v.grade())) {
            Polyvector vp = v, vm = v;
            vp.add(k, h);
            vm.add(k, -h);
            double num = 0.0;
            bool defined = true;
            try {
                num = (lambda.evaluate(vp, bp) - lambda.evaluate(vm, bp)) / (2.0 * h);
            } catch (const ConstraintError&) {
                defined = false; // perturbation left the decomposable cone
            }
            if (defined)
                CHECK(grad.coeff(k) == doctest::Approx(num).epsilon(1e-5));
        }
    };

    for (int t = 0; t < 10; ++t) {
        JetSample jet(1, 2);
        jet.deriv(0, 0) = rng.uniform(-2.0, 2.0);
        jet.deriv(0, 1) = rng.uniform(-2.0, 2.0);
        check_gradient(kg, graph_tangent(jet), bp11);

        JetSample ejet(2, 2);
        for (double& d : ejet.d) d = rng.uniform(-1.5, 1.5);
        check_gradient(ed, graph_tangent(ejet), bp_ed);
    }
}

TEST_CASE("graph variety quadric of the 1+1 scalar") {
    const QuadricVariety q = graph_variety(kg_1p1(0.0).density(), base11(0.0));
    REQUIRE(q.size() == 4);
    const double expected[4][4] = {{0, 0.5, 0, 0}, {0.5, 0, 0, 0},
                                   {0, 0, -0.5, 0}, {0, 0, 0, 0.5}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(q.G(i, j) == expected[i][j]);

    // Psi(0) = 0 keeps the massive quadric identical at phi = 0.
    const QuadricVariety qm = graph_variety(kg_1p1(2.0).density(), base11(0.0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(qm.G(i, j) == q.G(i, j));

    // 2+1: field block -1/2 gcheck with gcheck^{ij} = (-1)^{i+j} g^{ij}.
    Mat g(3);
    g(0, 0) = 1.0;
    g(1, 1) = -1.0;
    g(2, 2) = -1.0;
    const QuadricVariety q3 =
        graph_variety(scalar_ndim(g, zero_scalar_potential()).density(),
                      BasePoint::zero(1, 3));
    REQUIRE(q3.size() == 5);
    CHECK(q3.G(2, 2) == -0.5);
    CHECK(q3.G(3, 3) == 0.5);
    CHECK(q3.G(4, 4) == 0.5);

    CHECK_THROWS_AS(graph_variety(electrodynamics_1p1(0.25).density(), BasePoint::zero(2, 2)),
                    UnsupportedModelError);
}

TEST_CASE("graph variety membership of (Lambda(v), v)") {
    Rng rng(11);
    const ModelSpec model = kg_1p1(0.9);
    const HomogeneousLagrangian lambda = homogenize(model.density());
    for (int t = 0; t < 200; ++t) {
        const BasePoint bp = base11(rng.uniform(-1.0, 1.0));
        const QuadricVariety q = graph_variety(model.density(), bp);
        JetSample jet(1, 2);
        jet.deriv(0, 0) = rng.uniform(-2.0, 2.0);
        jet.deriv(0, 1) = rng.uniform(-2.0, 2.0);
        Polyvector v = graph_tangent(jet);
        v *= rng.nonzero(0.2) * 2.0;

        std::vector<double> coords(4);
        coords[0] = lambda.evaluate(v, bp);
        coords[1] = v.coeff(MultiIndex({1, 2}));
        coords[2] = v.coeff(MultiIndex({0, 2}));
        coords[3] = v.coeff(MultiIndex({0, 1}));
        double scale = 1e-30;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) scale += std::abs(q.G(i, j) * coords[i] * coords[j]);
        CHECK(std::abs(q.quadratic_form(coords)) / scale <= 1e-12);
    }
}

TEST_CASE("homogeneity makes the worldline action reparametrization independent") {
    // Worldline toy: one field q over a 1-dimensional worldsheet, L = v^2/2.
    Mat g(1);
    g(0, 0) = 1.0;
    Polynomial psi({field_var("phi", 0)}); // zero potential
    const HomogeneousLagrangian lambda =
        homogenize(LagrangianDensity::quadratic_scalar(1, g, psi));

    // Curve (t, q) = (s, sin s), s in [0, 1]; tangent (1, cos s).
    auto tangent_at = [](double s) {
        Polyvector v(2, 1);
        v.set(MultiIndex({1}), 1.0);          // worldsheet axis
        v.set(MultiIndex({0}), std::cos(s));  // field axis
        return v;
    };
    const BasePoint bp = BasePoint::zero(1, 1);
    const int n = 10000;

    double action_s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double s = (i + 0.5) / n;
        action_s += lambda.evaluate(tangent_at(s), bp) / n;
    }

    // Reparametrize s = u^2: the tangent rescales by ds/du and homogeneity
    // carries the Jacobian.
    double action_u = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = (i + 0.5) / n;
        const double s = u * u;
        Polyvector v = tangent_at(s);
        v *= 2.0 * u;
        action_u += lambda.evaluate(v, bp) / n;
    }

    CHECK(std::abs(action_s - action_u) <= 1e-8);
}
