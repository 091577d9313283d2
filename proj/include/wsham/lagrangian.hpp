#pragma once

#include <functional>
#include <vector>

#include "wsham/exterior.hpp"
#include "wsham/polynomial.hpp"
#include "wsham/quadric.hpp"

namespace wsham {

/// Point of the targetspace the fiber constructions are anchored at.
struct BasePoint {
    std::vector<double> x;   // worldsheet coordinates
    std::vector<double> phi; // field values

    static BasePoint zero(int n_fields, int n_worldsheet) {
        return BasePoint{std::vector<double>(n_worldsheet, 0.0),
                         std::vector<double>(n_fields, 0.0)};
    }
};

/// Evaluate a potential polynomial whose variables are bound to field and
/// worldsheet coordinates.
double eval_potential(const Polynomial& pot, const BasePoint& at);

/// Density in jet variables.  The two structured kinds carry everything the
/// fiber constructions need in closed form; Custom is evaluate-only.
class LagrangianDensity {
public:
    enum class Kind { QuadraticScalar, Maxwell1p1, Custom };
    using EvalFn = std::function<double(const BasePoint&, const JetSample&)>;

    /// L = 1/2 g^{ij} dphi_i dphi_j + Psi(x, phi), one field over an
    /// n_worldsheet-dimensional worldsheet.  psi's variables must be Field-
    /// and Worldsheet-bound.
    static LagrangianDensity quadratic_scalar(int n_worldsheet, Mat g, Polynomial psi);

    /// L = C F01^2 + Phi(A, x) with F01 = d0 A1 - d1 A0 and C = 2 c0;
    /// two potential fields over a two-dimensional worldsheet.
    static LagrangianDensity maxwell_1p1(double c0, Polynomial phi_pot);

    static LagrangianDensity custom(int n_fields, int n_worldsheet, EvalFn fn);

    Kind kind() const { return kind_; }
    int n_fields() const { return n_fields_; }
    int n_worldsheet() const { return n_worldsheet_; }

    double evaluate(const BasePoint& at, const JetSample& jet) const;

    const Mat& metric() const { return g_; }
    /// Sign-conjugated metric entering the polyvector-coordinate form of the
    /// density: g_check^{ij} = (-1)^{i+j} g^{ij}.
    Mat check_metric() const;
    const Polynomial& potential() const { return potential_; }
    double coupling() const { return c_; } // C = 2 c0

private:
    LagrangianDensity() = default;

    Kind kind_ = Kind::Custom;
    int n_fields_ = 0;
    int n_worldsheet_ = 0;
    Mat g_;
    Polynomial potential_;
    double c_ = 0.0;
    EvalFn fn_;
};

/// Multi-index of the pure-worldsheet basis polyvector (axes of all
/// worldsheet directions).
MultiIndex worldsheet_volume_index(int n_fields, int n_worldsheet);

/// Multi-index {field a} u {worldsheet axes} \ {x^i}: the coordinate slot a
/// graph tangent stores the jet entry dphi^a/dx^i in (up to sign).
MultiIndex graph_momentum_index(int n_fields, int n_worldsheet, int a, int i);

/// Reads the first-jet out of a decomposable polyvector on the chart where
/// the pure-worldsheet coordinate is nonzero:
///   dphi^a/dx^i = (-1)^i v_{{a} u ws\{i}} / v_ws.
/// Scale-invariant in v.
JetSample jet_from_polyvector(const Polyvector& v, int n_fields, int n_worldsheet,
                              double decomposability_tol = 1e-10);

/// Degree-1 homogeneous extension of a density to the cone of decomposable
/// polyvectors: Lambda(v) = L(jet(v)) * v_ws.  Only defined on decomposable
/// inputs; everything else is rejected.  The jet ratios are scale-invariant,
/// so the formula extends the degree-1 rule to negative scalings as well
/// (the odd extension, analytic for the structured kinds).
class HomogeneousLagrangian {
public:
    explicit HomogeneousLagrangian(LagrangianDensity density)
        : density_(std::move(density)) {}

    const LagrangianDensity& density() const { return density_; }

    double evaluate(const Polyvector& v, const BasePoint& at) const;

    /// Exact partial derivatives with respect to the polyvector coordinates,
    /// as a grade-N form (one component per momentum multi-index).  Closed
    /// form for the structured kinds; central differences for Custom (only
    /// when a single field makes every polyvector decomposable).
    PolyForm gradient(const Polyvector& v, const BasePoint& at) const;

private:
    LagrangianDensity density_;
};

inline HomogeneousLagrangian homogenize(LagrangianDensity density) {
    return HomogeneousLagrangian(std::move(density));
}

/// Quadric form of the graph variety of the homogenized quadratic-scalar
/// density at a base point: coordinates [Lambda : Xphi : X0 : ... ], matrix
///   G[Lambda,Xphi] = 1/2,  G[Xphi,Xphi] = -Psi(at),
///   field block = -1/2 g_check^{ij}.
QuadricVariety graph_variety(const LagrangianDensity& L, const BasePoint& at);

} // namespace wsham
