#pragma once

#include <string>

#include "wsham/lagrangian.hpp"
#include "wsham/quadric.hpp"

namespace wsham {

enum class ModelKind { ScalarQuadratic, Electrodynamics1p1 };

/// Preset model: everything the pipeline needs, plus the closed-form surface
/// each preset is expected to reproduce (kept as stored data so derivations
/// regress against it instead of recomputing the target).
struct ModelSpec {
    ModelKind kind = ModelKind::ScalarQuadratic;
    std::string name;
    int n_worldsheet = 2;
    int n_fields = 1;

    Mat metric;           // scalar family
    Polynomial potential; // Psi(phi, x...) for scalar, Phi(A0, A1, x...) for ED
    double mass = 0.0;    // recorded by kg_1p1
    double c0 = 0.0;      // ED
    double coupling() const { return 2.0 * c0; }

    ImplicitSurface expected_surface;
    std::vector<Polynomial> plucker_polys; // ED: one relation over (Lambda, X)

    LagrangianDensity density() const;
};

/// Free scalar field on a 1+1 worldsheet, metric diag(1,-1),
/// Psi = -1/2 m^2 phi^2.  Surface: Pphi + 1/2 P0^2 - 1/2 P1^2 - Psi = 0.
ModelSpec kg_1p1(double mass);

/// Scalar field over an n-dimensional worldsheet with symmetric
/// nondegenerate metric g and polynomial potential psi(phi, x...).
/// Surface: Pphi + 1/2 gcheck_{ij} P^i P^j - Psi = 0 with
/// gcheck^{ij} = (-1)^{i+j} g^{ij}.
ModelSpec scalar_ndim(Mat g, Polynomial psi);

/// Two potential fields A0, A1 on a 1+1 worldsheet,
/// L = C F01^2 + Phi, C = 2 c0.  Carries the quadratic graph relation, the
/// single decomposability relation, and the cubic dual surface.
ModelSpec electrodynamics_1p1(double c0, Polynomial phi_pot);
ModelSpec electrodynamics_1p1(double c0); // Phi = 0

/// Handy potential builders (variables bound to the model conventions).
Polynomial scalar_mass_potential(double mass);           // -1/2 m^2 phi^2 over [phi]
Polynomial zero_scalar_potential();                      // 0 over [phi]
Polynomial zero_ed_potential();                          // 0 over [A0, A1]

/// ED fiber machinery over homogeneous coordinates
/// [Lambda : XA0A1 : XA0x0 : XA0x1 : XA1x0 : XA1x1 : Xx0x1].
/// Graph relation: Lambda*W - C*(XA0x0 + XA1x1)^2 - Phi(at)*W^2, W = Xx0x1.
Polynomial ed_graph_polynomial(const ModelSpec& model, const BasePoint& at);
/// Decomposability: XA0A1*W - XA0x0*XA1x1 + XA0x1*XA1x0.
Polynomial ed_plucker_polynomial();
/// Dual variety over [Pi, PA0A1, PA0x0, PA0x1, PA1x0, PA1x1, Px0x1]:
/// (4 Pi C + PA0A1) [PA0A1 (Pi Phi(at) + Px0x1) - PA0x0 PA1x1 + PA0x1 PA1x0]
///   + Pi C (PA0x0 + PA1x1)^2.
Polynomial ed_eta_projective(const ModelSpec& model, const BasePoint& at);

/// Closed-form full surfaces (momenta plus whatever coordinates the
/// potential brings in).
ImplicitSurface scalar_expected_surface(const Mat& g, const Polynomial& psi);
ImplicitSurface ed_expected_surface(double c0, const Polynomial& phi_pot);

/// Coordinate names used by the surfaces, for logs and CSV headers.
std::vector<std::string> scalar_momentum_names(int n_worldsheet);
std::vector<std::string> ed_momentum_names();

inline JetSample jet_from_polyvector(const Polyvector& v, const ModelSpec& model,
                                     double decomposability_tol = 1e-10) {
    return jet_from_polyvector(v, model.n_fields, model.n_worldsheet,
                               decomposability_tol);
}

} // namespace wsham
