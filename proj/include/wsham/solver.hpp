#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "wsham/models.hpp"

namespace wsham {

/// Periodic 1-D grid state of the derived first-order systems.
/// Scalar family (metric diag(1,-1)): phi and the stepped momenta P0, Pphi;
/// P1 is algebraic (centered dphi/dx1) and recomputed on demand.
/// ED (Phi = 0): the potentials and the stepped field strength
/// e01 = d0 A1 - d1 A0; A0 is held fixed (its time evolution is the gauge
/// freedom of the degenerate system).
struct FieldState {
    ModelKind kind = ModelKind::ScalarQuadratic;
    double t = 0.0;
    double h = 0.0;
    int nodes = 0;

    std::vector<double> phi, p0, pphi; // scalar
    std::vector<double> a0, a1, e01;   // ED
};

using Profile = std::function<double(double x)>;

/// Scalar state on [0, nodes*h), momenta initialized on the surface:
/// P0 = dphi/dt, Pphi from eta = 0.
FieldState make_scalar_state(const ModelSpec& model, int nodes, double h,
                             const Profile& phi0, const Profile& dphi0_dt);

/// ED state with a spatially constant initial field strength.
FieldState make_ed_state(const ModelSpec& model, int nodes, double h,
                         const Profile& a0_init, const Profile& a1_init,
                         double e01_init);

/// One time-symmetric kick-drift-kick step of the derived first-order
/// system with centered spatial differences.  Enforces dt <= h.
FieldState step_hamiltonian(const ModelSpec& model, const FieldState& s, double dt);

/// Second-order reference integrator of the field equation itself
/// (three-level centered time, compact second differences in space); the
/// independent oracle the Hamiltonian side is compared against.
struct ReferenceState {
    double t = 0.0;
    double h = 0.0;
    int nodes = 0;
    bool started = false;
    std::vector<double> phi, phi_prev;
    std::vector<double> v0; // initial dphi/dt, consumed by the first step
};

ReferenceState make_reference_state(const ModelSpec& model, int nodes, double h,
                                    const Profile& phi0, const Profile& dphi0_dt);
ReferenceState step_reference_lagrangian(const ModelSpec& model, const ReferenceState& s,
                                         double dt);

struct DiagnosticsSample {
    double t = 0.0;
    double energy = 0.0;
    double max_abs_eta = 0.0;
    double f01_min = 0.0, f01_max = 0.0; // ED only
};

struct Trajectory {
    std::vector<std::pair<double, FieldState>> snapshots;
    std::vector<DiagnosticsSample> series;
    std::vector<std::pair<double, double>> probe; // (t, phi at node 0), every step
};

/// Integrate to T with snapshots and diagnostics every `stride` steps.
/// T = 0 yields just the initial snapshot.
Trajectory run(const ModelSpec& model, const FieldState& initial, double T, double dt,
               int stride);

/// Momenta of the scalar state at one node, P1 recomputed from phi.
struct ScalarNodeMomenta {
    double p0, p1, pphi, eta;
};
ScalarNodeMomenta scalar_node_momenta(const ModelSpec& model, const FieldState& s, int j);

/// Zero-multiplier momentum representative of the ED state at one node and
/// the surface residual there.
struct EdNodeMomenta {
    double pa0a1, pa0x0, pa0x1, pa1x0, pa1x1, px0x1, eta, f01;
};
EdNodeMomenta ed_node_momenta(const ModelSpec& model, const FieldState& s, int j);

DiagnosticsSample diagnostics(const ModelSpec& model, const FieldState& s);

/// Angular frequency from linearly interpolated zero crossings of a probe
/// series.  Needs at least three crossings.
double measure_frequency(const std::vector<std::pair<double, double>>& probe);

} // namespace wsham
