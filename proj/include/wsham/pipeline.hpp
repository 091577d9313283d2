#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsham/legendre.hpp"
#include "wsham/models.hpp"
#include "wsham/motion.hpp"
#include "wsham/solver.hpp"

namespace wsham {

/// Phase-space surface produced by the full transformation chain, with a
/// step-by-step log.
struct DeriveOutput {
    ImplicitSurface surface;
    std::vector<std::string> log;
    nlohmann::ordered_json surface_json(const ModelSpec& model, std::uint64_t seed) const;
};

/// Scalar family: homogenize, graph quadric, dual quadric, chart, assemble
/// the base-point dependence (verified against the potential at sampled base
/// points).  ED: graph and decomposability relations plus the cubic dual
/// surface, validated by the covector membership oracle.
DeriveOutput derive_surface(const ModelSpec& model);

struct VerifyOptions {
    int samples = 1000;
    std::uint64_t seed = 1;
    double tol = 1e-9; // membership / redundancy tolerance
};

struct VerifyCheck {
    std::string name;
    double value = 0.0; // residual or fitted order
    double bound_lo = 0.0, bound_hi = 0.0;
    bool pass = false;
    std::string note;
};

struct VerifyOutput {
    bool pass = false;
    std::vector<VerifyCheck> checks;
    nlohmann::ordered_json report(const ModelSpec& model, const VerifyOptions& opt) const;
};

/// Runs the property suites against one model: action pairing and
/// stationarity of the momentum map, double-dual involution, decomposability,
/// surface membership, and the redundancy certificates.
VerifyOutput verify_model(const ModelSpec& model, const VerifyOptions& opt);

struct SimulateOptions {
    int nodes = 256;
    double dt = 0.0;     // default: h / 2
    double T = 10.0;
    int stride = 16;
    std::uint64_t seed = 1;
    double wave_number = 1.0; // scalar initial data cos(k x)
    double f01 = 0.7;         // ED initial field strength
};

struct SimulateOutput {
    Trajectory trajectory;
    nlohmann::ordered_json summary;
    std::string trajectory_csv;
    std::string diagnostics_csv;
};

/// Plane-wave (scalar) or constant-field-strength (ED) run on the periodic
/// grid over [0, 2*pi), with CSV export and a summary (measured frequency or
/// field-strength spread, surface drift).
SimulateOutput simulate_model(const ModelSpec& model, const SimulateOptions& opt);

/// Crit-2 style probe: least-squares slope of log |<P(xi + eps d), xi> -
/// <P(xi), xi>| against log eps over decomposable perturbations.
double stationarity_order_fit(const HomogeneousLagrangian& lambda, Rng& rng, int jets);

/// 17-significant-digit float formatting (round-trip exact) used by all CSV
/// output.
std::string format_double(double v);

} // namespace wsham
