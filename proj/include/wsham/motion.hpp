#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsham/models.hpp"
#include "wsham/random.hpp"

namespace wsham {

/// Pointwise first-jet of a phase-space section over the worldsheet: field
/// and momentum values plus all their first derivatives.
struct ExtendedJet {
    BasePoint at;                                      // x, phi
    std::vector<double> f;                             // f[a*N + i] = dphi^a/dx^i
    std::map<MultiIndex, double> p;                    // momentum values P_K
    std::map<MultiIndex, std::vector<double>> pderiv;  // pi_{K;i}, N entries each

    double deriv(int a, int i, int n_worldsheet) const {
        return f[static_cast<std::size_t>(a) * n_worldsheet + i];
    }
};

/// Axis layout of the phase-space fiber as one flat vector space: field
/// axes, worldsheet axes, then one axis per momentum coordinate in
/// lexicographic multi-index order.
struct PhaseSpaceLayout {
    int n_fields = 0;
    int n_worldsheet = 0;
    std::vector<MultiIndex> momenta;

    static PhaseSpaceLayout make(int n_fields, int n_worldsheet);

    int targetspace_dim() const { return n_fields + n_worldsheet; }
    int dim() const { return targetspace_dim() + static_cast<int>(momenta.size()); }
    int momentum_axis(const MultiIndex& k) const;
    std::string slot_name(int axis) const;
};

/// Componentwise residual of i_Xi omega - alpha * d(eta) against every basis
/// covector of the phase space, ordered by PhaseSpaceLayout axes.  Zero
/// exactly on jets satisfying the degeneracy condition.
std::vector<double> degeneracy_residual(const ImplicitSurface& sigma,
                                        const ExtendedJet& jet, double alpha);

struct ResidualStat {
    double max_abs = 0.0;
    double sum_sq = 0.0;
    int count = 0;
    void add(double v);
    double l2() const;
};

struct ResidualReport {
    std::map<std::string, ResidualStat> stats;
    double max_abs(const std::string& key) const;
    double max_abs_over_all() const;
    nlohmann::ordered_json to_json() const;
};

/// Equations of motion extracted from a recognized surface family, with the
/// per-slot equation labels and the dependency split the redundancy
/// certificates check.
class MotionSystem {
public:
    const ModelSpec& model() const { return model_; }
    const ImplicitSurface& sigma() const { return sigma_; }
    const PhaseSpaceLayout& layout() const { return layout_; }

    /// Equation label of a residual slot ("HE1", "Part2_3", "HEEM6", ...).
    const std::string& label(int slot) const { return labels_[slot]; }
    bool is_dependent(int slot) const { return dependent_[slot]; }
    std::vector<std::string> dependent_labels() const;

    /// Normalization of the multiplier from the slot the derivation uses:
    /// the pure-worldsheet momentum slot.  Constant for the scalar family,
    /// per-point for ED.
    double alpha_for(const ExtendedJet& jet) const;

    /// Scalar family algebraic relations P^i = (-1)^i g^{ij} dphi_j and the
    /// membership value of the pure-worldsheet momentum.
    std::map<MultiIndex, double> momenta_from_jet(const BasePoint& at,
                                                  const std::vector<double>& f) const;

    /// ED: velocities from momenta via the dual-surface gradient slots.
    std::array<double, 4> ed_jet_from_momenta(const ExtendedJet& jet) const;

    /// Random jet satisfying the independent equations and first-order
    /// membership; the dependent slots are then genuine checks.
    ExtendedJet sample_constrained_jet(Rng& rng) const;

    /// Human-readable derivation lines.
    std::vector<std::string> describe() const;

private:
    friend MotionSystem build_motion_system(const ImplicitSurface& sigma,
                                            const ModelSpec& model);

    std::string momentum_name(const MultiIndex& k) const;
    /// Fixes jet.pderiv[k][direction] so the given residual slot vanishes
    /// (the slot is linear in every single derivative entry).
    void solve_slot(ExtendedJet& jet, int slot, const MultiIndex& k, int direction) const;

    ModelSpec model_;
    ImplicitSurface sigma_;
    PhaseSpaceLayout layout_;
    std::vector<std::string> labels_;
    std::vector<bool> dependent_;
};

MotionSystem build_motion_system(const ImplicitSurface& sigma, const ModelSpec& model);

/// Residuals of the dependent equations over jets that satisfy the
/// independent subset (checked as a precondition).  Keys are the equation
/// labels; independent slots are reported under "<label>" as well so the
/// certificate shows both sides.
ResidualReport redundancy_check(const MotionSystem& system,
                                const std::vector<ExtendedJet>& jets,
                                double pre_tol = 1e-9);

/// Uniform grid of one or more fields over the worldsheet, row-major.
struct FieldGrid {
    std::vector<int> shape;
    std::vector<double> data;

    explicit FieldGrid(std::vector<int> shape_in);
    double& at(const std::vector<int>& idx);
    double at(const std::vector<int>& idx) const;
    std::size_t flat_index(const std::vector<int>& idx) const;
};

/// Centered-difference residual of the derived field equations on interior
/// points: "Res" (scalar: laplacian phi - dPsi/dphi) or "Res1"/"Res2" (ED).
ResidualReport euler_lagrange_residual(const ModelSpec& model,
                                       const std::vector<FieldGrid>& fields,
                                       const std::vector<double>& spacing);

} // namespace wsham
