#pragma once

#include <vector>

#include "wsham/lagrangian.hpp"
#include "wsham/quadric.hpp"

namespace wsham {

/// Covector (Pi, P) on the dual side, projectively normalized to Pi = -1
/// whenever the Pi coordinate is nonzero.
struct MomentumPoint {
    double pi = -1.0;
    PolyForm momenta{0, 0};
    bool at_infinity = false; // Pi coordinate vanished; momenta left unscaled
    bool multivalued = false; // constraint multipliers give a whole family
    std::vector<double> multipliers; // (alpha, beta...) actually used

    /// <P, v> over the momentum coordinates (the Pi*Lambda slot excluded).
    double pair_with(const Polyvector& v) const { return pairing(momenta, v); }
};

/// Dual quadric: matrix proportional to G^{-1}, rescaled so the largest
/// entry is +-1.  Degenerate input raises DegeneracyError carrying the
/// numerical rank.
QuadricVariety dual_quadric(const QuadricVariety& q, double rank_rel_tol = 1e-10);

/// Affine chart Pi = -1 of a dual quadric, sign-normalized so the
/// distinguished momentum (dual of the pure-worldsheet coordinate, slot 1)
/// has coefficient +1.
ImplicitSurface affine_chart(const QuadricVariety& q_dual);

/// The pointwise momentum map: P_K = dLambda/dX_K at xi with Pi = -1.
/// Satisfies <P, xi> = Lambda(xi) exactly (degree-1 homogeneity) and the
/// stationarity of eta -> <P(eta), xi> at eta = xi.
MomentumPoint legendre_map(const HomogeneousLagrangian& lambda, const Polyvector& xi,
                           const BasePoint& at);

/// One representative of the dual-variety family over a constrained graph
/// point: P = multipliers[0] * dF|_X + sum_k multipliers[k+1] * d(plucker_k)|_X,
/// normalized to Pi = -1 when possible.  X holds values for F's variables
/// (graph value first by convention of the caller's polynomial).
MomentumPoint constrained_dual_sample(const Polynomial& f,
                                      const std::vector<Polynomial>& plucker,
                                      std::span<const double> x,
                                      std::span<const double> multipliers,
                                      double membership_tol = 1e-10);

/// The dual variety as a parametrized family: a graph relation together
/// with its constraint polynomials, sampled by (point on the graph variety,
/// multipliers).  Generated covectors are linear combinations of the
/// gradient rows by construction, which is the rank condition of the
/// parametrization.
class DualParametrization {
public:
    DualParametrization(Polynomial graph_relation, std::vector<Polynomial> constraints);

    const Polynomial& graph_relation() const { return graph_; }
    const std::vector<Polynomial>& constraints() const { return constraints_; }
    int multiplier_count() const { return static_cast<int>(constraints_.size()) + 1; }

    MomentumPoint sample(std::span<const double> x,
                         std::span<const double> multipliers,
                         double membership_tol = 1e-10) const {
        return constrained_dual_sample(graph_, constraints_, x, multipliers,
                                       membership_tol);
    }

    /// How far a covector is from the span of the gradient rows at x
    /// (largest absolute component left after projecting out the rows,
    /// relative to the covector's own largest component).  Zero means the
    /// rank condition holds.
    double rank_condition_residual(std::span<const double> x,
                                   const MomentumPoint& p) const;

private:
    Polynomial graph_;
    std::vector<Polynomial> constraints_;
};

/// Frobenius distance between Q and its double dual after canonical scale
/// and sign normalization; machine-zero for any nondegenerate quadric.
double double_dual_check(const QuadricVariety& q);

struct RankReport {
    int size = 0;
    int rank = 0;
    bool defected = false; // rank < size: the dual drops dimension
    std::vector<double> eigenvalues;
};

/// Numerical rank of the quadric via symmetric eigenvalues; no error on
/// degeneracy, only the report.
RankReport detect_degeneracy(const QuadricVariety& q, double rel_tol = 1e-10);

} // namespace wsham
