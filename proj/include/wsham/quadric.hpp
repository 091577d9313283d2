#pragma once

#include <span>
#include <vector>

#include "wsham/linalg.hpp"
#include "wsham/polynomial.hpp"

namespace wsham {

/// Projective quadric X^T G X = 0 over the homogeneous coordinates
/// [graph value : polyvector coordinates] (primal side) or
/// [Pi : momenta] (dual side).  coords[0] is always the projective weight
/// slot; on the graph side coords[1] is the pure-worldsheet volume
/// coordinate and its dual is the distinguished momentum of the chart
/// normalization.
struct QuadricVariety {
    Mat G;
    std::vector<Variable> coords;
    bool dual = false;
    int n_fields = 0;
    int n_worldsheet = 0;

    int size() const { return G.size(); }

    double quadratic_form(std::span<const double> x) const {
        double s = 0.0;
        for (int i = 0; i < G.size(); ++i)
            for (int j = 0; j < G.size(); ++j) s += x[i] * G(i, j) * x[j];
        return s;
    }

    bool nondegenerate(double rel_tol = 1e-10) const {
        return symmetric_rank(G, rel_tol) == G.size();
    }
};

/// Variable dual to a homogeneous-coordinate variable: the graph value maps
/// to Pi, a polyvector coordinate X_K to the momentum P_K (name X... -> P...).
Variable dual_variable(const Variable& v);

/// Surface eta = 0 in the phase-space fiber: a polynomial in momentum
/// coordinates and, where the potential contributes them, field and
/// worldsheet coordinates.
struct ImplicitSurface {
    int n_fields = 0;
    int n_worldsheet = 0;
    Polynomial eta;

    int degree() const { return eta.degree(); }

    nlohmann::ordered_json to_json() const;
    static ImplicitSurface from_json(const nlohmann::json& j);
};

} // namespace wsham
