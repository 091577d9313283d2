#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wsham/errors.hpp"

namespace wsham {

/// Strictly increasing list of axis identifiers; indexes one basis element
/// of an exterior power.
class MultiIndex {
public:
    MultiIndex() = default;

    /// Axes must already be strictly increasing.
    explicit MultiIndex(std::vector<int> axes);

    /// Sorts an arbitrary axis list.  Returns the sorted index and the sign
    /// of the permutation, or sign 0 when an axis repeats.
    static std::pair<MultiIndex, int> sorted(std::vector<int> axes);

    int grade() const { return static_cast<int>(axes_.size()); }
    const std::vector<int>& axes() const { return axes_; }
    bool contains(int axis) const;

    /// Concatenation with sign, or nullopt when the result vanishes
    /// (shared axis).
    std::optional<std::pair<MultiIndex, int>> wedge(const MultiIndex& other) const;

    std::string to_string() const;

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<int> axes_;
};

/// Enumerates all grade-k multi-indices over axes 0..dim-1 in lexicographic
/// order.
std::vector<MultiIndex> all_multi_indices(int dim, int grade);

namespace detail {

/// Shared sparse storage for polyvectors and polyforms.  Absent entries are
/// zero; stored entries may be zero only transiently (prune() restores the
/// invariant).
template <typename Derived>
class GradedBase {
public:
    GradedBase(int dim, int grade) : dim_(dim), grade_(grade) {
        if (dim < 0 || grade < 0)
            throw StructuralError("negative dimension or grade");
    }

    int dim() const { return dim_; }
    int grade() const { return grade_; }
    bool is_zero() const { return coeff_.empty(); }

    double coeff(const MultiIndex& idx) const {
        auto it = coeff_.find(idx);
        return it == coeff_.end() ? 0.0 : it->second;
    }

    void set(const MultiIndex& idx, double value) {
        check_index(idx);
        if (value == 0.0)
            coeff_.erase(idx);
        else
            coeff_[idx] = value;
    }

    void add(const MultiIndex& idx, double value) {
        check_index(idx);
        if (value == 0.0) return;
        auto [it, inserted] = coeff_.try_emplace(idx, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0.0) coeff_.erase(it);
        }
    }

    const std::map<MultiIndex, double>& coeffs() const { return coeff_; }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [idx, v] : coeff_) m = std::max(m, std::abs(v));
        return m;
    }

    Derived& operator*=(double s) {
        if (s == 0.0) {
            coeff_.clear();
        } else {
            for (auto& [idx, v] : coeff_) v *= s;
        }
        return static_cast<Derived&>(*this);
    }

    Derived& operator+=(const Derived& other) {
        if (other.dim_ != dim_ || other.grade_ != grade_)
            throw StructuralError("shape mismatch in addition");
        for (const auto& [idx, v] : other.coeff_) add(idx, v);
        return static_cast<Derived&>(*this);
    }

    friend Derived operator*(double s, const Derived& p) {
        Derived r = p;
        r *= s;
        return r;
    }

    friend Derived operator+(Derived a, const Derived& b) {
        a += b;
        return a;
    }

    friend Derived operator-(Derived a, const Derived& b) {
        Derived nb = b;
        nb *= -1.0;
        a += nb;
        return a;
    }

    friend bool operator==(const GradedBase&, const GradedBase&) = default;

private:
    void check_index(const MultiIndex& idx) const {
        if (idx.grade() != grade_)
            throw StructuralError("multi-index grade mismatch");
        if (!idx.axes().empty() && idx.axes().back() >= dim_)
            throw StructuralError("axis out of range");
    }

    int dim_;
    int grade_;
    std::map<MultiIndex, double> coeff_;
};

} // namespace detail

/// Element of an exterior power of the tangent space (contravariant).
class Polyvector : public detail::GradedBase<Polyvector> {
public:
    using GradedBase::GradedBase;

    static Polyvector basis(int dim, const MultiIndex& idx) {
        Polyvector p(dim, idx.grade());
        p.set(idx, 1.0);
        return p;
    }

    static Polyvector basis_vector(int dim, int axis) {
        return basis(dim, MultiIndex({axis}));
    }
};

/// Element of an exterior power of the cotangent space (covariant).  Basis
/// forms are dual to the basis polyvectors of the same multi-index.
class PolyForm : public detail::GradedBase<PolyForm> {
public:
    using GradedBase::GradedBase;

    static PolyForm basis(int dim, const MultiIndex& idx) {
        PolyForm f(dim, idx.grade());
        f.set(idx, 1.0);
        return f;
    }
};

/// Exterior product.  Grades add; if the sum exceeds the dimension the
/// result is the zero polyvector of that grade (every term vanishes), which
/// is returned rather than treated as an error.
Polyvector wedge(const Polyvector& a, const Polyvector& b);

/// Pairing of a k-form with a k-polyvector: sum over multi-indices of the
/// products of matching coefficients.
double pairing(const PolyForm& omega, const Polyvector& v);

/// Interior product with the extra argument fed last:
///   (i_xi omega)(eta) := omega(xi ^ eta)
/// for a grade-k polyvector xi and a grade-(k+1) form omega; returns a
/// 1-form.
PolyForm interior(const Polyvector& xi, const PolyForm& omega);

/// Contraction of a grade-k polyvector with the basis (k-1)-form indexed by
/// J, same trailing-slot convention: (i_J v)_j = sign * v_{sort(J,j)}.
Polyvector contract(const Polyvector& v, const MultiIndex& j_form);

/// Values of the quadratic decomposability expressions for v.  Empty when
/// every polyvector of this grade is decomposable (grade 1, dim-1, dim).
/// Grade 2 uses the coefficients of v ^ v; other grades the contraction
/// criterion (i_J v) ^ v = 0 over all basis (k-1)-forms J.
std::vector<double> plucker_residuals(const Polyvector& v);

/// Relative decomposability test: max |residual| <= tol * (max |coeff|)^2.
/// The residuals are quadratic in v, hence the squared scale.
bool is_decomposable(const Polyvector& v, double tol);

/// First derivatives of the fields over the worldsheet at one point.
struct JetSample {
    int n_fields = 0;
    int n_worldsheet = 0;
    std::vector<double> d; // d[a * n_worldsheet + i] = dphi^a/dx^i

    JetSample() = default;
    JetSample(int n_fields, int n_worldsheet)
        : n_fields(n_fields),
          n_worldsheet(n_worldsheet),
          d(static_cast<std::size_t>(n_fields) * n_worldsheet, 0.0) {}

    double deriv(int a, int i) const { return d[static_cast<std::size_t>(a) * n_worldsheet + i]; }
    double& deriv(int a, int i) { return d[static_cast<std::size_t>(a) * n_worldsheet + i]; }

    /// Targetspace dimension; field axes come first, then worldsheet axes.
    int targetspace_dim() const { return n_fields + n_worldsheet; }
    int field_axis(int a) const { return a; }
    int worldsheet_axis(int i) const { return n_fields + i; }
};

/// Tangent polyvector to the graph of the field map:
///   wedge over worldsheet directions of (d/dx^i + sum_a (dphi^a/dx^i) d/dphi^a)
/// with unit normalization.  Field axes precede worldsheet axes in every
/// multi-index.
Polyvector graph_tangent(const JetSample& jet);

} // namespace wsham
