#include "wsham/exterior.hpp"

#include <algorithm>
#include <cmath>

namespace wsham {

MultiIndex::MultiIndex(std::vector<int> axes) : axes_(std::move(axes)) {
    for (std::size_t i = 0; i + 1 < axes_.size(); ++i)
        if (axes_[i] >= axes_[i + 1])
            throw StructuralError("multi-index axes must be strictly increasing");
    if (!axes_.empty() && axes_.front() < 0)
        throw StructuralError("negative axis");
}

std::pair<MultiIndex, int> MultiIndex::sorted(std::vector<int> axes) {
    // Insertion sort, counting transpositions.
    int sign = 1;
    for (std::size_t i = 1; i < axes.size(); ++i) {
        int v = axes[i];
        std::size_t j = i;
        while (j > 0 && axes[j - 1] > v) {
            axes[j] = axes[j - 1];
            --j;
            sign = -sign;
        }
        axes[j] = v;
    }
    for (std::size_t i = 0; i + 1 < axes.size(); ++i)
        if (axes[i] == axes[i + 1]) return {MultiIndex(), 0};
    return {MultiIndex(std::move(axes)), sign};
}

bool MultiIndex::contains(int axis) const {
    return std::binary_search(axes_.begin(), axes_.end(), axis);
}

std::optional<std::pair<MultiIndex, int>> MultiIndex::wedge(const MultiIndex& other) const {
    std::vector<int> merged = axes_;
    merged.insert(merged.end(), other.axes_.begin(), other.axes_.end());
    auto [idx, sign] = sorted(std::move(merged));
    if (sign == 0) return std::nullopt;
    return std::pair{std::move(idx), sign};
}

std::string MultiIndex::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(axes_[i]);
    }
    s += '}';
    return s;
}

std::vector<MultiIndex> all_multi_indices(int dim, int grade) {
    std::vector<MultiIndex> out;
    if (grade < 0 || grade > dim) return out;
    std::vector<int> cur(grade);
    for (int i = 0; i < grade; ++i) cur[i] = i;
    for (;;) {
        out.push_back(MultiIndex(cur));
        int i = grade - 1;
        while (i >= 0 && cur[i] == dim - grade + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < grade; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Polyvector wedge(const Polyvector& a, const Polyvector& b) {
    if (a.dim() != b.dim())
        throw StructuralError("wedge of polyvectors over different spaces");
    Polyvector out(a.dim(), a.grade() + b.grade());
    for (const auto& [ia, ca] : a.coeffs()) {
        for (const auto& [ib, cb] : b.coeffs()) {
            if (auto merged = ia.wedge(ib))
                out.add(merged->first, merged->second * ca * cb);
        }
    }
    return out;
}

double pairing(const PolyForm& omega, const Polyvector& v) {
    if (omega.dim() != v.dim() || omega.grade() != v.grade())
        throw StructuralError("pairing shape mismatch");
    // Iterate the sparser operand.
    double s = 0.0;
    if (omega.coeffs().size() <= v.coeffs().size()) {
        for (const auto& [idx, c] : omega.coeffs()) s += c * v.coeff(idx);
    } else {
        for (const auto& [idx, c] : v.coeffs()) s += c * omega.coeff(idx);
    }
    return s;
}

PolyForm interior(const Polyvector& xi, const PolyForm& omega) {
    if (xi.dim() != omega.dim())
        throw StructuralError("interior product over different spaces");
    if (omega.grade() != xi.grade() + 1)
        throw StructuralError("interior product needs form grade = polyvector grade + 1");
    PolyForm out(xi.dim(), 1);
    for (const auto& [ix, cx] : xi.coeffs()) {
        for (int j = 0; j < xi.dim(); ++j) {
            if (ix.contains(j)) continue;
            auto merged = ix.wedge(MultiIndex({j}));
            out.add(MultiIndex({j}), merged->second * cx * omega.coeff(merged->first));
        }
    }
    return out;
}

Polyvector contract(const Polyvector& v, const MultiIndex& j_form) {
    if (j_form.grade() != v.grade() - 1)
        throw StructuralError("contraction needs form grade = polyvector grade - 1");
    Polyvector out(v.dim(), 1);
    for (int j = 0; j < v.dim(); ++j) {
        if (j_form.contains(j)) continue;
        auto merged = j_form.wedge(MultiIndex({j}));
        out.add(MultiIndex({j}), merged->second * v.coeff(merged->first));
    }
    return out;
}

std::vector<double> plucker_residuals(const Polyvector& v) {
    const int k = v.grade();
    const int n = v.dim();
    if (k < 1 || k > n)
        throw StructuralError("grade out of range for decomposability test");
    if (k == 1 || k == n || k == n - 1) return {};

    std::vector<double> out;
    if (k == 2) {
        Polyvector sq = wedge(v, v);
        for (const auto& target : all_multi_indices(n, 4))
            out.push_back(sq.coeff(target));
        return out;
    }
    const auto targets = all_multi_indices(n, k + 1);
    for (const auto& j_form : all_multi_indices(n, k - 1)) {
        Polyvector w = wedge(contract(v, j_form), v);
        for (const auto& target : targets) out.push_back(w.coeff(target));
    }
    return out;
}

bool is_decomposable(const Polyvector& v, double tol) {
    if (tol <= 0.0) throw ConfigError("decomposability tolerance must be positive");
    const double scale = v.max_abs_coeff();
    double worst = 0.0;
    for (double r : plucker_residuals(v)) worst = std::max(worst, std::abs(r));
    return worst <= tol * scale * scale;
}

Polyvector graph_tangent(const JetSample& jet) {
    const int dim = jet.targetspace_dim();
    Polyvector result(dim, 0);
    result.set(MultiIndex(), 1.0);
    for (int i = 0; i < jet.n_worldsheet; ++i) {
        Polyvector leg(dim, 1);
        leg.set(MultiIndex({jet.worldsheet_axis(i)}), 1.0);
        for (int a = 0; a < jet.n_fields; ++a)
            leg.add(MultiIndex({jet.field_axis(a)}), jet.deriv(a, i));
        result = wedge(result, leg);
    }
    return result;
}

} // namespace wsham
