#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsham/exterior.hpp"

namespace wsham {

/// A polynomial variable with its semantic binding.  The binding is what
/// lets motion code translate surface gradients into phase-space directions.
struct Variable {
    enum class Kind {
        Field,      // phi^a          (index = a)
        Worldsheet, // x^i            (index = i)
        Momentum,   // P_K            (momentum = K over targetspace axes)
        GraphValue, // the homogeneous-Lagrangian coordinate
        PolyCoord,  // X_K, a polyvector coordinate (momentum = K)
        Pi,         // coordinate dual to the graph value
    };

    std::string name;
    Kind kind = Kind::Field;
    int index = -1;
    MultiIndex momentum;

    friend bool operator==(const Variable&, const Variable&) = default;
};

Variable field_var(std::string name, int a);
Variable worldsheet_var(std::string name, int i);
Variable momentum_var(std::string name, MultiIndex k);
Variable graph_value_var(std::string name);
Variable polycoord_var(std::string name, MultiIndex k);
Variable pi_var(std::string name);

/// Sparse real polynomial over a fixed variable list.  Terms are stored by
/// exponent vector; zero coefficients are pruned, which keeps the table
/// canonical.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Variable> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<Variable> vars, double value);
    /// The monomial var^1.
    static Polynomial var(std::vector<Variable> vars, int var_index);

    const std::vector<Variable>& variables() const { return vars_; }
    int n_vars() const { return static_cast<int>(vars_.size()); }
    int var_index(const std::string& name) const; // -1 when absent

    const std::map<std::vector<int>, double>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    void add_term(std::vector<int> exponents, double coeff);
    double coeff(const std::vector<int>& exponents) const;
    double max_abs_coeff() const;

    double eval(std::span<const double> values) const;
    /// Sum of |coeff * monomial|: the natural scale for relative residuals
    /// of eval() near a zero of the polynomial.
    double eval_abs(std::span<const double> values) const;

    Polynomial derivative(int var) const;
    /// Fixes one variable to a value and drops it from the variable list.
    Polynomial eliminated(int var, double value) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(double s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(double s, Polynomial p) { p *= s; return p; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Canonical coefficient table: terms as {"monomial": ["name:power",...],
    /// "coeff": v}, sorted lexicographically by monomial key.
    nlohmann::ordered_json to_json() const;
    static Polynomial from_json(const nlohmann::json& j);

private:
    std::vector<Variable> vars_;
    std::map<std::vector<int>, double> terms_;
};

/// Largest |coefficient difference| between two polynomials, aligning terms
/// by variable name (variable order may differ).  Throws StructuralError if
/// either has a variable the other lacks with a nonzero exponent in some
/// term.
double max_coeff_difference(const Polynomial& a, const Polynomial& b);

/// Rewrites p over a larger variable list, matching variables by name.
Polynomial lifted(const Polynomial& p, std::vector<Variable> target_vars);

} // namespace wsham
