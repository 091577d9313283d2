#include "wsham/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace wsham {

Variable field_var(std::string name, int a) {
    return Variable{std::move(name), Variable::Kind::Field, a, {}};
}
Variable worldsheet_var(std::string name, int i) {
    return Variable{std::move(name), Variable::Kind::Worldsheet, i, {}};
}
Variable momentum_var(std::string name, MultiIndex k) {
    return Variable{std::move(name), Variable::Kind::Momentum, -1, std::move(k)};
}
Variable graph_value_var(std::string name) {
    return Variable{std::move(name), Variable::Kind::GraphValue, -1, {}};
}
Variable polycoord_var(std::string name, MultiIndex k) {
    return Variable{std::move(name), Variable::Kind::PolyCoord, -1, std::move(k)};
}
Variable pi_var(std::string name) {
    return Variable{std::move(name), Variable::Kind::Pi, -1, {}};
}

Polynomial Polynomial::constant(std::vector<Variable> vars, double value) {
    Polynomial p(std::move(vars));
    p.add_term(std::vector<int>(p.vars_.size(), 0), value);
    return p;
}

Polynomial Polynomial::var(std::vector<Variable> vars, int var_index) {
    Polynomial p(std::move(vars));
    std::vector<int> e(p.vars_.size(), 0);
    e.at(var_index) = 1;
    p.add_term(std::move(e), 1.0);
    return p;
}

int Polynomial::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    return -1;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int p : e) t += p;
        d = std::max(d, t);
    }
    return d;
}

void Polynomial::add_term(std::vector<int> exponents, double coeff) {
    if (exponents.size() != vars_.size())
        throw StructuralError("exponent vector length mismatch");
    for (int e : exponents)
        if (e < 0) throw StructuralError("negative exponent");
    if (coeff == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exponents), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0.0) terms_.erase(it);
    }
}

double Polynomial::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? 0.0 : it->second;
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

namespace {
double int_pow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}
} // namespace

double Polynomial::eval(std::span<const double> values) const {
    if (values.size() != vars_.size())
        throw StructuralError("evaluation point length mismatch");
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= int_pow(values[i], e[i]);
        s += m;
    }
    return s;
}

double Polynomial::eval_abs(std::span<const double> values) const {
    if (values.size() != vars_.size())
        throw StructuralError("evaluation point length mismatch");
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = std::abs(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m *= int_pow(std::abs(values[i]), e[i]);
        s += m;
    }
    return s;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial out(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> d = e;
        d[var] -= 1;
        out.add_term(std::move(d), c * e[var]);
    }
    return out;
}

Polynomial Polynomial::eliminated(int var, double value) const {
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (static_cast<int>(i) != var) vars.push_back(vars_[i]);
    Polynomial out(std::move(vars));
    for (const auto& [e, c] : terms_) {
        std::vector<int> d;
        d.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var) d.push_back(e[i]);
        out.add_term(std::move(d), c * int_pow(value, e[var]));
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.vars_ != vars_) throw StructuralError("polynomial variable mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.vars_ != vars_) throw StructuralError("polynomial variable mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) throw StructuralError("polynomial variable mismatch");
    Polynomial out(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

namespace {

std::string kind_string(Variable::Kind k) {
    switch (k) {
        case Variable::Kind::Field: return "field";
        case Variable::Kind::Worldsheet: return "worldsheet";
        case Variable::Kind::Momentum: return "momentum";
        case Variable::Kind::GraphValue: return "graph-value";
        case Variable::Kind::PolyCoord: return "polyvector-coordinate";
        case Variable::Kind::Pi: return "pi";
    }
    return "?";
}

Variable::Kind kind_from_string(const std::string& s) {
    if (s == "field") return Variable::Kind::Field;
    if (s == "worldsheet") return Variable::Kind::Worldsheet;
    if (s == "momentum") return Variable::Kind::Momentum;
    if (s == "graph-value") return Variable::Kind::GraphValue;
    if (s == "polyvector-coordinate") return Variable::Kind::PolyCoord;
    if (s == "pi") return Variable::Kind::Pi;
    throw StructuralError("unknown variable kind: " + s);
}

} // namespace

nlohmann::ordered_json Polynomial::to_json() const {
    nlohmann::ordered_json j;
    j["variables"] = nlohmann::ordered_json::array();
    for (const auto& v : vars_) {
        nlohmann::ordered_json jv;
        jv["name"] = v.name;
        jv["kind"] = kind_string(v.kind);
        if (v.kind == Variable::Kind::Field || v.kind == Variable::Kind::Worldsheet)
            jv["index"] = v.index;
        if (v.kind == Variable::Kind::Momentum || v.kind == Variable::Kind::PolyCoord)
            jv["axes"] = v.momentum.axes();
        j["variables"].push_back(jv);
    }

    // Render each term, then sort by the monomial key itself.
    std::vector<std::pair<std::vector<std::string>, double>> rendered;
    for (const auto& [e, c] : terms_) {
        std::vector<std::string> mono;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) mono.push_back(vars_[i].name + ":" + std::to_string(e[i]));
        rendered.emplace_back(std::move(mono), c);
    }
    std::sort(rendered.begin(), rendered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [mono, c] : rendered) {
        nlohmann::ordered_json jt;
        jt["monomial"] = mono;
        jt["coeff"] = c;
        j["terms"].push_back(jt);
    }
    return j;
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
    std::vector<Variable> vars;
    for (const auto& jv : j.at("variables")) {
        Variable v;
        v.name = jv.at("name").get<std::string>();
        v.kind = kind_from_string(jv.at("kind").get<std::string>());
        if (jv.contains("index")) v.index = jv.at("index").get<int>();
        if (jv.contains("axes"))
            v.momentum = MultiIndex(jv.at("axes").get<std::vector<int>>());
        vars.push_back(std::move(v));
    }
    Polynomial p(std::move(vars));
    for (const auto& jt : j.at("terms")) {
        std::vector<int> e(p.vars_.size(), 0);
        for (const auto& part : jt.at("monomial")) {
            const std::string s = part.get<std::string>();
            const auto colon = s.rfind(':');
            if (colon == std::string::npos)
                throw StructuralError("malformed monomial entry: " + s);
            const int idx = p.var_index(s.substr(0, colon));
            if (idx < 0) throw StructuralError("unknown variable in monomial: " + s);
            e[idx] = std::stoi(s.substr(colon + 1));
        }
        p.add_term(std::move(e), jt.at("coeff").get<double>());
    }
    return p;
}

Polynomial lifted(const Polynomial& p, std::vector<Variable> target_vars) {
    Polynomial out(std::move(target_vars));
    std::vector<int> remap(p.n_vars());
    for (int i = 0; i < p.n_vars(); ++i) {
        remap[i] = out.var_index(p.variables()[i].name);
        if (remap[i] < 0)
            throw StructuralError("lift target lacks variable: " + p.variables()[i].name);
    }
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> ne(out.n_vars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[remap[i]] = e[i];
        out.add_term(std::move(ne), c);
    }
    return out;
}

double max_coeff_difference(const Polynomial& a, const Polynomial& b) {
    // Translate b's exponent vectors into a's variable order.
    std::vector<int> b_to_a(b.n_vars());
    for (int i = 0; i < b.n_vars(); ++i) {
        b_to_a[i] = a.var_index(b.variables()[i].name);
    }
    std::map<std::vector<int>, double> diff = a.terms();
    for (const auto& [eb, cb] : b.terms()) {
        std::vector<int> ea(a.n_vars(), 0);
        for (std::size_t i = 0; i < eb.size(); ++i) {
            if (eb[i] == 0) continue;
            if (b_to_a[i] < 0)
                throw StructuralError("variable missing in comparison: " +
                                      b.variables()[i].name);
            ea[b_to_a[i]] = eb[i];
        }
        diff[ea] -= cb;
    }
    double m = 0.0;
    for (const auto& [e, c] : diff) m = std::max(m, std::abs(c));
    return m;
}

} // namespace wsham
