#include "lrw/poly.hpp"

#include <algorithm>
#include <sstream>

namespace lrw {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionError("Poly::variable: index out of range");
    Monomial m(nvars, 0);
    m[i] = 1;
    Poly p(nvars);
    p.add_term(m, 1);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                               [](unsigned e) { return e == 0; }));
}

Rational Poly::constant_term() const {
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.size() != nvars_) throw DimensionError("Poly::add_term: exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check(const Poly& o) const {
    if (o.nvars_ != nvars_) throw DimensionError("polynomials over different variable counts");
}

Poly& Poly::operator+=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars_) throw DimensionError("Poly::derivative: variable out of range");
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        --dm[var];
        out.add_term(dm, c * Rational(static_cast<long>(m[var])));
    }
    return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw DimensionError("Poly::evaluate: point dimension mismatch");
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
        sum += term;
    }
    return sum;
}

std::string Poly::str(const VarList& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest-degree-last reads naturally for forms like "dz + x*dy".
    for (const auto& [m, c] : terms_) {
        const Rational mag = c.sign() < 0 ? -c : c;
        if (c.sign() < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            factors.push_back(m[i] == 1 ? vars.at(i) : vars.at(i) + "^" + std::to_string(m[i]));
        }
        if (factors.empty() || mag != Rational(1)) factors.insert(factors.begin(), mag.str());
        for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

PolyForm PolyForm::scalar(VarList vars, const Poly& f) {
    PolyForm out(std::move(vars), 0);
    out.add({}, f);
    return out;
}

PolyForm PolyForm::one_form(VarList vars, const std::vector<Poly>& coeffs) {
    if (coeffs.size() != vars.size()) throw DimensionError("one_form: one coefficient per variable required");
    PolyForm out(std::move(vars), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.add({i}, coeffs[i]);
    return out;
}

PolyForm PolyForm::covector(VarList vars, std::span<const Rational> coeffs) {
    const std::size_t n = vars.size();
    if (coeffs.size() != n) throw DimensionError("covector: one coefficient per variable required");
    PolyForm out(std::move(vars), 1);
    for (std::size_t i = 0; i < n; ++i) out.add({i}, Poly::constant(n, coeffs[i]));
    return out;
}

PolyForm PolyForm::basis(VarList vars, const Indices& indices) {
    const std::size_t n = vars.size();
    PolyForm out(std::move(vars), indices.size());
    out.add(indices, Poly::constant(n, 1));
    return out;
}

Poly PolyForm::coefficient(const Indices& sorted) const {
    auto it = terms_.find(sorted);
    return it == terms_.end() ? Poly(nvars()) : it->second;
}

bool PolyForm::is_constant() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

void PolyForm::add(Indices indices, const Poly& c) {
    if (indices.size() != degree_) throw DimensionError("PolyForm::add: index tuple does not match degree");
    if (c.nvars() != nvars()) throw DimensionError("PolyForm::add: coefficient over wrong variables");
    for (auto i : indices)
        if (i >= nvars()) throw DimensionError("PolyForm::add: index out of range");
    if (c.is_zero()) return;
    bool negate = false;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = 0; j + 1 < indices.size() - i; ++j) {
            if (indices[j] == indices[j + 1]) return;
            if (indices[j] > indices[j + 1]) {
                std::swap(indices[j], indices[j + 1]);
                negate = !negate;
            }
        }
    }
    for (std::size_t i = 0; i + 1 < indices.size(); ++i)
        if (indices[i] == indices[i + 1]) return;
    auto [it, inserted] = terms_.try_emplace(indices, nvars());
    if (negate) it->second -= c;
    else it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void PolyForm::check(const PolyForm& o) const {
    if (o.vars_ != vars_) throw DimensionError("forms over different variable lists");
    if (o.degree_ != degree_) throw DimensionError("forms of different degree");
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

PolyForm operator*(const Poly& f, const PolyForm& a) {
    PolyForm out(a.vars_, a.degree_);
    for (const auto& [k, c] : a.terms_) out.add(k, f * c);
    return out;
}

PolyForm operator*(const Rational& c, const PolyForm& a) {
    return Poly::constant(a.nvars(), c) * a;
}

std::string PolyForm::str() const {
    if (terms_.empty()) return "0";
    if (degree_ == 0) return terms_.begin()->second.str(vars_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        std::string basis;
        for (std::size_t i = 0; i < idx.size(); ++i) basis += (i ? "^d" : "d") + vars_[idx[i]];
        std::string coef = c.str(vars_);
        bool negative = false;
        if (c.terms().size() == 1) {
            negative = c.terms().begin()->second.sign() < 0;
            if (negative) coef = (-c).str(vars_);
            if (coef == "1") coef.clear();
        } else {
            coef = "(" + coef + ")";
        }
        if (negative) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        if (!coef.empty()) os << coef << '*';
        os << basis;
        first = false;
    }
    return os.str();
}

PolyVectorField PolyVectorField::coordinate(const VarList& vars, std::size_t i) {
    PolyVectorField x{vars, std::vector<Poly>(vars.size(), Poly(vars.size()))};
    x.components.at(i) = Poly::constant(vars.size(), 1);
    return x;
}

PolyVectorField PolyVectorField::constant(const VarList& vars, std::span<const Rational> v) {
    if (v.size() != vars.size()) throw DimensionError("PolyVectorField::constant: dimension mismatch");
    PolyVectorField x{vars, {}};
    for (const auto& c : v) x.components.push_back(Poly::constant(vars.size(), c));
    return x;
}

Poly PolyBivector::rho(std::size_t i, std::size_t j) const {
    if (i == j) return Poly(vars.size());
    const bool swapped = i > j;
    auto it = entries.find(swapped ? std::pair{j, i} : std::pair{i, j});
    if (it == entries.end()) return Poly(vars.size());
    return swapped ? -it->second : it->second;
}

void PolyBivector::set(std::size_t i, std::size_t j, const Poly& value) {
    if (i == j) throw std::invalid_argument("PolyBivector::set: diagonal entry");
    if (i > j) entries[{j, i}] = -value;
    else entries[{i, j}] = value;
}

// ---------------------------------------------------------------------------

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.vars() != b.vars()) throw DimensionError("wedge: forms over different variable lists");
    PolyForm out(a.vars(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            PolyForm::Indices idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            out.add(std::move(idx), ca * cb);
        }
    }
    return out;
}

PolyForm ext_d(const PolyForm& a) {
    PolyForm out(a.vars(), a.degree() + 1);
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t j = 0; j < a.nvars(); ++j) {
            Poly dc = c.derivative(j);
            if (dc.is_zero()) continue;
            PolyForm::Indices k{j};
            k.insert(k.end(), idx.begin(), idx.end());
            out.add(std::move(k), dc);
        }
    }
    return out;
}

PolyForm interior(const PolyVectorField& x, const PolyForm& a) {
    if (a.degree() == 0) throw PreconditionError("interior: cannot contract a 0-form");
    if (x.vars != a.vars() || x.components.size() != a.nvars()) {
        throw DimensionError("interior: vector field and form over different variables");
    }
    PolyForm out(a.vars(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t r = 0; r < idx.size(); ++r) {
            const Poly& comp = x.components[idx[r]];
            if (comp.is_zero()) continue;
            PolyForm::Indices rest = idx;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(r));
            Poly term = comp * c;
            if (r % 2) term = -term;
            out.add(std::move(rest), term);
        }
    }
    return out;
}

PolyForm eval_at(const PolyForm& a, std::span<const Rational> point) {
    if (point.size() != a.nvars()) throw DimensionError("eval_at: point dimension mismatch");
    PolyForm out(a.vars(), a.degree());
    for (const auto& [idx, c] : a.terms()) out.add(idx, Poly::constant(a.nvars(), c.evaluate(point)));
    return out;
}

RatVector covector_of(const PolyForm& a) {
    if (a.degree() != 1) throw DimensionError("covector_of: expected a 1-form");
    if (!a.is_constant()) throw PreconditionError("covector_of: form has non-constant coefficients");
    RatVector v(a.nvars());
    for (const auto& [idx, c] : a.terms()) v[idx[0]] = c.constant_term();
    return v;
}

RatMatrix bilinear_of(const PolyForm& a) {
    if (a.degree() != 2) throw DimensionError("bilinear_of: expected a 2-form");
    if (!a.is_constant()) throw PreconditionError("bilinear_of: form has non-constant coefficients");
    RatMatrix b(a.nvars(), a.nvars());
    for (const auto& [idx, c] : a.terms()) {
        b(idx[0], idx[1]) = c.constant_term();
        b(idx[1], idx[0]) = -c.constant_term();
    }
    return b;
}

}  // namespace lrw
