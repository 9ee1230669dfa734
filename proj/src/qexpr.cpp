#include "cbethe/qexpr.hpp"

#include <algorithm>
#include <sstream>

namespace cbethe {

QFactor q_factor(int color, const Rational& shift, int exp) {
    return QFactor{FactorKind::Q, color, shift, exp};
}

QFactor phi_factor(const Rational& shift, int exp) {
    return QFactor{FactorKind::Phi, 0, shift, exp};
}

QMonomial& QMonomial::mul(const QFactor& f) {
    if (f.exp == 0) return *this;
    auto it = std::lower_bound(factors.begin(), factors.end(), f, site_less);
    if (it != factors.end() && it->same_site(f)) {
        it->exp += f.exp;
        if (it->exp == 0) factors.erase(it);
    } else {
        factors.insert(it, f);
    }
    return *this;
}

QMonomial& QMonomial::mul(const QMonomial& o) {
    coef *= o.coef;
    for (const auto& f : o.factors) mul(f);
    return *this;
}

QMonomial QMonomial::shifted(const Rational& d) const {
    QMonomial r = *this;
    for (auto& f : r.factors) f.shift += d;
    return r;
}

int QMonomial::exponent_of(FactorKind kind, int color, const Rational& shift) const {
    QFactor probe{kind, color, shift, 1};
    auto it = std::lower_bound(factors.begin(), factors.end(), probe, site_less);
    if (it != factors.end() && it->same_site(probe)) return it->exp;
    return 0;
}

static std::string shift_str(const Rational& s) {
    if (s.is_zero()) return "u";
    if (s.sign() > 0) return "u+" + s.str();
    return "u" + s.str();
}

std::string QMonomial::str() const {
    std::ostringstream num, den;
    int nn = 0, nd = 0;
    for (const auto& f : factors) {
        std::string name = f.kind == FactorKind::Q ? "Q" + std::to_string(f.color) : "phi";
        std::string base = name + "(" + shift_str(f.shift) + ")";
        int e = f.exp > 0 ? f.exp : -f.exp;
        if (e != 1) base += "^" + std::to_string(e);
        auto& os = f.exp > 0 ? num : den;
        int& cnt = f.exp > 0 ? nn : nd;
        if (cnt++) os << " ";
        os << base;
    }
    std::string out = coef.get_str();
    if (nn) out += " * " + num.str();
    if (nd) out += " / (" + den.str() + ")";
    return out;
}

QMonomial operator*(QMonomial a, const QMonomial& b) { return a.mul(b); }

bool factors_less(const QMonomial& a, const QMonomial& b) {
    return std::lexicographical_compare(
        a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
        [](const QFactor& x, const QFactor& y) {
            if (!x.same_site(y)) return site_less(x, y);
            return x.exp < y.exp;
        });
}

QExpr QExpr::constant(long c) {
    if (c == 0) return zero();
    QMonomial m;
    m.coef = c;
    return of(m);
}

std::string QExpr::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += "\n";
        out += terms[i].str();
    }
    return out;
}

bool operator==(const QExpr& a, const QExpr& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].coef != b.terms[i].coef || !a.terms[i].same_factors(b.terms[i])) return false;
    return true;
}

QExpr normalize(const QExpr& e) {
    std::vector<QMonomial> ts = e.terms;
    std::stable_sort(ts.begin(), ts.end(), factors_less);
    QExpr out;
    for (auto& m : ts) {
        if (!out.terms.empty() && out.terms.back().same_factors(m)) {
            out.terms.back().coef += m.coef;
        } else {
            out.terms.push_back(std::move(m));
        }
    }
    std::erase_if(out.terms, [](const QMonomial& m) { return m.coef == 0; });
    return out;
}

QExpr add(const QExpr& a, const QExpr& b) {
    QExpr r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(r);
}

QExpr negate(const QExpr& e) { return scale(e, -1); }

QExpr subtract(const QExpr& a, const QExpr& b) { return add(a, negate(b)); }

QExpr scale(const QExpr& e, long c) {
    QExpr r = e;
    for (auto& m : r.terms) m.coef *= c;
    return normalize(r);
}

std::vector<QMonomial> multiply_raw(const QExpr& a, const QExpr& b) {
    std::vector<QMonomial> out;
    out.reserve(a.terms.size() * b.terms.size());
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) out.push_back(x * y);
    return out;
}

QExpr multiply(const QExpr& a, const QExpr& b) { return normalize(QExpr{multiply_raw(a, b)}); }

QExpr shift_expr(const QExpr& e, const Rational& d) {
    QExpr r;
    r.terms.reserve(e.terms.size());
    for (const auto& m : e.terms) r.terms.push_back(m.shifted(d));
    return r;
}

int color_degree(const QMonomial& m, int color) {
    int d = 0;
    for (const auto& f : m.factors)
        if (f.kind == FactorKind::Q && f.color == color) d += f.exp;
    return d;
}

}  // namespace cbethe
