#include "cbethe/rootdata.hpp"

#include "cbethe/errors.hpp"

#include <stdexcept>

namespace cbethe {

AlgebraId AlgebraId::c(int s) {
    if (s < 2) throw UsageError("C(s) requires s >= 2");
    return {Family::C, s};
}

AlgebraId AlgebraId::parse(const std::string& text) {
    if (text == "sl12" || text == "sl(1|2)") return sl12();
    if (text.size() > 2 && (text[0] == 'C' || text[0] == 'c') && text[1] == ':') {
        std::string num = text.substr(2);
        for (char ch : num)
            if (ch < '0' || ch > '9') throw UsageError("bad algebra '" + text + "', expected C:s or sl12");
        if (num.size() > 3) throw UsageError("rank too large in '" + text + "'");
        return c(std::stoi(num));
    }
    throw UsageError("bad algebra '" + text + "', expected C:s or sl12");
}

std::string AlgebraId::str() const {
    return family == Family::C ? "C:" + std::to_string(s) : "sl12";
}

BasisVector& BasisVector::operator+=(const BasisVector& o) {
    if (o.c.size() != c.size()) throw std::invalid_argument("basis dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

BasisVector& BasisVector::operator-=(const BasisVector& o) {
    if (o.c.size() != c.size()) throw std::invalid_argument("basis dimension mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

BasisVector BasisVector::operator-() const {
    BasisVector r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

BasisVector operator*(const Rational& k, BasisVector v) {
    for (auto& x : v.c) x *= k;
    return v;
}

bool BasisVector::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

std::string BasisVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + c[i].str();
    return out + ")";
}

BasisVector eps(const AlgebraId& g) {
    BasisVector v(g.basis_size());
    v.c[0] = 1;
    return v;
}

BasisVector delta(const AlgebraId& g, int i) {
    if (i < 1 || i >= g.basis_size()) throw std::out_of_range("delta index");
    BasisVector v(g.basis_size());
    v.c[i] = 1;
    return v;
}

Rational inner(const AlgebraId& g, const BasisVector& x, const BasisVector& y) {
    std::size_t n = g.basis_size();
    if (x.c.size() != n || y.c.size() != n) throw std::invalid_argument("basis dimension mismatch");
    // C(s): (eps|eps) = 1/2, (delta_i|delta_j) = -delta_ij/2. sl(1|2): 1 and -delta_ij.
    Rational e = g.family == Family::C ? Rational(1, 2) : Rational(1);
    Rational r = e * x.c[0] * y.c[0];
    for (std::size_t i = 1; i < n; ++i) r -= e * x.c[i] * y.c[i];
    return r;
}

BasisVector simple_root(const AlgebraId& g, int a) {
    if (a < 1 || a > g.rank()) throw std::out_of_range("simple root index");
    if (g.family == Family::SL12) return a == 1 ? eps(g) - delta(g, 1) : delta(g, 1) - delta(g, 2);
    if (a == 1) return eps(g) - delta(g, 1);
    if (a == g.s) return Rational(2) * delta(g, g.s - 1);
    return delta(g, a - 1) - delta(g, a);
}

int root_parity(const AlgebraId& g, int a) {
    if (a < 1 || a > g.rank()) throw std::out_of_range("simple root index");
    return a == 1 ? 1 : 0;
}

Rational cartan(const AlgebraId& g, int a, int b) { return inner(g, simple_root(g, a), simple_root(g, b)); }

Rational t_value(const AlgebraId& g, int a) {
    if (a < 1 || a > g.rank()) throw std::out_of_range("t_value index");
    if (g.family == Family::SL12) return a == 1 ? 1 : -1;
    if (a == 1) return 2;
    if (a == g.s) return -1;
    return -2;
}

std::optional<std::vector<Rational>> root_coefficients(const AlgebraId& g, const BasisVector& v) {
    // Solve sum_a n_a alpha_a (+ t * null) = v by Gaussian elimination.
    std::vector<BasisVector> cols;
    for (int a = 1; a <= g.rank(); ++a) cols.push_back(simple_root(g, a));
    if (g.family == Family::SL12) cols.push_back(eps(g) - delta(g, 1) - delta(g, 2));
    std::size_t rows = g.basis_size(), nc = cols.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(nc + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < nc; ++j) m[i][j] = cols[j].c[i];
        m[i][nc] = v.c.at(i);
    }
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < nc && r < rows; ++j) {
        std::size_t p = r;
        while (p < rows && m[p][j].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][j].is_zero()) continue;
            Rational f = m[i][j] / m[r][j];
            for (std::size_t k = j; k <= nc; ++k) m[i][k] -= f * m[r][k];
        }
        pivot_col.push_back(static_cast<int>(j));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!m[i][nc].is_zero()) return std::nullopt;
    std::vector<Rational> sol(nc);
    for (std::size_t i = 0; i < r; ++i) sol[pivot_col[i]] = m[i][nc] / m[i][pivot_col[i]];
    sol.resize(g.rank());
    return sol;
}

bool dominates(const AlgebraId& g, const BasisVector& lambda, const BasisVector& mu) {
    auto c = root_coefficients(g, lambda - mu);
    if (!c) return false;
    for (const auto& x : *c)
        if (x.sign() < 0) return false;
    return true;
}

bool same_weight(const AlgebraId& g, const BasisVector& x, const BasisVector& y) {
    if (g.family == Family::C) return x == y;
    auto c = root_coefficients(g, x - y);
    if (!c) return false;
    for (const auto& v : *c)
        if (!v.is_zero()) return false;
    return true;
}

QExpr bae_ratio_expr(const AlgebraId& g, int b, Vacuum vacuum) {
    if (b < 1 || b > g.rank()) throw std::out_of_range("BAE color");
    QMonomial m;
    m.coef = root_parity(g, b) ? -1 : 1;
    for (int c = 1; c <= g.rank(); ++c) {
        Rational ip = cartan(g, b, c);
        if (ip.is_zero()) continue;
        m.mul(q_factor(c, ip, 1));
        m.mul(q_factor(c, -ip, -1));
    }
    if (vacuum == Vacuum::Fundamental && b == 1) {
        if (g.family != Family::C) throw UsageError("fundamental vacuum is defined for C(s) only");
        m.mul(phi_factor(Rational(-1, 2), 1));
        m.mul(phi_factor(Rational(1, 2), -1));
    }
    return QExpr::of(m);
}

}  // namespace cbethe
