#pragma once

#include "cbethe/rational.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cbethe {

enum class FactorKind { Q = 0, Phi = 1 };

// One factor F(u + shift)^exp, F = Q_color or the vacuum function phi.
struct QFactor {
    FactorKind kind = FactorKind::Q;
    int color = 0;  // 0 for phi
    Rational shift;
    int exp = 1;

    bool same_site(const QFactor& o) const {
        return kind == o.kind && color == o.color && shift == o.shift;
    }
    friend bool operator==(const QFactor& a, const QFactor& b) {
        return a.same_site(b) && a.exp == b.exp;
    }
};

// Orders by (kind, color, shift) only.
inline bool site_less(const QFactor& a, const QFactor& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.color != b.color) return a.color < b.color;
    return a.shift < b.shift;
}

QFactor q_factor(int color, const Rational& shift, int exp = 1);
QFactor phi_factor(const Rational& shift, int exp = 1);

struct QMonomial {
    mpz_class coef = 1;
    std::vector<QFactor> factors;  // sorted by site, merged, exp != 0

    static QMonomial unit() { return {}; }

    // Multiplies in F^exp, merging with an existing factor on the same site.
    QMonomial& mul(const QFactor& f);
    QMonomial& mul(const QMonomial& o);
    QMonomial shifted(const Rational& d) const;

    // Exponent of the factor at this site, 0 when absent.
    int exponent_of(FactorKind kind, int color, const Rational& shift) const;
    bool same_factors(const QMonomial& o) const { return factors == o.factors; }
    std::string str() const;
};

QMonomial operator*(QMonomial a, const QMonomial& b);
bool factors_less(const QMonomial& a, const QMonomial& b);

struct QExpr {
    std::vector<QMonomial> terms;

    static QExpr zero() { return {}; }
    static QExpr one() { return QExpr{{QMonomial::unit()}}; }
    static QExpr constant(long c);
    static QExpr of(const QMonomial& m) { return QExpr{{m}}; }

    std::size_t size() const { return terms.size(); }
    bool empty() const { return terms.empty(); }
    std::string str() const;

    friend bool operator==(const QExpr& a, const QExpr& b);
};

// Merges monomials with identical factor lists, drops zero coefficients,
// sorts canonically.
QExpr normalize(const QExpr& e);
QExpr add(const QExpr& a, const QExpr& b);
QExpr subtract(const QExpr& a, const QExpr& b);
QExpr negate(const QExpr& e);
QExpr scale(const QExpr& e, long c);
std::vector<QMonomial> multiply_raw(const QExpr& a, const QExpr& b);
QExpr multiply(const QExpr& a, const QExpr& b);
QExpr shift_expr(const QExpr& e, const Rational& d);

// Net exponent of Q_color summed over all shifts; 0 for every DVF monomial.
int color_degree(const QMonomial& m, int color);

}  // namespace cbethe
