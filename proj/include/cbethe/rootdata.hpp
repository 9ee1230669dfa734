#pragma once

#include "cbethe/qexpr.hpp"
#include "cbethe/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cbethe {

enum class Family { C, SL12 };

struct AlgebraId {
    Family family = Family::C;
    int s = 3;  // for sl(1|2) the rank is 2

    static AlgebraId c(int s);
    static AlgebraId sl12() { return {Family::SL12, 2}; }
    // "C:3" or "sl12".
    static AlgebraId parse(const std::string& text);

    int rank() const { return s; }
    int basis_size() const { return family == Family::C ? s : 3; }
    std::string str() const;
    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

// Coordinates on (eps, delta_1, ..., delta_{s-1}) for C(s) and on
// (eps*, delta*_1, delta*_2) for sl(1|2).
struct BasisVector {
    std::vector<Rational> c;

    BasisVector() = default;
    explicit BasisVector(std::size_t n) : c(n) {}
    explicit BasisVector(std::vector<Rational> v) : c(std::move(v)) {}

    BasisVector& operator+=(const BasisVector& o);
    BasisVector& operator-=(const BasisVector& o);
    BasisVector operator-() const;
    friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
    friend BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }
    friend BasisVector operator*(const Rational& k, BasisVector v);
    friend bool operator==(const BasisVector&, const BasisVector&) = default;
    bool is_zero() const;
    std::string str() const;
};

enum class Vacuum { Trivial, Fundamental };

BasisVector eps(const AlgebraId& g);
BasisVector delta(const AlgebraId& g, int i);  // 1-based

Rational inner(const AlgebraId& g, const BasisVector& x, const BasisVector& y);
BasisVector simple_root(const AlgebraId& g, int a);
int root_parity(const AlgebraId& g, int a);  // deg(alpha_a)
Rational cartan(const AlgebraId& g, int a, int b);  // (alpha_a | alpha_b)
Rational t_value(const AlgebraId& g, int a);

// Coefficients n_a of v = sum n_a alpha_a (modulo the sl(1|2) relation
// eps* - delta*_1 - delta*_2 = 0), if v lies in the span.
std::optional<std::vector<Rational>> root_coefficients(const AlgebraId& g, const BasisVector& v);
// lambda >= mu in the dominance order: lambda - mu is a nonnegative root combination.
bool dominates(const AlgebraId& g, const BasisVector& lambda, const BasisVector& mu);
// Equality up to the sl(1|2) relation.
bool same_weight(const AlgebraId& g, const BasisVector& x, const BasisVector& y);

// R(x) with x in the role of u: BAE for a root of color b holds iff R(u_k^{(b)}) = -1.
QExpr bae_ratio_expr(const AlgebraId& g, int b, Vacuum vacuum);

}  // namespace cbethe
