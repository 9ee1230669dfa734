#pragma once

#include "cbethe/errors.hpp"
#include "cbethe/qexpr.hpp"

#include <complex>
#include <random>
#include <vector>

namespace cbethe {

using Complex = std::complex<double>;

// Phi(u) = u (rational) or (q^u - q^-u)/(q - q^-1) (trigonometric, numeric only).
struct PhiMode {
    enum Kind { Rational, Trigonometric } kind = Rational;
    double q = 1.0;
};

template <class T>
struct BasicAssignment {
    std::vector<std::vector<T>> roots;  // roots[a-1] = u_j^{(a)}
    std::vector<T> inhom;               // w_j
    PhiMode phi;

    int rank() const { return static_cast<int>(roots.size()); }
};

using RootAssignment = BasicAssignment<Rational>;
using ComplexAssignment = BasicAssignment<Complex>;

RootAssignment negated(const RootAssignment& a);
ComplexAssignment to_complex(const RootAssignment& a);

// Uniform random fraction p/q with |p| <= bound, 1 <= q <= bound.
Rational random_rational(std::mt19937_64& rng, long bound = 1000);
Complex random_complex(std::mt19937_64& rng, double scale = 3.0);

// Roots per color; within one color distinct and no difference equal to gaps[a-1].
RootAssignment random_assignment(const std::vector<int>& counts, int n_inhom,
                                 const std::vector<Rational>& gaps, std::mt19937_64& rng);
ComplexAssignment random_complex_assignment(const std::vector<int>& counts, int n_inhom,
                                            std::mt19937_64& rng, PhiMode phi = {});

Rational evaluate(const QExpr& e, const RootAssignment& a, const Rational& u);
Complex evaluate(const QExpr& e, const ComplexAssignment& a, const Complex& u);
Rational evaluate(const QMonomial& m, const RootAssignment& a, const Rational& u);
Complex evaluate(const QMonomial& m, const ComplexAssignment& a, const Complex& u);

// Residue at u* = u_k^{(color)} - shift (k is 1-based). Monomials without the
// factor Q_color(u+shift)^{-1} contribute 0.
Rational residue(const QExpr& e, const RootAssignment& a, int color, int k, const Rational& shift);
Complex residue(const QExpr& e, const ComplexAssignment& a, int color, int k, const Rational& shift);
Rational residue(const QMonomial& m, const RootAssignment& a, int color, int k, const Rational& shift);
Complex residue(const QMonomial& m, const ComplexAssignment& a, int color, int k, const Rational& shift);

}  // namespace cbethe
