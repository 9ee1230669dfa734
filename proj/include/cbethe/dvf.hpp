#pragma once

#include "cbethe/evaluate.hpp"
#include "cbethe/qexpr.hpp"
#include "cbethe/rootdata.hpp"
#include "cbethe/tableaux.hpp"

#include <random>
#include <string>
#include <vector>

namespace cbethe {

// One term of a DVF with its tableau label and weight.
struct DvfTerm {
    std::string label;
    BasisVector weight;
    QMonomial mono;
};

struct TermedDvf {
    AlgebraId alg;
    std::vector<DvfTerm> terms;

    QExpr expr() const;
};

// ---- C(s) ----

QMonomial box(int s, const Letter& l, Vacuum vacuum);

TermedDvf column_terms(int s, int a, Vacuum vacuum);
TermedDvf row_terms(int s, int m, Vacuum vacuum);
TermedDvf deformed_terms(int s, const Rational& c);
TermedDvf fundamental_terms(int s, int a);

QExpr column_dvf(int s, int a, Vacuum vacuum = Vacuum::Trivial);
// m >= s goes through the deformation and needs the trivial vacuum.
QExpr row_dvf(int s, int m, Vacuum vacuum = Vacuum::Trivial);
QExpr deformed(int s, const Rational& c);
QExpr fundamental_dvf(int s, int a);
QExpr negative_row_dvf(int s, int m);

// Q_1(u - c/2) / Q_1(u + c/2 - s + 1).
QMonomial deformation_prefactor(int s, const Rational& c);
// Every term of T_{s-1}(u + (c-s+1)/2) carries Q_1(u + c/2 - s + 1) upstairs.
bool deformation_divisible(int s, const Rational& c);

// evaluate(e, A, u) == evaluate(e, -A, -(u-s+1)) at `samples` random points.
bool crossing_check(const QExpr& e, int s, const RootAssignment& a, int samples, std::mt19937_64& rng);

// The explicit 16-term T_c for C(3), stored as data.
QExpr explicit_c3_fixture(const Rational& c);

// ---- sl(1|2) ----

// letters 1, 2, 3, -1, -2, -3
QMonomial sl12_box(int letter);
TermedDvf sl12_row_terms(int m);  // F_m^{(2)}
TermedDvf sl12_two_terms();       // F_2^{(1)}
TermedDvf sl12_minus_one_terms(); // F_{-1}^{(1)}
TermedDvf sl12_param_terms(const Rational& c);

QExpr sl12_row(int m);
QExpr sl12_param(const Rational& c);  // F_c^{(1)}; c = 0, 1 explicit
// F_c^{(1)} through the F_{-1} form of the deformation.
QExpr sl12_param_alt(const Rational& c);
QExpr sl12_rect_entry(int n);  // cal F^1_n
QExpr sl12_rect(int m, int a);  // cal F^a_m

// Product of two termed DVFs with the second shifted by d; coinciding
// monomials are merged.
TermedDvf termed_product(const TermedDvf& x, const TermedDvf& y, const Rational& d);

// ---- spec strings ----

struct DvfSpec {
    enum Kind { Column, Row, Deformed, Fundamental, Sl12Row, Sl12Param, Sl12Rect } kind = Column;
    AlgebraId alg;
    int n = 0;
    int n2 = 0;
    Rational c;
    Vacuum vacuum = Vacuum::Trivial;

    // "col:a", "row:m", "def:c", "fun:a", "sl12row:m", "sl12par:c", "sl12rect:m,a"
    static DvfSpec parse(const std::string& text, const AlgebraId& alg, Vacuum vacuum);
    std::string str() const;
    bool has_terms() const;
};

TermedDvf build_terms(const DvfSpec& spec);
QExpr build(const DvfSpec& spec);

}  // namespace cbethe
