#pragma once

#include "cbethe/rootdata.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cbethe {

// Letter of J: 1 < 2 < ... < s < sbar < ... < 1bar.
struct Letter {
    int index = 1;
    bool barred = false;

    int rank_in(int s) const { return barred ? 2 * s + 1 - index : index; }
    int parity() const { return index == 1 ? 0 : 1; }
    std::string str() const { return std::to_string(index) + (barred ? "b" : ""); }
    static Letter parse(const std::string& text, int s);
    friend bool operator==(const Letter&, const Letter&) = default;
};

std::vector<Letter> alphabet(int s);
bool precedes(int s, const Letter& a, const Letter& b);  // strict a < b

struct Shape {
    enum Kind { Column, Row } kind = Column;
    int n = 0;

    std::string str() const { return (kind == Column ? "col:" : "row:") + std::to_string(n); }
    static Shape parse(const std::string& text);
};

struct Tableau {
    Shape shape;
    std::vector<Letter> entries;

    std::string str() const;  // space separated, e.g. "1 3b"
    int parity_sum() const;
};

bool admissible_column(int s, const std::vector<Letter>& entries);
bool admissible_row(int s, const std::vector<Letter>& entries);

std::vector<Tableau> enumerate_column(int s, int a);
// Requires 0 <= m <= s-1.
std::vector<Tableau> enumerate_row(int s, int m);

mpz_class count_column_formula(int s, int a);
mpz_class count_row_formula(int s, int m);
// D(a, n) of the column count.
mpz_class column_count_summand(int s, int a, int n);

mpz_class binomial(long n, long k);

// wt(1) = eps, wt(k) = delta_{k-1}, wt(kbar) = -wt(k).
BasisVector letter_weight(const AlgebraId& g, const Letter& l);
BasisVector tableau_weight(const AlgebraId& g, const std::vector<Letter>& entries);

std::string tableau_json(const Tableau& t);
std::string tableaux_json(const std::vector<Tableau>& ts);

}  // namespace cbethe
