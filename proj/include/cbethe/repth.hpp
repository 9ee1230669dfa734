#pragma once

#include "cbethe/rootdata.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cbethe {

// Lambda = L1 eps + sum_i Lbar_i delta_i.
struct Weight {
    Rational L1;
    std::vector<Rational> Lbar;  // size s-1

    BasisVector basis() const;
    static Weight from_basis(const BasisVector& v);
    friend bool operator==(const Weight&, const Weight&) = default;
};

// b_1 may be any rational; b_2..b_s are nonnegative integers for
// finite-dimensional modules.
struct KacDynkin {
    std::vector<Rational> b;  // size s
    std::string str() const;
    static KacDynkin parse(const std::string& text, int s);
    friend bool operator==(const KacDynkin&, const KacDynkin&) = default;
};

KacDynkin weight_to_labels(int s, const Weight& w);
Weight labels_to_weight(int s, const KacDynkin& b);
Weight fundamental_weight(int s, int a);
Weight rho(int s);

// Odd positive root eps + sign*delta_k with (Lambda + rho | root) = 0.
struct AtypicalRoot {
    int k;
    int sign;  // +1 for eps + delta_k, -1 for eps - delta_k
};

std::vector<AtypicalRoot> atypical_roots(int s, const Weight& w);
bool is_typical(int s, const Weight& w);
bool is_finite_dimensional(int s, const KacDynkin& b);

mpz_class dim_typical(int s, const Weight& w);
mpz_class dim_atypical(int s, const Weight& w);
// Dispatches on typicality; throws on multiply-atypical weights.
mpz_class dim(int s, const Weight& w);
mpz_class dim_labels(int s, const KacDynkin& b);

struct CountSummand {
    std::vector<int> k;  // k_1..k_a
    KacDynkin labels;
    mpz_class dim;
    bool atypical = false;
};

struct ConjecturedCount {
    mpz_class value;
    std::vector<CountSummand> summands;
    bool flagged = false;  // some summand was atypical
};

ConjecturedCount conjectured_count(int s, int a, int m);

KacDynkin diagram_to_labels(int s, const std::vector<int>& mu);

}  // namespace cbethe
