#include "cbethe/repth.hpp"
#include "cbethe/tableaux.hpp"

#include <doctest.h>

#include <random>

using namespace cbethe;

namespace {

mpz_class d3(const std::string& labels) { return dim_labels(3, KacDynkin::parse(labels, 3)); }

}  // namespace

TEST_CASE("C(3) dimension table") {
    struct Row {
        const char* labels;
        long dim;
    };
    const Row table[] = {
        {"0 0 0", 1},    {"1 0 0", 6},    {"2 0 0", 16},   {"3 0 0", 10},   {"4 0 0", 15},
        {"7/2 0 0", 16}, {"0 1 0", 15},   {"0 2 0", 49},   {"0 3 0", 111},  {"0 4 0", 209},
        {"0 5 0", 351},  {"0 0 1", 10},   {"0 0 2", 35},   {"0 0 3", 84},   {"0 0 4", 165},
        {"0 0 5", 286},  {"2 1 0", 19},   {"3 2 0", 44},   {"4 3 0", 85},   {"5 4 0", 146},
        {"6 5 0", 231},  {"-2 1 0", 64},  {"-4 1 0", 64},  {"-2 2 0", 160}, {"-2 3 0", 320},
    };
    for (const auto& r : table) {
        INFO(r.labels);
        CHECK(d3(r.labels) == r.dim);
    }
}

TEST_CASE("generic first label gives 16") {
    for (const char* k : {"-5", "-2", "2", "7/2", "6", "1/3"}) {
        auto b = KacDynkin::parse(std::string(k) + " 0 0", 3);
        CHECK(is_typical(3, labels_to_weight(3, b)));
        CHECK(dim_typical(3, labels_to_weight(3, b)) == 16);
    }
}

TEST_CASE("typicality of the one-parameter family") {
    // Lambda(c) = c eps is atypical exactly for c in {0..s-2} u {s..2s-2}.
    for (int s = 2; s <= 5; ++s) {
        for (int c = -3; c <= 2 * s + 1; ++c) {
            bool atyp = (c >= 0 && c <= s - 2) || (c >= s && c <= 2 * s - 2);
            Weight w{Rational(c), std::vector<Rational>(s - 1)};
            CHECK(is_typical(s, w) == !atyp);
        }
    }
    CHECK(is_typical(3, Weight{Rational(5, 2), {0, 0}}));
}

TEST_CASE("atypical roots are detected") {
    auto roots = atypical_roots(3, Weight{Rational(1), {0, 0}});
    CHECK(roots.size() == 1);
    CHECK(atypical_roots(3, Weight{Rational(7, 2), {0, 0}}).empty());
}

TEST_CASE("labels and weights invert each other") {
    std::mt19937_64 g(13);
    std::uniform_int_distribution<long> p(-30, 30), q(1, 9), n(0, 6);
    for (int s = 2; s <= 5; ++s) {
        for (int i = 0; i < 30; ++i) {
            Weight w;
            w.L1 = Rational(p(g), q(g));
            for (int k = 0; k < s - 1; ++k) w.Lbar.push_back(Rational(p(g), q(g)));
            CHECK(labels_to_weight(s, weight_to_labels(s, w)) == w);
            KacDynkin b;
            b.b.push_back(Rational(p(g), q(g)));
            for (int k = 1; k < s; ++k) b.b.push_back(Rational(n(g)));
            CHECK(weight_to_labels(s, labels_to_weight(s, b)) == b);
        }
    }
}

TEST_CASE("counting conjecture values for C(3)") {
    const long n2[] = {15, 65, 175, 385, 735};
    const long n3[] = {10, 35, 84, 165, 286};
    for (int m = 1; m <= 5; ++m) {
        CHECK(conjectured_count(3, 2, m).value == n2[m - 1]);
        CHECK(conjectured_count(3, 3, m).value == n3[m - 1]);
        CHECK(conjectured_count(3, 3, m).value == d3("0 0 " + std::to_string(m)));
    }
    auto c = conjectured_count(3, 2, 3);
    REQUIRE(c.summands.size() == 2);
    CHECK(c.summands[0].dim == 111);
    CHECK(c.summands[0].atypical);  // V(3 w_2) goes through the atypical formula
    CHECK(c.summands[1].dim == 64);
}

TEST_CASE("row counts are dimensions of symmetric powers") {
    for (int m = 0; m <= 2; ++m) CHECK(count_row_formula(3, m) == d3(std::to_string(m) + " 0 0"));
    CHECK(count_row_formula(4, 3) == dim_labels(4, KacDynkin::parse("3 0 0 0", 4)));
}

TEST_CASE("column counts decompose into module dimensions") {
    for (int a = 1; a <= 6; ++a) {
        mpz_class total = 0;
        for (int n = 0; 2 * n <= a; ++n) {
            mpz_class d;
            if (2 * n <= a - 2) {
                Weight w{Rational(1), {Rational(a - 2 * n - 1), 0}};
                d = dim(3, w);
            } else if (a % 2 == 0) {
                d = 1;
            } else {
                d = dim(3, Weight{Rational(1), {0, 0}});
            }
            CHECK(column_count_summand(3, a, n) == d);
            total += d;
        }
        CHECK(total == mpz_class(enumerate_column(3, a).size()));
    }
}

TEST_CASE("diagrams to labels") {
    CHECK(diagram_to_labels(3, {1, 1}) == KacDynkin::parse("2 1 0", 3));
    CHECK(diagram_to_labels(3, {4}) == KacDynkin::parse("4 0 0", 3));
    CHECK(diagram_to_labels(3, {}) == KacDynkin::parse("0 0 0", 3));
}

TEST_CASE("finite dimensionality and errors") {
    CHECK(is_finite_dimensional(3, KacDynkin::parse("1/2 1 0", 3)));
    CHECK_FALSE(is_finite_dimensional(3, KacDynkin::parse("0 -1 0", 3)));
    CHECK_THROWS(KacDynkin::parse("1 2", 3));
    CHECK_THROWS(dim_typical(3, Weight{Rational(1), {0, 0}}));
}
