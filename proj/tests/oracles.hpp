// Hand-written reference implementations used by the unit tests. They work
// directly on root lists and never touch QExpr, so they share no code with
// the builders under test.
#pragma once

#include "cbethe/rational.hpp"

#include <random>
#include <regex>
#include <string>
#include <vector>

namespace oracle {

using cbethe::Rational;

struct Roots {
    int s = 3;
    std::vector<std::vector<Rational>> q;  // q[a-1]
    std::vector<Rational> w;               // inhomogeneities
};

inline Rational Q(const Roots& r, int a, const Rational& x) {
    if (a < 1 || a > r.s) return 1;
    Rational p = 1;
    for (const auto& z : r.q[a - 1]) p *= x - z;
    return p;
}

inline Rational phi(const Roots& r, const Rational& x) {
    Rational p = 1;
    for (const auto& z : r.w) p *= x - z;
    return p;
}

inline Rational half(long n) { return Rational(n, 2); }

// Letter as (index, barred). Box formulas with Q_0 = Q_{s+1} = 1.
inline Rational box(const Roots& r, int a, bool bar, const Rational& u, bool fundamental = false) {
    const int s = r.s;
    Rational v;
    if (!bar && a == 1) {
        v = Q(r, 1, u - half(1)) / Q(r, 1, u + half(1));
    } else if (!bar && a < s) {
        v = Q(r, a - 1, u - half(a - 1)) * Q(r, a, u - half(a - 4)) /
            (Q(r, a - 1, u - half(a - 3)) * Q(r, a, u - half(a - 2)));
    } else if (!bar) {
        v = Q(r, s - 1, u - half(s - 1)) * Q(r, s, u - half(s - 5)) /
            (Q(r, s - 1, u - half(s - 3)) * Q(r, s, u - half(s - 1)));
    } else if (a == s) {
        v = Q(r, s - 1, u - half(s - 1)) * Q(r, s, u - half(s + 3)) /
            (Q(r, s - 1, u - half(s + 1)) * Q(r, s, u - half(s - 1)));
    } else if (a > 1) {
        v = Q(r, a - 1, u - half(2 * s - a - 1)) * Q(r, a, u - half(2 * s - a + 2)) /
            (Q(r, a - 1, u - half(2 * s - a + 1)) * Q(r, a, u - half(2 * s - a)));
    } else {
        v = Q(r, 1, u - half(2 * s - 3)) / Q(r, 1, u - half(2 * s - 1));
    }
    if (fundamental) {
        if (!bar && a == 1) v *= phi(r, u + 1) * phi(r, u - s + 1);
        else if (bar && a == 1) v *= phi(r, u) * phi(r, u - s);
        else v *= phi(r, u) * phi(r, u - s + 1);
    }
    return v;
}

struct L {
    int a;
    bool bar;
};

inline std::vector<L> letters(int s) {
    std::vector<L> out;
    for (int i = 1; i <= s; ++i) out.push_back({i, false});
    for (int i = s; i >= 1; --i) out.push_back({i, true});
    return out;
}

inline int pos(int s, const L& l) { return l.bar ? 2 * s + 1 - l.a : l.a; }
inline bool even(const L& l) { return l.a == 1; }

// All words of length n over the alphabet.
inline std::vector<std::vector<L>> words(int s, int n) {
    std::vector<std::vector<L>> out{{}};
    const auto al = letters(s);
    for (int k = 0; k < n; ++k) {
        std::vector<std::vector<L>> next;
        for (const auto& w : out)
            for (const auto& l : al) {
                auto x = w;
                x.push_back(l);
                next.push_back(x);
            }
        out.swap(next);
    }
    return out;
}

// Column rule restated: outside the s/sbar letters the word is nondecreasing
// with 1 and 1bar at most once; the s/sbar letters form one contiguous block
// matching s* (sbar s)* sbar*.
inline bool column_ok(int s, const std::vector<L>& w) {
    std::string block;
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
        if (w[i].a == s) {
            block += w[i].bar ? 'B' : 'S';
            if (first < 0) first = i;
            last = i;
        }
    if (!block.empty()) {
        if (last - first + 1 != static_cast<int>(block.size())) return false;
        static const std::regex re("S*(BS)*B*");
        if (!std::regex_match(block, re)) return false;
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].a == s && w[i + 1].a == s) continue;
        int p = pos(s, w[i]), q = pos(s, w[i + 1]);
        if (p > q) return false;
        if (p == q && even(w[i])) return false;
    }
    return true;
}

inline bool row_ok(int s, const std::vector<L>& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int p = pos(s, w[i]), q = pos(s, w[i + 1]);
        if (p > q) return false;
        if (p == q && !even(w[i])) return false;
    }
    for (std::size_t j = 0; j < w.size(); ++j)
        for (std::size_t k = j + 1; k < w.size(); ++k)
            if (!w[j].bar && w[k].bar && w[j].a == w[k].a &&
                s + static_cast<int>(j) - static_cast<int>(k) < w[j].a)
                return false;
    return true;
}

inline int sign(const std::vector<L>& w) {
    int p = 0;
    for (const auto& l : w) p += even(l) ? 0 : 1;
    return p % 2 ? -1 : 1;
}

// Column: shifts u + (a-1)/2 down to u - (a-1)/2.
inline Rational column(const Roots& r, int a, const Rational& u, bool fundamental = false) {
    Rational sum = 0;
    for (const auto& w : words(r.s, a)) {
        if (!column_ok(r.s, w)) continue;
        Rational t = sign(w);
        for (int k = 0; k < a; ++k) t *= box(r, w[k].a, w[k].bar, u + half(a - 1 - 2 * k), fundamental);
        sum += t;
    }
    return sum;
}

inline std::size_t column_count(int s, int a) {
    std::size_t n = 0;
    for (const auto& w : words(s, a)) n += column_ok(s, w);
    return n;
}

// Row: shifts u - (m-1)/2 up to u + (m-1)/2.
inline Rational row(const Roots& r, int m, const Rational& u, bool fundamental = false) {
    Rational sum = 0;
    for (const auto& w : words(r.s, m)) {
        if (!row_ok(r.s, w)) continue;
        Rational t = sign(w);
        for (int k = 0; k < m; ++k) t *= box(r, w[k].a, w[k].bar, u - half(m - 1 - 2 * k), fundamental);
        sum += t;
    }
    return sum;
}

inline std::size_t row_count(int s, int m) {
    std::size_t n = 0;
    for (const auto& w : words(s, m)) n += row_ok(s, w);
    return n;
}

inline Rational rnd(std::mt19937_64& g, long bound = 97) {
    std::uniform_int_distribution<long> p(-bound, bound), q(1, bound);
    return Rational(p(g), q(g));
}

inline Roots random_roots(int s, int per_color, int n_inhom, std::mt19937_64& g) {
    Roots r;
    r.s = s;
    r.q.resize(s);
    for (auto& c : r.q)
        for (int j = 0; j < per_color; ++j) c.push_back(rnd(g));
    for (int j = 0; j < n_inhom; ++j) r.w.push_back(rnd(g));
    return r;
}

}  // namespace oracle
