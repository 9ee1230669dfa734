#include "cbethe/repth.hpp"

#include "cbethe/errors.hpp"
#include "cbethe/tableaux.hpp"

#include <functional>
#include <sstream>

namespace cbethe {

BasisVector Weight::basis() const {
    BasisVector v(Lbar.size() + 1);
    v.c[0] = L1;
    for (std::size_t i = 0; i < Lbar.size(); ++i) v.c[i + 1] = Lbar[i];
    return v;
}

Weight Weight::from_basis(const BasisVector& v) {
    Weight w;
    w.L1 = v.c.at(0);
    w.Lbar.assign(v.c.begin() + 1, v.c.end());
    return w;
}

std::string KacDynkin::str() const {
    std::string out;
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? " " : "") + b[i].str();
    return out;
}

KacDynkin KacDynkin::parse(const std::string& text, int s) {
    std::istringstream in(text);
    std::string tok;
    KacDynkin k;
    while (in >> tok) {
        try {
            k.b.push_back(Rational::parse(tok));
        } catch (const std::exception&) {
            throw UsageError("bad label '" + tok + "'");
        }
    }
    if (static_cast<int>(k.b.size()) != s)
        throw UsageError("expected " + std::to_string(s) + " labels, got " + std::to_string(k.b.size()));
    return k;
}

KacDynkin weight_to_labels(int s, const Weight& w) {
    if (static_cast<int>(w.Lbar.size()) != s - 1) throw std::invalid_argument("weight dimension");
    KacDynkin k;
    k.b.resize(s);
    k.b[0] = w.L1 + w.Lbar[0];
    for (int j = 2; j <= s - 1; ++j) k.b[j - 1] = w.Lbar[j - 2] - w.Lbar[j - 1];
    k.b[s - 1] = w.Lbar[s - 2];
    return k;
}

Weight labels_to_weight(int s, const KacDynkin& k) {
    if (static_cast<int>(k.b.size()) != s) throw std::invalid_argument("label count");
    Weight w;
    w.Lbar.resize(s - 1);
    w.Lbar[s - 2] = k.b[s - 1];
    for (int j = s - 1; j >= 2; --j) w.Lbar[j - 2] = k.b[j - 1] + w.Lbar[j - 1];
    w.L1 = k.b[0] - w.Lbar[0];
    return w;
}

Weight fundamental_weight(int s, int a) {
    KacDynkin k;
    k.b.assign(s, Rational(0));
    k.b.at(a - 1) = 1;
    return labels_to_weight(s, k);
}

Weight rho(int s) {
    Weight w;
    w.L1 = -(s - 1);
    for (int i = 1; i <= s - 1; ++i) w.Lbar.push_back(Rational(s - i));
    return w;
}

std::vector<AtypicalRoot> atypical_roots(int s, const Weight& w) {
    AlgebraId g = AlgebraId::c(s);
    BasisVector lr = w.basis() + rho(s).basis();
    std::vector<AtypicalRoot> out;
    for (int k = 1; k <= s - 1; ++k)
        for (int sg : {+1, -1}) {
            BasisVector root = sg > 0 ? eps(g) + delta(g, k) : eps(g) - delta(g, k);
            if (inner(g, lr, root).is_zero()) out.push_back({k, sg});
        }
    return out;
}

bool is_typical(int s, const Weight& w) { return atypical_roots(s, w).empty(); }

bool is_finite_dimensional(int s, const KacDynkin& b) {
    for (int j = 2; j <= s; ++j)
        if (!b.b[j - 1].is_integer() || b.b[j - 1].sign() < 0) return false;
    return true;
}

static mpz_class as_integer(const Rational& r, const char* what) {
    if (!r.is_integer()) throw std::runtime_error(std::string(what) + " is not an integer: " + r.str());
    return r.num();
}

mpz_class dim_typical(int s, const Weight& w) {
    if (!is_typical(s, w)) throw std::invalid_argument("dim_typical: weight is atypical");
    const auto& L = w.Lbar;
    Rational d = Rational(mpz_class(mpz_class(1) << (2 * (s - 1))));
    for (int i = 1; i <= s - 1; ++i) d *= (L[i - 1] + (s - i)) / Rational(s - i);
    for (int i = 1; i <= s - 1; ++i)
        for (int j = i + 1; j <= s - 1; ++j)
            d *= (L[i - 1] - L[j - 1] + (j - i)) * (L[i - 1] + L[j - 1] + (2 * s - i - j)) /
                 Rational((j - i) * (2 * s - i - j));
    return as_integer(d, "typical dimension");
}

static mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

mpz_class dim_atypical(int s, const Weight& w) {
    auto roots = atypical_roots(s, w);
    if (roots.empty()) throw std::invalid_argument("dim_atypical: weight is typical");
    if (roots.size() > 1) {
        std::string list;
        for (const auto& r : roots)
            list += std::string(list.empty() ? "" : ", ") + "eps" + (r.sign > 0 ? "+" : "-") + "delta_" +
                    std::to_string(r.k);
        throw std::invalid_argument("multiply atypical weight (" + list + ")");
    }
    int k = roots[0].k;
    std::vector<Rational> x(s);  // 1-based
    for (int i = 1; i <= s - 1; ++i) x[i] = w.Lbar[i - 1] + (s - i);
    if (roots[0].sign < 0) x[k] = w.Lbar[k - 1] + (s - 1 - k);

    Rational pre = Rational(mpz_class(mpz_class(1) << (2 * s - 3))) / Rational(factorial(s - 1));
    for (int i = 1; i <= s - 1; ++i)
        pre *= Rational(factorial(2 * i)) / Rational(mpz_class(factorial(s - 1 - i) * factorial(s - 1 + i)));
    for (int i = 1; i <= s - 1; ++i)
        if (i != k) pre *= x[i];
    for (int i = 1; i <= s - 1; ++i)
        for (int j = i + 1; j <= s - 1; ++j)
            if (i != k && j != k) pre *= (x[i] - x[j]) * (x[i] + x[j]);
    if ((k - 1) % 2) pre = -pre;

    Rational sum;
    for (int j = 0; j <= 2 * s - 3; ++j)
        for (int l = 0; l <= j; ++l) {
            Rational t = Rational(binomial(j, l)) / Rational(mpz_class(mpz_class(1) << j));
            if (l % 2) t = -t;
            t *= x[k] - l;
            for (int i = 1; i <= s - 1; ++i)
                if (i != k) t *= (x[k] - x[i] - l) * (x[k] + x[i] - l);
            sum += t;
        }
    return as_integer(pre * sum, "atypical dimension");
}

mpz_class dim(int s, const Weight& w) { return is_typical(s, w) ? dim_typical(s, w) : dim_atypical(s, w); }

mpz_class dim_labels(int s, const KacDynkin& b) {
    if (!is_finite_dimensional(s, b))
        throw UsageError("labels b_2..b_s must be nonnegative integers for a finite-dimensional module");
    return dim(s, labels_to_weight(s, b));
}

ConjecturedCount conjectured_count(int s, int a, int m) {
    if (a < 1 || a > s || m < 0) throw UsageError("conjectured_count needs 1 <= a <= s, m >= 0");
    ConjecturedCount out;
    auto add = [&](std::vector<int> k, KacDynkin lab) {
        CountSummand cs{std::move(k), lab, 0, false};
        Weight w = labels_to_weight(s, lab);
        auto roots = atypical_roots(s, w);
        cs.atypical = !roots.empty();
        if (cs.atypical) out.flagged = true;
        cs.dim = roots.size() > 1 ? mpz_class(0) : dim(s, w);
        out.value += cs.dim;
        out.summands.push_back(std::move(cs));
    };
    KacDynkin lab;
    lab.b.assign(s, Rational(0));
    if (a == 1 || a == s) {
        lab.b[a - 1] = m;
        add({m}, lab);
        out.flagged = false;  // V(m w_1), V(m w_s) are the stated values
        return out;
    }
    std::vector<int> k(a, 0);
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == a) {
            if ((left - m) % 2 != 0) return;
            k[a - 1] = left;
            if (left % 2 != m % 2) return;
            KacDynkin l;
            l.b.assign(s, Rational(0));
            l.b[0] = -k[0];
            for (int i = 2; i <= a; ++i) l.b[i - 1] = k[i - 1];
            add(k, l);
            return;
        }
        for (int v = 0; v <= left; v += 2) {
            k[j - 1] = v;
            rec(j + 1, left - v);
        }
    };
    rec(1, m);
    return out;
}

KacDynkin diagram_to_labels(int s, const std::vector<int>& mu) {
    for (std::size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] < mu[i + 1] || mu[i + 1] < 0) throw UsageError("not a partition");
    auto conj = [&](int i) {  // mu'_i
        int c = 0;
        for (int r : mu)
            if (r >= i) ++c;
        return c;
    };
    std::vector<int> eta(s + 1, 0);
    for (int i = 1; i <= s; ++i) eta[i] = std::max(conj(i) - 1, 0);
    KacDynkin k;
    k.b.resize(s);
    k.b[0] = (mu.empty() ? 0 : mu[0]) + eta[1];
    for (int i = 1; i <= s - 2; ++i) k.b[i] = eta[i] - eta[i + 1];
    k.b[s - 1] = eta[s - 1];
    return k;
}

}  // namespace cbethe
