#include "cbethe/evaluate.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace cbethe {

namespace {

Rational lift(const Rational& r, const Rational*) { return r; }
Complex lift(const Rational& r, const Complex*) { return Complex(r.to_double(), 0.0); }

bool is_zero(const Rational& x) { return x.is_zero(); }
bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }

Rational phi_fn(const PhiMode& mode, const Rational& x) {
    if (mode.kind != PhiMode::Rational)
        throw std::logic_error("exact evaluation requires the rational Phi mode");
    return x;
}

Complex phi_fn(const PhiMode& mode, const Complex& x) {
    if (mode.kind == PhiMode::Rational) return x;
    double l = std::log(mode.q);
    return std::sinh(x * l) / std::sinh(l);
}

Rational phi_deriv0(const PhiMode& mode, const Rational*) {
    if (mode.kind != PhiMode::Rational)
        throw std::logic_error("exact evaluation requires the rational Phi mode");
    return Rational(1);
}

Complex phi_deriv0(const PhiMode& mode, const Complex*) {
    if (mode.kind == PhiMode::Rational) return 1.0;
    double l = std::log(mode.q);
    return l / std::sinh(l);
}

template <class T>
T ipow(const T& b, int e) {
    T r(1);
    if (e < 0) return T(1) / ipow(b, -e);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

template <class T>
const std::vector<T>& family(const BasicAssignment<T>& a, const QFactor& f) {
    if (f.kind == FactorKind::Phi) return a.inhom;
    if (f.color < 1 || f.color > a.rank())
        throw std::out_of_range("color " + std::to_string(f.color) + " outside assignment rank");
    return a.roots[f.color - 1];
}

// F(u + shift) = prod_j Phi(u + shift - r_j), skipping index `skip` (1-based, 0 = none).
template <class T>
T base_value(const BasicAssignment<T>& a, const QFactor& f, const T& u, int skip = 0) {
    const auto& rs = family(a, f);
    T x = u + lift(f.shift, static_cast<const T*>(nullptr));
    T r(1);
    for (std::size_t j = 0; j < rs.size(); ++j) {
        if (static_cast<int>(j) + 1 == skip) continue;
        r *= phi_fn(a.phi, x - rs[j]);
    }
    return r;
}

template <class T>
int vanishing_index(const BasicAssignment<T>& a, const QFactor& f, const T& u) {
    const auto& rs = family(a, f);
    T x = u + lift(f.shift, static_cast<const T*>(nullptr));
    for (std::size_t j = 0; j < rs.size(); ++j)
        if (is_zero(phi_fn(a.phi, x - rs[j]))) return static_cast<int>(j) + 1;
    return 0;
}

using SiteKey = std::tuple<int, int, Rational>;

template <class T>
T eval_monomial(const QMonomial& m, const BasicAssignment<T>& a, const T& u,
                std::map<SiteKey, T>* cache) {
    T val = lift(Rational(m.coef), static_cast<const T*>(nullptr));
    for (const auto& f : m.factors) {
        T b;
        SiteKey key{static_cast<int>(f.kind), f.color, f.shift};
        if (cache) {
            auto it = cache->find(key);
            if (it == cache->end()) it = cache->emplace(key, base_value(a, f, u)).first;
            b = it->second;
        } else {
            b = base_value(a, f, u);
        }
        if (f.exp < 0 && is_zero(b)) throw PoleHit(f.color, vanishing_index(a, f, u), f.shift);
        val *= ipow(b, f.exp);
    }
    return val;
}

template <class T>
T eval_expr(const QExpr& e, const BasicAssignment<T>& a, const T& u) {
    std::map<SiteKey, T> cache;
    T sum(0);
    for (const auto& m : e.terms) sum += eval_monomial(m, a, u, &cache);
    return sum;
}

template <class T>
T residue_monomial(const QMonomial& m, const BasicAssignment<T>& a, int color, int k,
                   const Rational& shift, std::map<SiteKey, T>* cache) {
    int e = m.exponent_of(FactorKind::Q, color, shift);
    if (e >= 0) return T(0);
    if (e != -1) throw NonSimplePole("factor exponent " + std::to_string(e) + " at pole site");
    if (color < 1 || color > a.rank() || k < 1 || k > static_cast<int>(a.roots[color - 1].size()))
        throw std::out_of_range("residue: root index out of range");
    const T* tag = nullptr;
    T ustar = a.roots[color - 1][k - 1] - lift(shift, tag);
    QFactor site = q_factor(color, shift, -1);
    T val = lift(Rational(m.coef), tag);
    for (const auto& f : m.factors) {
        if (f.same_site(site)) {
            T rest = base_value(a, f, ustar, k);
            if (is_zero(rest)) throw NonSimplePole("repeated root at pole site");
            val /= rest * phi_deriv0(a.phi, tag);
            continue;
        }
        T b;
        SiteKey key{static_cast<int>(f.kind), f.color, f.shift};
        auto it = cache->find(key);
        if (it == cache->end()) it = cache->emplace(key, base_value(a, f, ustar)).first;
        b = it->second;
        if (f.exp < 0 && is_zero(b)) throw NonSimplePole("second denominator vanishes at pole site");
        val *= ipow(b, f.exp);
    }
    return val;
}

template <class T>
T residue_expr(const QExpr& e, const BasicAssignment<T>& a, int color, int k, const Rational& shift) {
    std::map<SiteKey, T> cache;
    T sum(0);
    for (const auto& m : e.terms) sum += residue_monomial(m, a, color, k, shift, &cache);
    return sum;
}

}  // namespace

RootAssignment negated(const RootAssignment& a) {
    RootAssignment r = a;
    for (auto& c : r.roots)
        for (auto& x : c) x = -x;
    for (auto& x : r.inhom) x = -x;
    return r;
}

ComplexAssignment to_complex(const RootAssignment& a) {
    ComplexAssignment r;
    r.phi = a.phi;
    for (const auto& c : a.roots) {
        r.roots.emplace_back();
        for (const auto& x : c) r.roots.back().emplace_back(x.to_double(), 0.0);
    }
    for (const auto& x : a.inhom) r.inhom.emplace_back(x.to_double(), 0.0);
    return r;
}

Rational random_rational(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
    long p = num(rng);
    long q = den(rng);
    return Rational(p, q);
}

Complex random_complex(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> d(-scale, scale);
    double re = d(rng);
    double im = d(rng);
    return {re, im};
}

RootAssignment random_assignment(const std::vector<int>& counts, int n_inhom,
                                 const std::vector<Rational>& gaps, std::mt19937_64& rng) {
    RootAssignment a;
    for (std::size_t c = 0; c < counts.size(); ++c) {
        std::vector<Rational> rs;
        while (static_cast<int>(rs.size()) < counts[c]) {
            Rational x = random_rational(rng);
            bool ok = true;
            for (const auto& y : rs) {
                Rational d = x - y;
                if (d.is_zero() || (c < gaps.size() && (d == gaps[c] || -d == gaps[c]))) ok = false;
            }
            if (ok) rs.push_back(x);
        }
        a.roots.push_back(std::move(rs));
    }
    for (int j = 0; j < n_inhom; ++j) a.inhom.push_back(random_rational(rng));
    return a;
}

ComplexAssignment random_complex_assignment(const std::vector<int>& counts, int n_inhom,
                                            std::mt19937_64& rng, PhiMode phi) {
    ComplexAssignment a;
    a.phi = phi;
    for (int n : counts) {
        a.roots.emplace_back();
        for (int j = 0; j < n; ++j) a.roots.back().push_back(random_complex(rng));
    }
    for (int j = 0; j < n_inhom; ++j) a.inhom.push_back(random_complex(rng));
    return a;
}

Rational evaluate(const QExpr& e, const RootAssignment& a, const Rational& u) { return eval_expr(e, a, u); }
Complex evaluate(const QExpr& e, const ComplexAssignment& a, const Complex& u) { return eval_expr(e, a, u); }
Rational evaluate(const QMonomial& m, const RootAssignment& a, const Rational& u) {
    return eval_monomial<Rational>(m, a, u, nullptr);
}
Complex evaluate(const QMonomial& m, const ComplexAssignment& a, const Complex& u) {
    return eval_monomial<Complex>(m, a, u, nullptr);
}

Rational residue(const QExpr& e, const RootAssignment& a, int color, int k, const Rational& shift) {
    return residue_expr(e, a, color, k, shift);
}
Complex residue(const QExpr& e, const ComplexAssignment& a, int color, int k, const Rational& shift) {
    return residue_expr(e, a, color, k, shift);
}
Rational residue(const QMonomial& m, const RootAssignment& a, int color, int k, const Rational& shift) {
    std::map<SiteKey, Rational> cache;
    return residue_monomial(m, a, color, k, shift, &cache);
}
Complex residue(const QMonomial& m, const ComplexAssignment& a, int color, int k, const Rational& shift) {
    std::map<SiteKey, Complex> cache;
    return residue_monomial(m, a, color, k, shift, &cache);
}

}  // namespace cbethe
