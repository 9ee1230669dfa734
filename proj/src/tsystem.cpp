#include "cbethe/tsystem.hpp"

#include <cstdio>

namespace cbethe {

const QExpr& TSystemData::fundamental(int a) {
    auto it = fund_.find(a);
    if (it == fund_.end()) it = fund_.emplace(a, fundamental_dvf(s_, a)).first;
    return it->second;
}

const QExpr& TSystemData::negative_row(int n) {
    auto it = neg_.find(n);
    if (it == neg_.end()) it = neg_.emplace(n, negative_row_dvf(s_, n)).first;
    return it->second;
}

namespace {

std::string key_of(const Rational& u) { return u.str(); }

std::string key_of(const Complex& u) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a,%a", u.real(), u.imag());
    return buf;
}

Rational lift(const Rational& r, const Rational&) { return r; }
Complex lift(const Rational& r, const Complex&) { return Complex(r.to_double(), 0.0); }

bool zero(const Rational& x) { return x.is_zero(); }
bool zero(const Complex& x) { return x == Complex(0.0, 0.0); }

}  // namespace

template <class T>
T TSystem<T>::left(int b, int n, const T& u) {
    if (b >= 2) return value(b, n, u);
    if (n == 0) return T(1);
    return evaluate(d_->negative_row(n), a_, u);
}

template <class T>
T TSystem<T>::coupling(int a, int k, const T& u) {
    const int s = d_->s();
    const T h = lift(Rational(1, 2), u);
    if (a == s) return left(s - 1, 2 * k, u);
    if (a == s - 1) {
        if (k % 2 == 0) {
            int m = k / 2;
            return left(s - 2, k, u) * value(s, m, u - h) * value(s, m, u + h);
        }
        int m = (k + 1) / 2;
        return left(s - 2, k, u) * value(s, m - 1, u) * value(s, m, u);
    }
    return left(a - 1, k, u) * value(a + 1, k, u);
}

template <class T>
T TSystem<T>::numerator(int a, int n, const T& u) {
    int k = n - 1;
    T h = lift(half_step(d_->s(), a), u);
    return value(a, k, u - h) * value(a, k, u + h) - coupling(a, k, u);
}

template <class T>
T TSystem<T>::value(int a, int n, const T& u) {
    if (a < 2 || a > d_->s()) throw std::out_of_range("T-system row out of range");
    if (n < 0) throw std::out_of_range("negative T-system index");
    if (n == 0) return T(1);
    if (n == 1) return evaluate(d_->fundamental(a), a_, u);
    auto key = std::make_tuple(a, n, key_of(u));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    T den = value(a, n - 2, u);
    if (zero(den)) throw ZeroDivisor("T-system divisor vanishes");
    T v = numerator(a, n, u) / den;
    memo_.emplace(key, v);
    return v;
}

template class TSystem<Rational>;
template class TSystem<Complex>;

}  // namespace cbethe
