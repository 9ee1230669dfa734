#include "cbethe/rational.hpp"

#include <stdexcept>

namespace cbethe {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(int e) const {
    if (e < 0) return Rational(1) / pow(-e);
    mpq_class r(1), b(v_);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return Rational(r);
}

static bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    auto slash = text.find('/');
    std::string_view n = text.substr(0, slash);
    std::string_view d = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(n) || !valid_integer(d) || d.front() == '-')
        throw std::invalid_argument("not a fraction: '" + std::string(text) + "'");
    std::string ns(n);
    if (ns.front() == '+') ns.erase(0, 1);
    mpz_class dn{std::string(d)};
    mpz_class nn{ns};
    if (dn == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(nn, dn);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace cbethe
