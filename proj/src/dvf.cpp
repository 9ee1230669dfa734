#include "cbethe/dvf.hpp"

#include "cbethe/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cbethe {

QExpr TermedDvf::expr() const {
    QExpr e;
    for (const auto& t : terms) e.terms.push_back(t.mono);
    return normalize(e);
}

namespace {

Rational half(long n) { return Rational(n, 2); }

void add_q(QMonomial& m, int s, int color, const Rational& shift, int exp) {
    // Q_0 = Q_{s+1} = 1.
    if (color >= 1 && color <= s) m.mul(q_factor(color, shift, exp));
}

TermedDvf subtract_terms(TermedDvf x, const TermedDvf& y) {
    for (const auto& t : y.terms) {
        auto it = std::find_if(x.terms.begin(), x.terms.end(), [&](const DvfTerm& u) {
            return u.mono.same_factors(t.mono) && u.mono.coef == t.mono.coef;
        });
        if (it != x.terms.end()) {
            x.terms.erase(it);
        } else {
            DvfTerm n = t;
            n.mono.coef = -n.mono.coef;
            x.terms.push_back(std::move(n));
        }
    }
    return x;
}

std::string offset_label(const Rational& n, const std::string& inner) {
    if (n.is_zero()) return inner;
    if (n.is_integer() && n.num() > 0 && n.num() < 64) {
        std::string pre;
        for (long i = 0; i < n.num().get_si(); ++i) pre += "1 ";
        return pre + inner;
    }
    if (n.is_integer() && n.num() < 0 && n.num() > -64) {
        std::string post;
        for (long i = 0; i < -n.num().get_si(); ++i) post += " 1b";
        return inner + post;
    }
    return "[" + n.str() + "] " + inner;
}

void check_c(int s) {
    if (s < 2) throw UsageError("C(s) requires s >= 2");
}

}  // namespace

QMonomial box(int s, const Letter& l, Vacuum vacuum) {
    check_c(s);
    if (l.index < 1 || l.index > s) throw UsageError("letter outside alphabet");
    QMonomial m;
    int a = l.index;
    if (!l.barred) {
        if (a == 1) {
            add_q(m, s, 1, half(-1), 1);
            add_q(m, s, 1, half(1), -1);
        } else if (a < s) {
            add_q(m, s, a - 1, half(-(a - 1)), 1);
            add_q(m, s, a, half(-(a - 4)), 1);
            add_q(m, s, a - 1, half(-(a - 3)), -1);
            add_q(m, s, a, half(-(a - 2)), -1);
        } else {
            add_q(m, s, s - 1, half(-(s - 1)), 1);
            add_q(m, s, s, half(-(s - 5)), 1);
            add_q(m, s, s - 1, half(-(s - 3)), -1);
            add_q(m, s, s, half(-(s - 1)), -1);
        }
    } else {
        if (a == 1) {
            add_q(m, s, 1, half(-(2 * s - 3)), 1);
            add_q(m, s, 1, half(-(2 * s - 1)), -1);
        } else if (a < s) {
            add_q(m, s, a - 1, half(-(2 * s - a - 1)), 1);
            add_q(m, s, a, half(-(2 * s - a + 2)), 1);
            add_q(m, s, a - 1, half(-(2 * s - a + 1)), -1);
            add_q(m, s, a, half(-(2 * s - a)), -1);
        } else {
            add_q(m, s, s - 1, half(-(s - 1)), 1);
            add_q(m, s, s, half(-(s + 3)), 1);
            add_q(m, s, s - 1, half(-(s + 1)), -1);
            add_q(m, s, s, half(-(s - 1)), -1);
        }
    }
    if (vacuum == Vacuum::Fundamental) {
        if (a == 1 && !l.barred) {
            m.mul(phi_factor(1));
            m.mul(phi_factor(1 - s));
        } else if (a == 1) {
            m.mul(phi_factor(0));
            m.mul(phi_factor(-s));
        } else {
            m.mul(phi_factor(0));
            m.mul(phi_factor(1 - s));
        }
    }
    return m;
}

TermedDvf column_terms(int s, int a, Vacuum vacuum) {
    AlgebraId g = AlgebraId::c(s);
    TermedDvf out{g, {}};
    for (const auto& t : enumerate_column(s, a)) {
        QMonomial m;
        m.coef = t.parity_sum() % 2 ? -1 : 1;
        for (int k = 0; k < a; ++k) m.mul(box(s, t.entries[k], vacuum).shifted(half(a - 1 - 2 * k)));
        out.terms.push_back({t.str(), tableau_weight(g, t.entries), std::move(m)});
    }
    return out;
}

QMonomial deformation_prefactor(int s, const Rational& c) {
    QMonomial p;
    p.mul(q_factor(1, -c / 2, 1));
    p.mul(q_factor(1, c / 2 - s + 1, -1));
    return p;
}

TermedDvf deformed_terms(int s, const Rational& c) {
    AlgebraId g = AlgebraId::c(s);
    TermedDvf inner = row_terms(s, s - 1, Vacuum::Trivial);
    Rational offset = c - (s - 1);
    Rational d = offset / 2;
    QMonomial pre = deformation_prefactor(s, c);
    TermedDvf out{g, {}};
    for (const auto& t : inner.terms) {
        QMonomial m = pre * t.mono.shifted(d);
        out.terms.push_back({offset_label(offset, t.label), offset * eps(g) + t.weight, std::move(m)});
    }
    return out;
}

TermedDvf row_terms(int s, int m, Vacuum vacuum) {
    check_c(s);
    if (m < 0) throw UsageError("row length must be >= 0; negative rows are def:-m");
    AlgebraId g = AlgebraId::c(s);
    if (m <= s - 1) {
        TermedDvf out{g, {}};
        for (const auto& t : enumerate_row(s, m)) {
            QMonomial mono;
            mono.coef = t.parity_sum() % 2 ? -1 : 1;
            for (int k = 0; k < m; ++k) mono.mul(box(s, t.entries[k], vacuum).shifted(half(2 * k - m + 1)));
            out.terms.push_back({t.str(), tableau_weight(g, t.entries), std::move(mono)});
        }
        return out;
    }
    if (vacuum != Vacuum::Trivial) throw UsageError("rows with m >= s are built with the trivial vacuum only");
    if (m >= 2 * s - 1) return deformed_terms(s, m);
    return subtract_terms(deformed_terms(s, m), row_terms(s, 2 * s - 2 - m, vacuum));
}

TermedDvf fundamental_terms(int s, int a) {
    check_c(s);
    if (a < 2 || a > s) throw UsageError("fundamental DVF needs 2 <= a <= s");
    return subtract_terms(deformed_terms(s, a - 2), row_terms(s, a - 2, Vacuum::Trivial));
}

QExpr column_dvf(int s, int a, Vacuum vacuum) { return column_terms(s, a, vacuum).expr(); }
QExpr row_dvf(int s, int m, Vacuum vacuum) { return row_terms(s, m, vacuum).expr(); }
QExpr deformed(int s, const Rational& c) { return deformed_terms(s, c).expr(); }
QExpr fundamental_dvf(int s, int a) { return fundamental_terms(s, a).expr(); }

QExpr negative_row_dvf(int s, int m) {
    if (m < 1) throw UsageError("negative_row_dvf needs m >= 1");
    return deformed(s, Rational(-m));
}

bool deformation_divisible(int s, const Rational& c) {
    QExpr inner = shift_expr(row_dvf(s, s - 1), (c - (s - 1)) / 2);
    Rational site = c / 2 - s + 1;
    for (const auto& m : inner.terms)
        if (m.exponent_of(FactorKind::Q, 1, site) < 1) return false;
    return true;
}

bool crossing_check(const QExpr& e, int s, const RootAssignment& a, int samples, std::mt19937_64& rng) {
    RootAssignment neg = negated(a);
    int done = 0, attempts = 0;
    while (done < samples) {
        if (++attempts > 20 * samples + 20) throw std::runtime_error("crossing_check: too many pole hits");
        Rational u = random_rational(rng);
        Rational lhs, rhs;
        try {
            lhs = evaluate(e, a, u);
            rhs = evaluate(e, neg, -(u - (s - 1)));
        } catch (const PoleHit&) {
            continue;
        }
        if (lhs != rhs) return false;
        ++done;
    }
    return true;
}

QExpr explicit_c3_fixture(const Rational& c) {
    // Factor (color, p, q, exp) means Q_color(u + (p + q c)/2)^exp.
    struct F {
        int color, p, q, exp;
    };
    struct T {
        int sign;
        std::vector<F> f;
    };
    static const std::vector<T> data = {
        {+1, {{1, 0, 1, -1}}},
        {+1, {{1, -8, 1, -1}}},
        {+1, {{1, -4, 1, 1}, {1, -6, 1, -1}, {1, -2, 1, -1}}},
        {-1, {{2, -9, 1, 1}, {1, -8, 1, -1}, {2, -7, 1, -1}}},
        {-1, {{1, -4, 1, 1}, {2, -7, 1, 1}, {1, -6, 1, -1}, {1, -2, 1, -1}, {2, -5, 1, -1}}},
        {-1, {{1, -4, 1, 1}, {2, -1, 1, 1}, {1, -6, 1, -1}, {1, -2, 1, -1}, {2, -3, 1, -1}}},
        {+1, {{1, -4, 1, 1}, {2, -7, 1, 1}, {2, -1, 1, 1}, {1, -6, 1, -1}, {1, -2, 1, -1}, {2, -5, 1, -1}, {2, -3, 1, -1}}},
        {-1, {{2, 1, 1, 1}, {1, 0, 1, -1}, {2, -1, 1, -1}}},
        {+1, {{3, -9, 1, 1}, {1, -6, 1, -1}, {3, -5, 1, -1}}},
        {-1, {{2, -5, 1, 1}, {3, -9, 1, 1}, {1, -6, 1, -1}, {2, -7, 1, -1}, {3, -5, 1, -1}}},
        {-1, {{2, -3, 1, 1}, {3, -7, 1, 1}, {1, -2, 1, -1}, {2, -5, 1, -1}, {3, -3, 1, -1}}},
        {+1, {{2, -1, 1, 1}, {3, -7, 1, 1}, {1, -2, 1, -1}, {2, -5, 1, -1}, {3, -3, 1, -1}}},
        {+1, {{2, -7, 1, 1}, {3, -1, 1, 1}, {1, -6, 1, -1}, {2, -3, 1, -1}, {3, -5, 1, -1}}},
        {-1, {{2, -5, 1, 1}, {3, -1, 1, 1}, {1, -6, 1, -1}, {2, -3, 1, -1}, {3, -5, 1, -1}}},
        {+1, {{3, 1, 1, 1}, {1, -2, 1, -1}, {3, -3, 1, -1}}},
        {-1, {{2, -3, 1, 1}, {3, 1, 1, 1}, {1, -2, 1, -1}, {2, -1, 1, -1}, {3, -3, 1, -1}}},
    };
    QExpr e;
    for (const auto& t : data) {
        QMonomial m;
        m.coef = t.sign;
        m.mul(q_factor(1, -c / 2, 1));  // common numerator Q_1(u - c/2)
        for (const auto& f : t.f) m.mul(q_factor(f.color, (Rational(f.p) + Rational(f.q) * c) / 2, f.exp));
        e.terms.push_back(m);
    }
    return normalize(e);
}

// ---- sl(1|2) ----

QMonomial sl12_box(int letter) {
    QMonomial m;
    switch (letter) {
        case 1:
            m.mul(q_factor(1, -1, 1)).mul(q_factor(1, 1, -1));
            break;
        case 2:
            m.mul(q_factor(1, -1, 1)).mul(q_factor(2, 2, 1)).mul(q_factor(1, 1, -1)).mul(q_factor(2, 0, -1));
            break;
        case 3:
            m.mul(q_factor(2, -2, 1)).mul(q_factor(2, 0, -1));
            break;
        case -1:
            m.mul(q_factor(1, 0, 1)).mul(q_factor(1, -2, -1));
            break;
        case -2:
            m.mul(q_factor(1, 0, 1)).mul(q_factor(2, -3, 1)).mul(q_factor(1, -2, -1)).mul(q_factor(2, -1, -1));
            break;
        case -3:
            m.mul(q_factor(2, 1, 1)).mul(q_factor(2, -1, -1));
            break;
        default:
            throw UsageError("sl(1|2) letter must be one of 1,2,3,-1,-2,-3");
    }
    return m;
}

namespace {

int sl12_parity(int letter) { return (letter == 1 || letter == -1) ? 0 : 1; }

BasisVector sl12_weight(int letter) {
    AlgebraId g = AlgebraId::sl12();
    BasisVector v = std::abs(letter) == 1 ? eps(g) : delta(g, std::abs(letter) - 1);
    return letter > 0 ? v : -v;
}

std::string sl12_label(const std::vector<int>& ls) {
    std::string out;
    for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? " " : "") + std::to_string(ls[i]);
    return out;
}

// Sum over fillings (given explicitly) with boxes at u + shifts[k].
TermedDvf sl12_sum(const std::vector<std::vector<int>>& fillings, const std::vector<Rational>& shifts) {
    AlgebraId g = AlgebraId::sl12();
    TermedDvf out{g, {}};
    for (const auto& f : fillings) {
        QMonomial m;
        int p = 0;
        BasisVector w(g.basis_size());
        for (std::size_t k = 0; k < f.size(); ++k) {
            m.mul(sl12_box(f[k]).shifted(shifts[k]));
            p += sl12_parity(f[k]);
            w += sl12_weight(f[k]);
        }
        m.coef = p % 2 ? -1 : 1;
        out.terms.push_back({sl12_label(f), w, std::move(m)});
    }
    return out;
}

}  // namespace

TermedDvf sl12_row_terms(int m) {
    if (m < 0) throw UsageError("F^(2)_m needs m >= 0");
    // Columns over -3 < -2 < -1, weakly increasing, -1 not repeated.
    std::vector<std::vector<int>> fill;
    std::vector<int> cur;
    const int order[3] = {-3, -2, -1};
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == m) {
            fill.push_back(cur);
            return;
        }
        for (int i = from; i < 3; ++i) {
            if (order[i] == -1 && !cur.empty() && cur.back() == -1) continue;
            cur.push_back(order[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
    std::vector<Rational> shifts;
    for (int k = 0; k < m; ++k) shifts.push_back(Rational(m - 1 - 2 * k));
    return sl12_sum(fill, shifts);
}

TermedDvf sl12_two_terms() { return sl12_sum({{1, 1}, {1, 2}, {1, 3}, {2, 3}}, {Rational(-1), Rational(1)}); }

TermedDvf sl12_minus_one_terms() {
    return sl12_sum({{-3, -2}, {-3, -1}, {-2, -1}, {-1, -1}}, {Rational(-1), Rational(1)});
}

TermedDvf sl12_param_terms(const Rational& c) {
    AlgebraId g = AlgebraId::sl12();
    if (c.is_zero()) return TermedDvf{g, {{"", BasisVector(g.basis_size()), QMonomial::unit()}}};
    if (c == Rational(1)) return sl12_sum({{1}, {2}, {3}}, {Rational(0)});
    QMonomial pre;
    pre.mul(q_factor(1, -c, 1)).mul(q_factor(1, c - 4, -1));
    TermedDvf out{g, {}};
    for (const auto& t : sl12_two_terms().terms)
        out.terms.push_back({offset_label(c - 2, t.label), (c - 2) * eps(g) + t.weight, pre * t.mono.shifted(c - 2)});
    return out;
}

QExpr sl12_row(int m) { return sl12_row_terms(m).expr(); }
QExpr sl12_param(const Rational& c) { return sl12_param_terms(c).expr(); }

QExpr sl12_param_alt(const Rational& c) {
    QMonomial pre;
    pre.mul(q_factor(1, -c, 1)).mul(q_factor(1, c + 2, -1));
    return multiply(QExpr::of(pre), shift_expr(sl12_minus_one_terms().expr(), c + 1));
}

QExpr sl12_rect_entry(int n) {
    if (n < 0) return QExpr::zero();
    if (n == 0) return QExpr::one();
    if (n == 1) return sl12_row(1);
    return sl12_param(Rational(1 - n));
}

QExpr sl12_rect(int m, int a) {
    if (a < 0) throw UsageError("determinant size must be >= 0");
    if (a == 0) return QExpr::one();
    // Permutation expansion of det(cal F^1_{m+i-j}(u + a - i - j + 1)).
    std::vector<std::vector<QExpr>> entry(a, std::vector<QExpr>(a));
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= a; ++j) entry[i - 1][j - 1] = shift_expr(sl12_rect_entry(m + i - j), Rational(a - i - j + 1));
    std::vector<int> perm(a);
    std::iota(perm.begin(), perm.end(), 0);
    QExpr total;
    do {
        int inversions = 0;
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                if (perm[i] > perm[j]) ++inversions;
        QExpr prod = QExpr::one();
        for (int i = 0; i < a && !prod.empty(); ++i) prod = multiply(prod, entry[i][perm[i]]);
        if (inversions % 2) prod = negate(prod);
        total.terms.insert(total.terms.end(), prod.terms.begin(), prod.terms.end());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return normalize(total);
}

TermedDvf termed_product(const TermedDvf& x, const TermedDvf& y, const Rational& d) {
    TermedDvf out{x.alg, {}};
    for (const auto& a : x.terms)
        for (const auto& b : y.terms) {
            DvfTerm t{a.label + " | " + b.label, a.weight + b.weight, a.mono * b.mono.shifted(d)};
            auto it = std::find_if(out.terms.begin(), out.terms.end(),
                                   [&](const DvfTerm& o) { return o.mono.same_factors(t.mono); });
            if (it == out.terms.end()) {
                out.terms.push_back(std::move(t));
            } else {
                it->mono.coef += t.mono.coef;
                it->label += " + " + t.label;
            }
        }
    std::erase_if(out.terms, [](const DvfTerm& t) { return t.mono.coef == 0; });
    return out;
}

// ---- spec strings ----

namespace {

int parse_int(const std::string& s, const std::string& whole) {
    std::string t = s;
    bool neg = !t.empty() && t[0] == '-';
    if (neg) t.erase(0, 1);
    if (t.empty() || t.size() > 6 || t.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad integer '" + s + "' in spec '" + whole + "'");
    int v = std::stoi(t);
    return neg ? -v : v;
}

}  // namespace

DvfSpec DvfSpec::parse(const std::string& text, const AlgebraId& alg, Vacuum vacuum) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("bad DVF spec '" + text +
                         "', expected col:a | row:m | def:c | fun:a | sl12row:m | sl12par:c | sl12rect:m,a");
    std::string kind = text.substr(0, colon), arg = text.substr(colon + 1);
    DvfSpec sp;
    sp.alg = alg;
    sp.vacuum = vacuum;
    bool sl = kind.rfind("sl12", 0) == 0;
    if (sl != (alg.family == Family::SL12))
        throw UsageError("spec '" + text + "' does not match algebra " + alg.str());
    if (kind == "col") {
        sp.kind = Column;
        sp.n = parse_int(arg, text);
        if (sp.n < 0) throw UsageError("column height must be >= 0");
    } else if (kind == "row") {
        sp.kind = Row;
        sp.n = parse_int(arg, text);
        if (sp.n < 0) throw UsageError("row length must be >= 0; use def:-m for negative rows");
    } else if (kind == "def") {
        sp.kind = Deformed;
        try {
            sp.c = Rational::parse(arg);
        } catch (const std::exception&) {
            throw UsageError("bad fraction '" + arg + "' in spec '" + text + "'");
        }
    } else if (kind == "fun") {
        sp.kind = Fundamental;
        sp.n = parse_int(arg, text);
        if (sp.n < 2 || sp.n > alg.s) throw UsageError("fun:a needs 2 <= a <= s");
    } else if (kind == "sl12row") {
        sp.kind = Sl12Row;
        sp.n = parse_int(arg, text);
        if (sp.n < 0) throw UsageError("sl12row:m needs m >= 0");
    } else if (kind == "sl12par") {
        sp.kind = Sl12Param;
        try {
            sp.c = Rational::parse(arg);
        } catch (const std::exception&) {
            throw UsageError("bad fraction '" + arg + "' in spec '" + text + "'");
        }
    } else if (kind == "sl12rect") {
        sp.kind = Sl12Rect;
        auto comma = arg.find(',');
        if (comma == std::string::npos) throw UsageError("sl12rect needs m,a");
        sp.n = parse_int(arg.substr(0, comma), text);
        sp.n2 = parse_int(arg.substr(comma + 1), text);
        if (sp.n2 < 1) throw UsageError("sl12rect needs a >= 1");
    } else {
        throw UsageError("unknown DVF kind '" + kind + "'");
    }
    if (vacuum == Vacuum::Fundamental && sp.kind != Column && !(sp.kind == Row && sp.n <= alg.s - 1))
        throw UsageError("the fundamental vacuum is supported for col:a and row:m with m <= s-1 only");
    return sp;
}

std::string DvfSpec::str() const {
    switch (kind) {
        case Column: return "col:" + std::to_string(n);
        case Row: return "row:" + std::to_string(n);
        case Deformed: return "def:" + c.str();
        case Fundamental: return "fun:" + std::to_string(n);
        case Sl12Row: return "sl12row:" + std::to_string(n);
        case Sl12Param: return "sl12par:" + c.str();
        case Sl12Rect: return "sl12rect:" + std::to_string(n) + "," + std::to_string(n2);
    }
    return "?";
}

bool DvfSpec::has_terms() const { return kind != Sl12Rect; }

TermedDvf build_terms(const DvfSpec& sp) {
    switch (sp.kind) {
        case DvfSpec::Column: return column_terms(sp.alg.s, sp.n, sp.vacuum);
        case DvfSpec::Row: return row_terms(sp.alg.s, sp.n, sp.vacuum);
        case DvfSpec::Deformed: return deformed_terms(sp.alg.s, sp.c);
        case DvfSpec::Fundamental: return fundamental_terms(sp.alg.s, sp.n);
        case DvfSpec::Sl12Row: return sl12_row_terms(sp.n);
        case DvfSpec::Sl12Param: return sl12_param_terms(sp.c);
        case DvfSpec::Sl12Rect: break;
    }
    throw UsageError("spec '" + sp.str() + "' has no tableau provenance");
}

QExpr build(const DvfSpec& sp) {
    if (sp.kind == DvfSpec::Sl12Rect) return sl12_rect(sp.n, sp.n2);
    return build_terms(sp).expr();
}

}  // namespace cbethe
