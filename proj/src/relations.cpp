#include "cbethe/tsystem.hpp"
#include "cbethe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>

namespace cbethe {

namespace {

const std::vector<std::string> kTsys = {"tsys1", "tsys-a2", "tsys-mid", "tsys-even", "tsys-odd", "tsys-last",
                                        "tsys-probe"};
const std::vector<std::string> kRankTwo = {"eq-c2-1", "eq-c2-2", "dotfun1", "dotfun2", "hiro", "vani", "alta",
                                        "c2-sl12"};

bool rank_two(const AlgebraId& g) { return g.family == Family::SL12 || g.s == 2; }

std::string str_of(int n) { return std::to_string(n); }

// Builders memoized for one relation run.
class Cache {
public:
    explicit Cache(int s) : s_(s) {}

    // T_m^{(1)} for any integer m.
    const QExpr& row(int m) {
        auto it = row_.find(m);
        if (it != row_.end()) return it->second;
        QExpr e = m >= 0 ? row_dvf(s_, m) : negative_row_dvf(s_, -m);
        return row_.emplace(m, std::move(e)).first->second;
    }
    // T_1^{(a)}.
    const QExpr& fund(int a) {
        if (a == 1) return row(1);
        auto it = fund_.find(a);
        if (it != fund_.end()) return it->second;
        return fund_.emplace(a, fundamental_dvf(s_, a)).first->second;
    }
    const QExpr& def(const Rational& c) {
        auto it = def_.find(c);
        if (it != def_.end()) return it->second;
        return def_.emplace(c, deformed(s_, c)).first->second;
    }

private:
    int s_;
    std::map<int, QExpr> row_, fund_;
    std::map<Rational, QExpr> def_;
};

// f(u - h) f(u + h)
PointFn bilinear(const QExpr& f, const Rational& h) { return times(at(f, -h), at(f, h)); }

struct Runner {
    AlgebraId g;
    std::uint64_t seed;
    int samples;
    std::uint64_t salt = 0;
    RelationReport rep;

    void sampled(const std::string& name, const PointFn& l, const PointFn& r, const AlgebraId& alg) {
        ++salt;
        rep.instances.push_back(sampled_equality(name, alg, l, r, seed * 7919ULL + salt, samples));
    }
    void sampled(const std::string& name, const PointFn& l, const PointFn& r) { sampled(name, l, r, g); }
    void structural(const std::string& name, bool ok, const std::string& detail = {}) {
        InstanceResult i;
        i.name = name;
        i.kind = "structural";
        i.pass = ok;
        i.detail = detail;
        rep.instances.push_back(std::move(i));
    }
};

// ---- (i), (ii), (iii) ----

void product_t1(Runner& r, Cache& c) {
    int s = r.g.s;
    r.sampled("T1(u-1/2)T1(u+1/2) = T_2 + T^2", bilinear(c.row(1), Rational(1, 2)),
              plus(at(c.row(2)), at(column_dvf(s, 2))));
}

void deformed_bilinear(Runner& r, Cache& c) {
    std::vector<std::pair<Rational, Rational>> cd = {
        {Rational(7, 2), Rational(1)}, {Rational(2), Rational(1, 2)}, {Rational(-1), Rational(3)}};
    std::mt19937_64 rng(r.seed);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
    for (int i = 0; i < 2; ++i) cd.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    for (const auto& [cv, d] : cd) {
        if (d.is_zero()) continue;
        r.sampled("c=" + cv.str() + ", d=" + d.str(), bilinear(c.def(cv), d / Rational(2)),
                  times(at(c.def(cv - d)), at(c.def(cv + d))));
    }
}

void special(Runner& r, Cache& c, int which) {
    const int s = r.g.s;
    const Rational h(1, 2);
    auto T = [&](int m) -> const QExpr& { return c.row(m); };
    auto sum = [&](const QExpr& a, const QExpr& b) { return add(a, b); };
    auto name = [&](int m) { return "m=" + str_of(m); };
    switch (which) {
        case 1:
            for (int m = 1; m <= s - 3; ++m)
                r.sampled(name(m), bilinear(sum(T(m), c.fund(m + 2)), h),
                          times(at(sum(T(m - 1), c.fund(m + 1))), at(sum(T(m + 1), c.fund(m + 3)))));
            break;
        case 2:
            r.sampled("m=s-2", bilinear(sum(T(s - 2), c.fund(s)), h),
                      times(at(sum(T(s - 3), c.fund(s - 1))), at(T(s - 1))));
            break;
        case 3:
            r.sampled("m=s-1", bilinear(T(s - 1), h),
                      times(at(sum(T(s - 2), c.fund(s))), at(sum(T(s), T(s - 2)))));
            break;
        case 4:
            r.sampled("m=s", bilinear(sum(T(s), T(s - 2)), h),
                      times(at(T(s - 1)), at(sum(T(s + 1), T(s - 3)))));
            break;
        case 5:
            for (int m = s + 1; m <= 2 * s - 3; ++m)
                r.sampled(name(m), bilinear(sum(T(m), T(2 * s - m - 2)), h),
                          times(at(sum(T(m - 1), T(2 * s - m - 1))), at(sum(T(m + 1), T(2 * s - m - 3)))));
            break;
        case 6:
            r.sampled("m=2s-2", bilinear(sum(T(2 * s - 2), QExpr::one()), h),
                      times(at(T(2 * s - 1)), at(sum(T(2 * s - 3), T(1)))));
            break;
        case 7:
            r.sampled("m=2s-1", bilinear(T(2 * s - 1), h), times(at(sum(T(2 * s - 2), QExpr::one())), at(T(2 * s))));
            break;
        case 8:
            for (int m = 2 * s; m <= 2 * s + 1; ++m)
                r.sampled(name(m), bilinear(T(m), h), times(at(T(m - 1)), at(T(m + 1))));
            break;
    }
    if (r.rep.instances.empty()) r.structural("no instance in range for s = " + str_of(s), true, "vacuous");
}

// ---- T-system ----

void tsys1(Runner& r, Cache& c, const AlgebraId& alg) {
    const Rational h(1, 2);
    for (int m = 1; m <= 3; ++m) {
        PointFn rhs = m == 1 ? times(at(c.row(-2)), at(add(c.fund(2), QExpr::one())))
                             : times(at(c.row(-m + 1)), at(c.row(-m - 1)));
        r.sampled("m=" + str_of(m), bilinear(c.row(-m), h), rhs, alg);
    }
}

// Recursion-side equation with index k for row a, both sides from the
// pointwise evaluator.
PointFn tsys_side(std::shared_ptr<TSystemData> data, int a, int k, bool left) {
    return [data, a, k, left](const RootAssignment& A, const Rational& u) {
        TSystem<Rational> t(data, A);
        if (left) {
            Rational h = TSystem<Rational>::half_step(data->s(), a);
            return t.value(a, k, u - h) * t.value(a, k, u + h);
        }
        return t.value(a, k + 1, u) * t.value(a, k - 1, u) + t.coupling(a, k, u);
    };
}

void tsys_rows(Runner& r, const std::string& id) {
    const int s = r.g.s;
    auto data = std::make_shared<TSystemData>(s);
    std::vector<std::pair<int, int>> eqs;  // (a, k)
    for (int m = 1; m <= 3; ++m) {
        if (id == "tsys-a2" && s >= 4) eqs.emplace_back(2, m);
        if (id == "tsys-mid")
            for (int a = 3; a <= s - 2; ++a) eqs.emplace_back(a, m);
        if (id == "tsys-even") eqs.emplace_back(s - 1, 2 * m);
        if (id == "tsys-odd") eqs.emplace_back(s - 1, 2 * m - 1);
        if (id == "tsys-last") eqs.emplace_back(s, m);
    }
    if (eqs.empty()) {
        r.structural("no equation of this type for s = " + str_of(s), true, "vacuous");
        return;
    }
    for (auto [a, k] : eqs) {
        std::size_t before = r.rep.instances.size();
        r.sampled("a=" + str_of(a) + ", index " + str_of(k), tsys_side(data, a, k, true),
                  tsys_side(data, a, k, false));
        r.rep.instances[before].kind = "recursion";
    }
}

// Exactness of the recursion's division: at complex zeros u0 of T_{n-2}^{(a)}
// the numerator T_{n-1}(u0-h)T_{n-1}(u0+h) - coupling must vanish, otherwise
// T_n^{(a)} acquires poles off the Q-function zeros.
InstanceResult probe(const std::shared_ptr<TSystemData>& data, int a, int n, std::uint64_t seed) {
    InstanceResult res;
    res.kind = "probe";
    res.name = "a=" + str_of(a) + ", n=" + str_of(n);
    std::mt19937_64 rng(seed);
    const int s = data->s();
    std::vector<int> counts(s, 2);
    int zeros = 0, tries = 0;
    double worst = 0;
    while (zeros < 3 && tries < 60) {
        ++tries;
        ComplexAssignment A = random_complex_assignment(counts, 0, rng);
        TSystem<Complex> t(data, A);
        Complex u = random_complex(rng, 4.0);
        bool ok = false;
        try {
            for (int it = 0; it < 80; ++it) {
                Complex f = t.value(a, n - 2, u);
                const double h = 1e-6;
                Complex d = (t.value(a, n - 2, u + h) - t.value(a, n - 2, u - h)) / (2.0 * h);
                if (!std::isfinite(std::abs(f)) || std::abs(d) == 0.0) break;
                Complex step = f / d;
                u -= step;
                if (std::abs(step) < 1e-13 * (1.0 + std::abs(u))) {
                    ok = true;
                    break;
                }
            }
            if (!ok || std::abs(u) > 50) continue;
            Complex hh(TSystem<Complex>::half_step(s, a).to_double(), 0.0);
            Complex p = t.value(a, n - 1, u - hh) * t.value(a, n - 1, u + hh);
            Complex cpl = t.coupling(a, n - 1, u);
            double scale = std::max(std::abs(p), std::abs(cpl));
            if (!(scale > 1e-12) || !std::isfinite(scale)) continue;
            worst = std::max(worst, std::abs(p - cpl) / scale);
            ++zeros;
        } catch (const std::exception&) {
            continue;
        }
    }
    res.samples = zeros;
    res.pass = zeros > 0 && worst < kProbeTolerance;
    char buf[96];
    std::snprintf(buf, sizeof buf, "zeros probed %d, worst relative numerator %.3e", zeros, worst);
    res.detail = buf;
    return res;
}

void tsys_probe(Runner& r) {
    auto data = std::make_shared<TSystemData>(r.g.s);
    for (int a = 2; a <= r.g.s; ++a)
        for (int n = 3; n <= 4; ++n) r.rep.instances.push_back(probe(data, a, n, r.seed * 31ULL + a * 7ULL + n));
}

// ---- rank two ----

void eq_c2_2(Runner& r, Cache& c) {
    const AlgebraId c2 = AlgebraId::c(2);
    for (int m = 1; m <= 3; ++m)
        r.sampled("m=" + str_of(m), bilinear(sl12_row(m), Rational(1)),
                  plus(times(at(sl12_row(m + 1)), at(sl12_row(m - 1))), at(c.row(-2 * m))), c2);
}

void dotfun1(Runner& r) {
    const AlgebraId g = AlgebraId::sl12();
    for (int m = 1; m <= 3; ++m) {
        PointFn rhs = m == 1 ? times(at(sl12_param(-2)), at(add(sl12_row(1), QExpr::one())))
                             : times(at(sl12_param(-m + 1)), at(sl12_param(-m - 1)));
        r.sampled("m=" + str_of(m), bilinear(sl12_param(-m), Rational(1)), rhs, g);
    }
}

void dotfun2(Runner& r) {
    const AlgebraId g = AlgebraId::sl12();
    for (int m = 1; m <= 3; ++m)
        r.sampled("m=" + str_of(m), bilinear(sl12_row(m), Rational(1)),
                  plus(times(at(sl12_row(m + 1)), at(sl12_row(m - 1))), at(sl12_param(-m))), g);
}

void hiro(Runner& r) {
    const AlgebraId g = AlgebraId::sl12();
    std::map<std::pair<int, int>, QExpr> F;
    auto rect = [&](int m, int a) -> const QExpr& {
        auto key = std::make_pair(m, a);
        auto it = F.find(key);
        if (it == F.end()) it = F.emplace(key, sl12_rect(m, a)).first;
        return it->second;
    };
    for (int a = 1; a <= 3; ++a)
        for (int m = 1; m <= 3; ++m)
            r.sampled("m=" + str_of(m) + ", a=" + str_of(a), bilinear(rect(m, a), Rational(1)),
                      plus(times(at(rect(m - 1, a)), at(rect(m + 1, a))),
                           times(at(rect(m, a - 1)), at(rect(m, a + 1)))),
                      g);
}

void vani(Runner& r) {
    for (int m = 3; m <= 4; ++m)
        for (int a = 2; a <= 3; ++a) {
            QExpr e = normalize(sl12_rect(m, a));
            r.structural("m=" + str_of(m) + ", a=" + str_of(a), e.empty(), str_of(static_cast<int>(e.size())) + " terms");
        }
}

void alta(Runner& r) {
    for (int a = 1; a <= 3; ++a) {
        QExpr l = normalize(sl12_rect(2, a));
        QExpr rr = normalize(sl12_rect_entry(a + 1));
        r.structural("a=" + str_of(a), l == rr,
                     str_of(static_cast<int>(l.size())) + " vs " + str_of(static_cast<int>(rr.size())) + " terms");
    }
}

void c2_sl12(Runner& r, Cache& c) {
    const AlgebraId c2 = AlgebraId::c(2);
    for (int m = -3; m <= 6; ++m)
        r.sampled("T_" + str_of(m) + "^(1) = F_" + Rational(m, 2).str() + "^(1)", at(c.row(m)),
                  at(sl12_param(Rational(m, 2))), c2);
    auto data = std::make_shared<TSystemData>(2);
    for (int m = 1; m <= 3; ++m) {
        PointFn t = [data, m](const RootAssignment& A, const Rational& u) {
            TSystem<Rational> ts(data, A);
            return ts.value(2, m, u);
        };
        r.sampled("T_" + str_of(m) + "^(2) = F_" + str_of(m) + "^(2)", t, at(sl12_row(m)), c2);
    }
}

bool is_rank_two_id(const std::string& id) { return std::find(kRankTwo.begin(), kRankTwo.end(), id) != kRankTwo.end(); }

}  // namespace

std::vector<std::string> relation_ids(const AlgebraId& g) {
    if (rank_two(g)) return kRankTwo;
    std::vector<std::string> ids = {"product-t1", "deformed-bilinear"};
    for (int i = 1; i <= 8; ++i) ids.push_back("special-" + str_of(i));
    ids.insert(ids.end(), kTsys.begin(), kTsys.end());
    return ids;
}

std::vector<std::string> expand_relation(const std::string& id, const AlgebraId& g) {
    if (id == "all") return relation_ids(g);
    if (id == "i") return {"product-t1"};
    if (id == "ii") return {"deformed-bilinear"};
    if (id == "iii") {
        std::vector<std::string> v;
        for (int i = 1; i <= 8; ++i) v.push_back("special-" + str_of(i));
        return v;
    }
    if (id == "tsys") return rank_two(g) ? std::vector<std::string>{"eq-c2-1", "eq-c2-2"} : kTsys;
    if (id == "v") return kRankTwo;
    auto ids = relation_ids(g);
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw UsageError("unknown relation '" + id + "' for " + g.str());
    return {id};
}

RelationReport relation_check(const std::string& id, const AlgebraId& g, std::uint64_t seed, int samples) {
    if (samples < 1) throw UsageError("samples must be >= 1");
    bool rank2 = is_rank_two_id(id);
    if (rank2 && !rank_two(g)) throw UsageError("relation '" + id + "' is defined for C:2 / sl12 only");
    if (!rank2 && (g.family != Family::C || g.s < 3))
        throw UsageError("relation '" + id + "' needs C(s) with s >= 3");
    Runner r{g, seed, samples, 0, {}};
    r.rep.id = id;
    r.rep.algebra = g.str();
    Cache cache(rank2 ? 2 : g.s);
    if (id == "product-t1") {
        product_t1(r, cache);
    } else if (id == "deformed-bilinear") {
        deformed_bilinear(r, cache);
    } else if (id.rfind("special-", 0) == 0) {
        int k = std::stoi(id.substr(8));
        if (k < 1 || k > 8) throw UsageError("unknown relation '" + id + "'");
        special(r, cache, k);
    } else if (id == "tsys1") {
        tsys1(r, cache, g);
    } else if (id == "tsys-probe") {
        tsys_probe(r);
    } else if (id.rfind("tsys-", 0) == 0) {
        if (std::find(kTsys.begin(), kTsys.end(), id) == kTsys.end()) throw UsageError("unknown relation '" + id + "'");
        tsys_rows(r, id);
    } else if (id == "eq-c2-1") {
        tsys1(r, cache, AlgebraId::c(2));
    } else if (id == "eq-c2-2") {
        eq_c2_2(r, cache);
    } else if (id == "dotfun1") {
        dotfun1(r);
    } else if (id == "dotfun2") {
        dotfun2(r);
    } else if (id == "hiro") {
        hiro(r);
    } else if (id == "vani") {
        vani(r);
    } else if (id == "alta") {
        alta(r);
    } else if (id == "c2-sl12") {
        c2_sl12(r, cache);
    } else {
        throw UsageError("unknown relation '" + id + "'");
    }
    r.rep.pass = !r.rep.instances.empty();
    for (const auto& i : r.rep.instances) r.rep.pass = r.rep.pass && i.pass;
    return r.rep;
}

}  // namespace cbethe
