#include "cbethe/verify.hpp"

#include "cbethe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace cbethe {

std::vector<PoleSite> scan_poles(const QExpr& e) {
    std::set<std::pair<int, Rational>> seen;
    for (const auto& m : e.terms)
        for (const auto& f : m.factors)
            if (f.kind == FactorKind::Q && f.exp < 0) seen.emplace(f.color, f.shift);
    std::vector<PoleSite> out;
    for (const auto& [c, sh] : seen) out.push_back({c, sh});
    return out;
}

namespace {

std::vector<Rational> gaps_of(const AlgebraId& g) {
    std::vector<Rational> gaps;
    for (int a = 1; a <= g.rank(); ++a) gaps.push_back(cartan(g, a, a));
    return gaps;
}

RootAssignment sample_assignment(const AlgebraId& g, Vacuum vacuum, const SampleShape& shape,
                                 std::mt19937_64& rng) {
    std::vector<int> counts(g.rank(), shape.roots_per_color);
    int ninh = vacuum == Vacuum::Fundamental ? shape.inhomogeneities : 0;
    return random_assignment(counts, ninh, gaps_of(g), rng);
}

// Residues of each participant and the BAE ratio, one row per (sample, root index).
struct ResidueTable {
    std::vector<Rational> ratio;
    std::vector<std::vector<Rational>> res;  // res[row][participant]
};

ResidueTable collect(const QExpr& e, const AlgebraId& g, Vacuum vacuum, const PoleSite& site,
                     const std::vector<int>& parts, std::uint64_t seed, int samples, const SampleShape& shape) {
    std::mt19937_64 rng(seed);
    QExpr rexpr = bae_ratio_expr(g, site.color, vacuum);
    ResidueTable t;
    int done = 0, attempts = 0;
    while (done < samples) {
        if (++attempts > 20 * samples + 20) throw NonSimplePole("could not draw generic root assignments");
        RootAssignment a = sample_assignment(g, vacuum, shape, rng);
        std::vector<Rational> ratio;
        std::vector<std::vector<Rational>> rows;
        try {
            for (int k = 1; k <= shape.roots_per_color; ++k) {
                Rational x = a.roots[site.color - 1][k - 1];
                ratio.push_back(evaluate(rexpr, a, x));
                std::vector<Rational> row;
                for (int i : parts) row.push_back(residue(e.terms[i], a, site.color, k, site.shift));
                rows.push_back(std::move(row));
            }
        } catch (const PoleHit&) {
            continue;
        } catch (const NonSimplePole&) {
            continue;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            t.ratio.push_back(ratio[r]);
            t.res.push_back(std::move(rows[r]));
        }
        ++done;
    }
    return t;
}

bool column_zero(const ResidueTable& t, std::size_t j) {
    for (const auto& row : t.res)
        if (!row[j].is_zero()) return false;
    return true;
}

// res_y == R^e res_x on every row.
bool related(const ResidueTable& t, std::size_t x, std::size_t y, int e) {
    for (std::size_t r = 0; r < t.res.size(); ++r) {
        Rational lhs = t.res[r][y];
        Rational rhs = t.res[r][x];
        if (e > 0) rhs *= t.ratio[r].pow(e);
        if (e < 0) lhs *= t.ratio[r].pow(-e);
        if (lhs != rhs) return false;
    }
    return true;
}

// Leftovers proportional to a reference with factors c_i R^{e_i} and
// sum c_i (-1)^{e_i} = 0 cancel as a group.
bool group_cancels(const ResidueTable& t, const std::vector<std::size_t>& cols) {
    if (cols.empty()) return true;
    std::size_t ref = cols.front();
    std::size_t row0 = t.res.size();
    for (std::size_t r = 0; r < t.res.size(); ++r)
        if (!t.res[r][ref].is_zero()) {
            row0 = r;
            break;
        }
    if (row0 == t.res.size()) return false;
    Rational total;
    for (std::size_t j : cols) {
        bool found = false;
        for (int e = -2; e <= 2 && !found; ++e) {
            Rational base = t.res[row0][ref] * t.ratio[row0].pow(e);
            if (base.is_zero()) continue;
            Rational c = t.res[row0][j] / base;
            bool ok = true;
            for (std::size_t r = 0; r < t.res.size() && ok; ++r)
                ok = t.res[r][j] == c * t.res[r][ref] * t.ratio[r].pow(e);
            if (ok) {
                found = true;
                total += (e % 2 == 0) ? c : -c;
            }
        }
        if (!found) return false;
    }
    return total.is_zero();
}

}  // namespace

CancellationReport exact_cancellation_check(const QExpr& e, const AlgebraId& g, Vacuum vacuum,
                                            const PoleSite& site, std::uint64_t seed, int samples,
                                            SampleShape shape) {
    CancellationReport rep;
    rep.site = site;
    for (std::size_t i = 0; i < e.terms.size(); ++i)
        if (e.terms[i].exponent_of(FactorKind::Q, site.color, site.shift) < 0)
            rep.participants.push_back(static_cast<int>(i));
    if (rep.participants.empty()) {
        rep.pass = true;
        rep.note = "no term has this pole";
        return rep;
    }
    for (int i : rep.participants)
        if (e.terms[i].exponent_of(FactorKind::Q, site.color, site.shift) != -1) {
            rep.note = "non-simple pole in term " + std::to_string(i);
            rep.leftovers = rep.participants;
            return rep;
        }
    ResidueTable t;
    try {
        t = collect(e, g, vacuum, site, rep.participants, seed, samples, shape);
    } catch (const NonSimplePole& ex) {
        rep.note = ex.what();
        rep.leftovers = rep.participants;
        return rep;
    }
    const std::size_t n = rep.participants.size();
    std::vector<bool> used(n, false);
    for (std::size_t j = 0; j < n; ++j)
        if (column_zero(t, j)) {
            used[j] = true;
            rep.vanishing.push_back(rep.participants[j]);
        }
    for (std::size_t x = 0; x < n; ++x) {
        if (used[x]) continue;
        for (std::size_t y = x + 1; y < n; ++y) {
            if (used[y]) continue;
            if (related(t, x, y, 1) || related(t, x, y, -1)) {
                used[x] = used[y] = true;
                rep.pairs.emplace_back(rep.participants[x], rep.participants[y]);
                break;
            }
        }
    }
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) {
            rest.push_back(j);
            rep.leftovers.push_back(rep.participants[j]);
        }
    if (rest.empty()) {
        rep.pass = true;
    } else {
        rep.group_pass = group_cancels(t, rest);
        rep.pass = rep.group_pass;
        if (!rep.pass) rep.note = std::to_string(rest.size()) + " unpaired term(s)";
    }
    return rep;
}

namespace {

double rel_gap(const Complex& a) { return std::abs(a); }

// R = num / den with both sides polynomial in the roots; Newton runs on num + den.
std::pair<QMonomial, QMonomial> split_ratio(const QExpr& r) {
    QMonomial num, den;
    const QMonomial& m = r.terms.front();
    num.coef = m.coef;
    for (const auto& f : m.factors) {
        QFactor g = f;
        if (f.exp > 0) {
            num.mul(g);
        } else {
            g.exp = -f.exp;
            den.mul(g);
        }
    }
    return {num, den};
}

}  // namespace

NumericResidue numeric_total_residue(const QExpr& e, const AlgebraId& g, Vacuum vacuum, const PoleSite& site,
                                     std::uint64_t seed, PhiMode phi, SampleShape shape) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto [rnum, rden] = split_ratio(bae_ratio_expr(g, site.color, vacuum));
    std::vector<int> counts(g.rank(), shape.roots_per_color);
    int ninh = vacuum == Vacuum::Fundamental ? shape.inhomogeneities : 0;
    NumericResidue out;
    const int b = site.color;
    for (int attempt = 0; attempt <= 20; ++attempt) {
        out.restarts = attempt;
        ComplexAssignment a = random_complex_assignment(counts, ninh, rng, phi);
        auto f = [&](const Complex& x) {
            a.roots[b - 1][0] = x;
            Complex d = evaluate(rden, a, x);
            return (evaluate(rnum, a, x) + d) / (1.0 + std::abs(d));
        };
        Complex x = a.roots[b - 1][0];
        bool converged = false;
        try {
            for (int it = 0; it < 50; ++it) {
                Complex fx = f(x);
                if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) break;
                if (rel_gap(fx) < 1e-13) {
                    converged = true;
                    break;
                }
                const double h = 1e-6;
                Complex d = (f(x + h) - f(x - h)) / (2.0 * h);
                if (std::abs(d) == 0.0) break;
                Complex step = fx / d;
                x -= step;
                if (std::abs(step) < 1e-13 * (1.0 + std::abs(x))) {
                    converged = rel_gap(f(x)) < 1e-10;
                    break;
                }
            }
        } catch (const PoleHit&) {
            converged = false;
        }
        if (!converged) continue;
        a.roots[b - 1][0] = x;
        try {
            Complex total(0.0, 0.0);
            double mx = 0;
            for (const auto& m : e.terms) {
                Complex r = residue(m, a, site.color, 1, site.shift);
                total += r;
                mx = std::max(mx, std::abs(r));
            }
            out.total = std::abs(total);
            out.max_term = mx;
            out.relative = mx > 0 ? out.total / mx : 0.0;
            out.pass = out.relative < kNumericTolerance;
            return out;
        } catch (const NonSimplePole&) {
            continue;
        } catch (const PoleHit&) {
            continue;
        }
    }
    throw NoConvergence("Newton solve of the BAE did not converge after 20 restarts");
}

DvfReport verify_dvf(const QExpr& e0, const AlgebraId& g, Vacuum vacuum, VerifyMode mode, std::uint64_t seed,
                     int samples, const std::string& name) {
    QExpr e = normalize(e0);
    DvfReport rep;
    rep.check = name;
    rep.mode = mode;
    rep.pass = true;
    std::uint64_t salt = 0;
    for (const auto& site : scan_poles(e)) {
        SiteReport sr;
        sr.site = site;
        ++salt;
        std::uint64_t sseed = seed * 1000003ULL + salt;
        bool exact_ok = false, numeric_ok = false;
        if (mode != VerifyMode::Numeric) {
            sr.exact = exact_cancellation_check(e, g, vacuum, site, sseed, samples);
            exact_ok = sr.exact->pass;
        }
        if (mode != VerifyMode::Exact || !exact_ok) {
            try {
                sr.numeric = numeric_total_residue(e, g, vacuum, site, sseed);
                numeric_ok = sr.numeric->pass;
            } catch (const NoConvergence&) {
                sr.numeric = NumericResidue{};
            }
        }
        switch (mode) {
            case VerifyMode::Exact: sr.pass = exact_ok || numeric_ok; break;
            case VerifyMode::Numeric: sr.pass = numeric_ok; break;
            case VerifyMode::Both: sr.pass = exact_ok && numeric_ok; break;
        }
        rep.pass = rep.pass && sr.pass;
        rep.sites.push_back(std::move(sr));
    }
    return rep;
}

bool prefactor_site_clear(int s, const Rational& c, std::uint64_t seed, int samples) {
    // Unmerged product: prefactor residue times the row factor at the pole.
    const Rational shift = c / Rational(2) - Rational(s - 1);
    QExpr row = shift_expr(row_dvf(s, s - 1), (c - Rational(s - 1)) / Rational(2));
    QMonomial pre = deformation_prefactor(s, c);
    AlgebraId g = AlgebraId::c(s);
    std::mt19937_64 rng(seed);
    int done = 0, attempts = 0;
    while (done < samples) {
        if (++attempts > 20 * samples + 20) return false;
        RootAssignment a = sample_assignment(g, Vacuum::Trivial, {}, rng);
        try {
            Rational total;
            for (int k = 1; k <= 2; ++k) {
                Rational ustar = a.roots[0][k - 1] - shift;
                Rational rp = residue(pre, a, 1, k, shift);
                total += rp * evaluate(row, a, ustar);
            }
            if (!total.is_zero()) return false;
        } catch (const PoleHit&) {
            continue;
        } catch (const NonSimplePole&) {
            continue;
        }
        ++done;
    }
    return true;
}

DvfReport verify_spec(const DvfSpec& spec, VerifyMode mode, std::uint64_t seed, int samples) {
    QExpr e = build(spec);
    DvfReport rep = verify_dvf(e, spec.alg, spec.vacuum, mode, seed, samples, spec.str());
    if (spec.kind == DvfSpec::Deformed) {
        int s = spec.alg.s;
        rep.prefactor_divisible = deformation_divisible(s, spec.c);
        rep.prefactor_site_clear = prefactor_site_clear(s, spec.c, seed, samples);
        rep.pass = rep.pass && *rep.prefactor_divisible && *rep.prefactor_site_clear;
    }
    return rep;
}

FixtureMatch fixture_match(const Rational& c, std::uint64_t seed) {
    FixtureMatch r;
    QExpr built = normalize(deformed(3, c));
    QExpr fixture = normalize(explicit_c3_fixture(c));
    r.structural = built == fixture;
    InstanceResult ev = sampled_equality("explicit-c3", AlgebraId::c(3), at(deformed(3, c)),
                                         at(explicit_c3_fixture(c)), seed, 10);
    r.sampled = ev.pass;
    r.pass = r.structural && r.sampled;
    return r;
}

PointFn at(const QExpr& e, const Rational& shift) {
    return [e, shift](const RootAssignment& a, const Rational& u) { return evaluate(e, a, u + shift); };
}

PointFn times(PointFn a, PointFn b) {
    return [a = std::move(a), b = std::move(b)](const RootAssignment& r, const Rational& u) {
        return a(r, u) * b(r, u);
    };
}

PointFn plus(PointFn a, PointFn b) {
    return [a = std::move(a), b = std::move(b)](const RootAssignment& r, const Rational& u) {
        return a(r, u) + b(r, u);
    };
}

InstanceResult sampled_equality(const std::string& name, const AlgebraId& g, const PointFn& lhs,
                                const PointFn& rhs, std::uint64_t seed, int samples) {
    InstanceResult r;
    r.name = name;
    r.kind = "sampled";
    std::mt19937_64 rng(seed);
    std::vector<int> counts(g.rank(), 2);
    auto gaps = gaps_of(g);
    int attempts = 0;
    r.pass = true;
    while (r.samples < samples) {
        if (++attempts > 20 * samples + 20) {
            r.pass = false;
            r.detail = "too many pole hits while sampling";
            return r;
        }
        RootAssignment a = random_assignment(counts, 0, gaps, rng);
        Rational u = random_rational(rng);
        try {
            Rational l = lhs(a, u);
            Rational rv = rhs(a, u);
            ++r.samples;
            if (l != rv) {
                r.pass = false;
                r.detail = "mismatch at u = " + u.str() + ": " + l.str() + " vs " + rv.str();
                return r;
            }
        } catch (const PoleHit&) {
            continue;
        } catch (const std::domain_error&) {
            continue;  // recursion divisor vanished at this point
        }
    }
    return r;
}

}  // namespace cbethe
