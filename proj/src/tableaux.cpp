#include "cbethe/tableaux.hpp"

#include "cbethe/errors.hpp"

#include <json.hpp>

#include <functional>

namespace cbethe {

Letter Letter::parse(const std::string& text, int s) {
    std::string t = text;
    bool bar = !t.empty() && t.back() == 'b';
    if (bar) t.pop_back();
    if (t.empty() || t.size() > 3 || t.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad letter '" + text + "'");
    int i = std::stoi(t);
    if (i < 1 || i > s) throw UsageError("letter '" + text + "' outside 1.." + std::to_string(s));
    return {i, bar};
}

std::vector<Letter> alphabet(int s) {
    std::vector<Letter> out;
    for (int i = 1; i <= s; ++i) out.push_back({i, false});
    for (int i = s; i >= 1; --i) out.push_back({i, true});
    return out;
}

bool precedes(int s, const Letter& a, const Letter& b) { return a.rank_in(s) < b.rank_in(s); }

Shape Shape::parse(const std::string& text) {
    Shape sh;
    std::string num;
    if (text.rfind("col:", 0) == 0) {
        sh.kind = Column;
        num = text.substr(4);
    } else if (text.rfind("row:", 0) == 0) {
        sh.kind = Row;
        num = text.substr(4);
    } else {
        throw UsageError("bad shape '" + text + "', expected col:a or row:m");
    }
    if (num.empty() || num.size() > 4 || num.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("bad shape '" + text + "', expected col:a or row:m");
    sh.n = std::stoi(num);
    return sh;
}

std::string Tableau::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) out += (i ? " " : "") + entries[i].str();
    return out;
}

int Tableau::parity_sum() const {
    int p = 0;
    for (const auto& l : entries) p += l.parity();
    return p;
}

static bool column_pair_ok(int s, const Letter& a, const Letter& b) {
    if (a.parity() == 0 && b.parity() == 0) return precedes(s, a, b);
    if (a == Letter{s, true} && b == Letter{s, false}) return true;
    return !precedes(s, b, a);
}

// The s/sbar run of a column has the form s^l (sbar s)^n sbar^r, so an
// exceptional (sbar, s) step is neither preceded by sbar nor followed by s.
static bool column_run_ok(int s, const std::vector<Letter>& e, std::size_t k) {
    const Letter sb{s, true}, sv{s, false};
    if (!(e[k] == sb && e[k + 1] == sv)) return true;
    if (k > 0 && e[k - 1] == sb) return false;
    if (k + 2 < e.size() && e[k + 2] == sv) return false;
    return true;
}

bool admissible_column(int s, const std::vector<Letter>& e) {
    for (std::size_t k = 0; k + 1 < e.size(); ++k)
        if (!column_pair_ok(s, e[k], e[k + 1]) || !column_run_ok(s, e, k)) return false;
    return true;
}

bool admissible_row(int s, const std::vector<Letter>& e) {
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
        const auto& a = e[k];
        const auto& b = e[k + 1];
        if (a.parity() == 1 && b.parity() == 1 && !precedes(s, a, b)) return false;
        if (precedes(s, b, a)) return false;
    }
    // i_j = d, i_k = dbar (positions 1-based) requires s + j - k >= d.
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j].barred) continue;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k].barred || e[k].index != e[j].index) continue;
            long lhs = s + static_cast<long>(j) - static_cast<long>(k);
            if (lhs < e[j].index) return false;
        }
    }
    return true;
}

static std::vector<Tableau> enumerate(int s, Shape shape,
                                      const std::function<bool(const std::vector<Letter>&)>& prefix_ok) {
    std::vector<Tableau> out;
    std::vector<Letter> cur;
    auto letters = alphabet(s);
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == shape.n) {
            out.push_back({shape, cur});
            return;
        }
        for (const auto& l : letters) {
            cur.push_back(l);
            if (prefix_ok(cur)) rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

std::vector<Tableau> enumerate_column(int s, int a) {
    if (a < 0) throw UsageError("column height must be >= 0");
    return enumerate(s, {Shape::Column, a}, [s](const std::vector<Letter>& e) {
        if (e.size() < 2) return true;
        std::size_t k = e.size() - 2;
        if (!column_pair_ok(s, e[k], e[k + 1]) || !column_run_ok(s, e, k)) return false;
        return k == 0 || column_run_ok(s, e, k - 1);
    });
}

std::vector<Tableau> enumerate_row(int s, int m) {
    if (m < 0 || m > s - 1) throw UsageError("row shape requires m <= s-1; use dvf def:m");
    // Every condition only involves earlier positions, so prefixes can be pruned.
    return enumerate(s, {Shape::Row, m}, [s](const std::vector<Letter>& e) { return admissible_row(s, e); });
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class column_count_summand(int s, int a, int n) {
    auto f = [s](long k) -> mpz_class { return binomial(k + s - 2, k) + binomial(k + s - 3, k - 1); };
    mpz_class sum = 0;
    long top = a - 2L * n;
    for (long k = 0; k <= top; ++k) sum += f(k) * f(top - k);
    return sum;
}

mpz_class count_column_formula(int s, int a) {
    mpz_class sum = 0;
    for (int n = 0; n <= a / 2; ++n) sum += column_count_summand(s, a, n);
    return sum;
}

mpz_class count_row_formula(int s, int m) {
    mpz_class sum = 0;
    for (long k = 0; k <= m; ++k) sum += (binomial(2L * s - 2, k) - binomial(2L * s - 2, k - 2)) * (m - k + 1);
    return sum;
}

BasisVector letter_weight(const AlgebraId& g, const Letter& l) {
    BasisVector v = l.index == 1 ? eps(g) : delta(g, l.index - 1);
    return l.barred ? -v : v;
}

BasisVector tableau_weight(const AlgebraId& g, const std::vector<Letter>& entries) {
    BasisVector w(g.basis_size());
    for (const auto& l : entries) w += letter_weight(g, l);
    return w;
}

static nlohmann::json to_json(const Tableau& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& l : t.entries) entries.push_back(l.str());
    return {{"shape", t.shape.str()}, {"entries", entries}};
}

std::string tableau_json(const Tableau& t) { return to_json(t).dump(); }

std::string tableaux_json(const std::vector<Tableau>& ts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    return arr.dump(2);
}

}  // namespace cbethe
