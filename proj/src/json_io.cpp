#include "cbethe/json_io.hpp"

#include <stdexcept>

namespace cbethe {

using nlohmann::json;

json to_json(const QExpr& e) {
    json arr = json::array();
    for (const auto& m : e.terms) {
        json fs = json::array();
        for (const auto& f : m.factors) {
            json jf;
            jf["kind"] = f.kind == FactorKind::Q ? "Q" : "phi";
            if (f.kind == FactorKind::Q) jf["color"] = f.color;
            jf["shift"] = f.shift.str();
            jf["exp"] = f.exp;
            fs.push_back(jf);
        }
        arr.push_back({{"coef", m.coef.get_str()}, {"factors", fs}});
    }
    return arr;
}

QExpr qexpr_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expression JSON must be an array of terms");
    QExpr e;
    for (const auto& t : j) {
        QMonomial m;
        m.coef = mpz_class(t.at("coef").get<std::string>());
        for (const auto& f : t.at("factors")) {
            std::string kind = f.at("kind").get<std::string>();
            Rational sh = Rational::parse(f.at("shift").get<std::string>());
            int ex = f.at("exp").get<int>();
            if (ex == 0) throw std::invalid_argument("factor exponent must be nonzero");
            if (kind == "Q")
                m.mul(q_factor(f.at("color").get<int>(), sh, ex));
            else if (kind == "phi")
                m.mul(phi_factor(sh, ex));
            else
                throw std::invalid_argument("unknown factor kind '" + kind + "'");
        }
        e.terms.push_back(std::move(m));
    }
    return normalize(e);
}

std::string mode_name(VerifyMode m) {
    switch (m) {
        case VerifyMode::Exact: return "exact";
        case VerifyMode::Numeric: return "numeric";
        case VerifyMode::Both: return "both";
    }
    return "exact";
}

namespace {

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

json to_json(const DvfReport& r) {
    json j;
    j["check"] = r.check;
    j["mode"] = mode_name(r.mode);
    json sites = json::array();
    json details = json::array();
    for (const auto& s : r.sites) {
        json js;
        js["color"] = s.site.color;
        js["shift"] = s.site.shift.str();
        js["verdict"] = verdict(s.pass);
        if (s.exact) {
            json pairs = json::array();
            for (auto [x, y] : s.exact->pairs) pairs.push_back({x, y});
            js["exact"] = {{"participants", s.exact->participants},
                           {"pairs", pairs},
                           {"vanishing", s.exact->vanishing},
                           {"leftovers", s.exact->leftovers},
                           {"group_pass", s.exact->group_pass},
                           {"verdict", verdict(s.exact->pass)}};
            if (!s.exact->note.empty()) details.push_back("site (" + std::to_string(s.site.color) + ", " +
                                                          s.site.shift.str() + "): " + s.exact->note);
        }
        if (s.numeric)
            js["numeric"] = {{"total", s.numeric->total},
                             {"max_term", s.numeric->max_term},
                             {"relative", s.numeric->relative},
                             {"restarts", s.numeric->restarts},
                             {"verdict", verdict(s.numeric->pass)}};
        sites.push_back(js);
    }
    j["sites"] = sites;
    if (r.prefactor_divisible) j["prefactor_divisible"] = *r.prefactor_divisible;
    if (r.prefactor_site_clear) j["prefactor_site_clear"] = *r.prefactor_site_clear;
    j["verdict"] = verdict(r.pass);
    j["details"] = details;
    return j;
}

json to_json(const RelationReport& r) {
    json j;
    j["check"] = r.id;
    j["algebra"] = r.algebra;
    j["mode"] = "sampled";
    json samples = json::array();
    json details = json::array();
    for (const auto& i : r.instances) {
        samples.push_back({{"name", i.name}, {"kind", i.kind}, {"samples", i.samples}, {"verdict", verdict(i.pass)}});
        if (!i.detail.empty()) details.push_back(i.name + ": " + i.detail);
    }
    j["samples"] = samples;
    j["verdict"] = verdict(r.pass);
    j["details"] = details;
    return j;
}

}  // namespace cbethe
