// Command-line front end: enum, dvf, verify, dims, counts, strap.
#include "cbethe/dvf.hpp"
#include "cbethe/json_io.hpp"
#include "cbethe/repth.hpp"
#include "cbethe/strapgraph.hpp"
#include "cbethe/tableaux.hpp"
#include "cbethe/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cbethe;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

struct Options {
    std::string algebra = "C:3";
    std::uint64_t seed = 1;
    int samples = 20;
    std::string format = "json";
    std::string out;
    std::string shape, spec, vacuum = "trivial", relation, mode = "exact", labels;
    int col_max = 6, row_max = 5;
};

Vacuum parse_vacuum(const std::string& v) {
    if (v == "trivial") return Vacuum::Trivial;
    if (v == "fundamental") return Vacuum::Fundamental;
    throw UsageError("--vacuum must be trivial or fundamental, got '" + v + "'");
}

VerifyMode parse_mode(const std::string& m) {
    if (m == "exact") return VerifyMode::Exact;
    if (m == "numeric") return VerifyMode::Numeric;
    if (m == "both") return VerifyMode::Both;
    throw UsageError("--mode must be exact, numeric or both, got '" + m + "'");
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a) return;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
    throw UsageError("--format " + o.format + " not supported here; use one of: " + list);
}

int cmd_enum(const Options& o, std::ostream& os) {
    require_format(o, {"json", "table"});
    AlgebraId g = AlgebraId::parse(o.algebra);
    if (g.family != Family::C) throw UsageError("enum works on C(s) algebras");
    if (o.shape.empty()) throw UsageError("--shape is required (col:a or row:m)");
    Shape sh = Shape::parse(o.shape);
    auto ts = sh.kind == Shape::Column ? enumerate_column(g.s, sh.n) : enumerate_row(g.s, sh.n);
    if (o.format == "table") {
        for (const auto& t : ts) os << (t.entries.empty() ? "(empty)" : t.str()) << "\n";
        os << ts.size() << " tableaux\n";
    } else {
        os << tableaux_json(ts) << "\n";
    }
    return kPass;
}

int cmd_dvf(const Options& o, std::ostream& os) {
    require_format(o, {"json", "table"});
    AlgebraId g = AlgebraId::parse(o.algebra);
    if (o.spec.empty()) throw UsageError("--spec is required");
    DvfSpec sp = DvfSpec::parse(o.spec, g, parse_vacuum(o.vacuum));
    QExpr e = build(sp);
    if (o.format == "table") {
        for (const auto& m : e.terms) os << m.str() << "\n";
        os << e.size() << " terms\n";
    } else {
        os << to_json(e).dump(2) << "\n";
    }
    return kPass;
}

void reject_atypical(const DvfSpec& sp) {
    if (sp.kind != DvfSpec::Deformed) return;
    Weight w{sp.c, std::vector<Rational>(sp.alg.s - 1)};
    if (!is_typical(sp.alg.s, w))
        throw UsageError("def:" + sp.c.str() + " rejected: c = " + sp.c.str() +
                         " is in the excluded set {0..s-2} u {s..2s-2} (atypical)");
}

int cmd_verify(const Options& o, std::ostream& os) {
    require_format(o, {"json"});
    AlgebraId g = AlgebraId::parse(o.algebra);
    if (o.samples < 1) throw UsageError("--samples must be >= 1");
    if (o.spec.empty() == o.relation.empty()) throw UsageError("give exactly one of --spec or --relation");
    if (!o.spec.empty()) {
        DvfSpec sp = DvfSpec::parse(o.spec, g, parse_vacuum(o.vacuum));
        reject_atypical(sp);
        DvfReport r = verify_spec(sp, parse_mode(o.mode), o.seed, o.samples);
        os << to_json(r).dump(2) << "\n";
        return r.pass ? kPass : kFail;
    }
    auto ids = expand_relation(o.relation, g);
    json reports = json::array();
    bool all = true;
    for (const auto& id : ids) {
        RelationReport r = relation_check(id, g, o.seed, o.samples);
        all = all && r.pass;
        reports.push_back(to_json(r));
    }
    if (reports.size() == 1) {
        os << reports[0].dump(2) << "\n";
    } else {
        json j{{"check", o.relation}, {"algebra", g.str()}, {"reports", reports}, {"verdict", all ? "pass" : "fail"}};
        os << j.dump(2) << "\n";
    }
    return all ? kPass : kFail;
}

int cmd_dims(const Options& o, std::ostream& os) {
    require_format(o, {"json", "table"});
    AlgebraId g = AlgebraId::parse(o.algebra);
    if (g.family != Family::C) throw UsageError("dims works on C(s) algebras");
    if (o.labels.empty()) throw UsageError("--labels is required, e.g. \"0 4 0\"");
    KacDynkin b = KacDynkin::parse(o.labels, g.s);
    if (!is_finite_dimensional(g.s, b)) throw UsageError("labels " + b.str() + " are not finite dimensional");
    Weight w = labels_to_weight(g.s, b);
    mpz_class d = dim(g.s, w);
    if (o.format == "table") {
        os << d.get_str() << "\n";
    } else {
        json j{{"labels", b.str()}, {"typical", is_typical(g.s, w)}, {"dim", d.get_str()}};
        os << j.dump(2) << "\n";
    }
    return kPass;
}

int cmd_counts(const Options& o, std::ostream& os) {
    require_format(o, {"json", "table"});
    AlgebraId g = AlgebraId::parse(o.algebra);
    if (g.family != Family::C) throw UsageError("counts works on C(s) algebras");
    if (o.col_max < 0 || o.row_max < 0) throw UsageError("--col-max and --row-max must be >= 0");
    json cols = json::array(), rows = json::array();
    for (int a = 0; a <= o.col_max; ++a)
        cols.push_back({{"a", a},
                        {"enumerated", enumerate_column(g.s, a).size()},
                        {"formula", count_column_formula(g.s, a).get_str()}});
    for (int m = 0; m <= o.row_max; ++m) {
        json r{{"m", m}, {"terms", row_dvf(g.s, m).size()}};
        if (m <= g.s - 1) {
            r["enumerated"] = enumerate_row(g.s, m).size();
            r["formula"] = count_row_formula(g.s, m).get_str();
        }
        rows.push_back(r);
    }
    if (o.format == "json") {
        os << json{{"algebra", g.str()}, {"columns", cols}, {"rows", rows}}.dump(2) << "\n";
        return kPass;
    }
    os << "column T^a\n  a  enumerated  formula\n";
    for (const auto& c : cols)
        os << "  " << c["a"].get<int>() << "  " << c["enumerated"].get<std::size_t>() << "  "
           << c["formula"].get<std::string>() << "\n";
    os << "row T_m^(1)\n  m  terms  enumerated  formula\n";
    for (const auto& r : rows) {
        os << "  " << r["m"].get<int>() << "  " << r["terms"].get<std::size_t>();
        if (r.contains("enumerated"))
            os << "  " << r["enumerated"].get<std::size_t>() << "  " << r["formula"].get<std::string>();
        else
            os << "  -  -";
        os << "\n";
    }
    return kPass;
}

int cmd_strap(const Options& o, std::ostream& os) {
    require_format(o, {"json", "dot", "table"});
    AlgebraId g = AlgebraId::parse(o.algebra);
    if (o.spec.empty()) throw UsageError("--spec is required");
    DvfSpec sp = DvfSpec::parse(o.spec, g, parse_vacuum(o.vacuum));
    if (!sp.has_terms()) throw UsageError("spec '" + o.spec + "' has no tableau provenance for a strap");
    StrapGraph sg = build_strap(build_terms(sp), sp.vacuum, o.seed, o.samples);
    if (o.format == "dot") {
        os << to_dot(sg);
    } else if (o.format == "json") {
        os << to_json(sg) << "\n";
    } else {
        for (std::size_t i = 0; i < sg.nodes.size(); ++i)
            os << i << "  " << sg.nodes[i].label << "  " << to_string(sg.classes[i]) << "\n";
        for (const auto& e : sg.edges)
            os << sg.nodes[e.from].label << (e.directed ? " -> " : " -- ") << sg.nodes[e.to].label << "  ("
               << e.color << ", " << e.shift.str() << ")\n";
        os << sg.nodes.size() << " nodes, " << sg.edges.size() << " edges, "
           << (is_connected(sg) ? "connected" : "not connected") << "\n";
    }
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analytic Bethe ansatz verification for C(s)"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_option("--algebra", o.algebra, "C:s (s >= 2) or sl12")->capture_default_str();
    app.add_option("--seed", o.seed, "random seed")->capture_default_str();
    app.add_option("--samples", o.samples, "samples per check")->capture_default_str();
    auto* fmt = app.add_option("--format", o.format, "json | dot | table (counts defaults to table)");
    app.add_option("--out", o.out, "write output to FILE");

    auto* en = app.add_subcommand("enum", "enumerate admissible tableaux");
    en->add_option("--shape", o.shape, "col:a or row:m");
    auto* dv = app.add_subcommand("dvf", "build a DVF as an expression");
    dv->add_option("--spec", o.spec, "col:a row:m def:c fun:a sl12row:m sl12par:c sl12rect:m,a");
    dv->add_option("--vacuum", o.vacuum, "trivial | fundamental");
    auto* ve = app.add_subcommand("verify", "pole-freeness or functional relations");
    ve->add_option("--spec", o.spec, "DVF spec");
    ve->add_option("--relation", o.relation, "relation id or group (i, ii, iii, tsys, v, all)");
    ve->add_option("--mode", o.mode, "exact | numeric | both");
    ve->add_option("--vacuum", o.vacuum, "trivial | fundamental");
    auto* di = app.add_subcommand("dims", "dimension from Kac-Dynkin labels");
    di->add_option("--labels", o.labels, "space separated labels, b_1 may be p/q");
    auto* co = app.add_subcommand("counts", "term counts of column and row DVFs");
    co->add_option("--col-max", o.col_max, "largest column height")->capture_default_str();
    co->add_option("--row-max", o.row_max, "largest row length")->capture_default_str();
    auto* st = app.add_subcommand("strap", "Bethe-strap graph of a DVF");
    st->add_option("--spec", o.spec, "DVF spec");
    st->add_option("--vacuum", o.vacuum, "trivial | fundamental");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    if (*co && fmt->count() == 0) o.format = "table";

    std::ostringstream buf;
    int rc = kInternal;
    try {
        if (*en) rc = cmd_enum(o, buf);
        else if (*dv) rc = cmd_dvf(o, buf);
        else if (*ve) rc = cmd_verify(o, buf);
        else if (*di) rc = cmd_dims(o, buf);
        else if (*co) rc = cmd_counts(o, buf);
        else if (*st) rc = cmd_strap(o, buf);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    if (o.out.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return kUsage;
        }
        f << buf.str();
    }
    return rc;
}
