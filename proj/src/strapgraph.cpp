#include "cbethe/strapgraph.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>

namespace cbethe {

std::string to_string(NodeClass c) {
    switch (c) {
        case NodeClass::Top: return "top";
        case NodeClass::Bottom: return "bottom";
        case NodeClass::PseudoTop: return "pseudo-top";
        case NodeClass::PseudoBottom: return "pseudo-bottom";
        case NodeClass::Interior: return "interior";
    }
    return "interior";
}

StrapGraph build_strap(const TermedDvf& t, Vacuum vacuum, std::uint64_t seed, int samples) {
    StrapGraph g;
    g.alg = t.alg;
    g.nodes = t.terms;
    QExpr e;  // unnormalized: term i is node i
    for (const auto& term : t.terms) e.terms.push_back(term.mono);
    std::uint64_t salt = 0;
    for (const auto& site : scan_poles(e)) {
        CancellationReport rep = exact_cancellation_check(e, t.alg, vacuum, site, seed * 1000003ULL + ++salt, samples);
        const BasisVector alpha = simple_root(t.alg, site.color);
        for (auto [x, y] : rep.pairs) {
            StrapEdge edge{x, y, site.color, -site.shift, true};
            const BasisVector d = g.nodes[x].weight - g.nodes[y].weight;
            if (same_weight(t.alg, d, alpha)) {
                // x -> y
            } else if (same_weight(t.alg, -d, alpha)) {
                std::swap(edge.from, edge.to);
            } else {
                edge.directed = false;
                g.diagnostics.push_back("undirected edge " + g.nodes[x].label + " -- " + g.nodes[y].label +
                                        ": weight difference " + d.str() + " is not +-alpha_" +
                                        std::to_string(site.color));
            }
            g.edges.push_back(edge);
        }
        if (!rep.leftovers.empty())
            g.diagnostics.push_back("site (" + std::to_string(site.color) + ", " + (-site.shift).str() + "): " +
                                    std::to_string(rep.leftovers.size()) + " term(s) not paired" +
                                    (rep.group_pass ? " (cancel as a group)" : ""));
    }
    g.classes = classify(g);
    return g;
}

std::vector<NodeClass> classify(const StrapGraph& g) {
    const std::size_t n = g.nodes.size();
    std::vector<int> in(n, 0), out(n, 0);
    for (const auto& e : g.edges) {
        if (!e.directed) {
            ++in[e.from], ++out[e.from], ++in[e.to], ++out[e.to];
            continue;
        }
        ++out[e.from];
        ++in[e.to];
    }
    auto maximal = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && !dominates(g.alg, g.nodes[i].weight, g.nodes[j].weight)) return false;
        return true;
    };
    auto minimal = [&](std::size_t i) {
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && !dominates(g.alg, g.nodes[j].weight, g.nodes[i].weight)) return false;
        return true;
    };
    std::vector<NodeClass> cls(n, NodeClass::Interior);
    for (std::size_t i = 0; i < n; ++i) {
        if (in[i] == 0) {
            cls[i] = maximal(i) ? NodeClass::Top : NodeClass::PseudoTop;
        } else if (out[i] == 0) {
            cls[i] = minimal(i) ? NodeClass::Bottom : NodeClass::PseudoBottom;
        }
    }
    return cls;
}

bool is_connected(const StrapGraph& g) {
    const std::size_t n = g.nodes.size();
    if (n <= 1) return true;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) parent[find(e.from)] = find(e.to);
    for (std::size_t i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

bool edges_weight_consistent(const StrapGraph& g) {
    for (const auto& e : g.edges) {
        if (!e.directed) return false;
        if (!same_weight(g.alg, g.nodes[e.from].weight - g.nodes[e.to].weight, simple_root(g.alg, e.color)))
            return false;
    }
    return true;
}

namespace {

std::string sign_of(const QMonomial& m) { return m.coef < 0 ? "-" : "+"; }

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const StrapGraph& g) {
    std::ostringstream os;
    os << "digraph strap {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << escape(g.nodes[i].label) << " (" << sign_of(g.nodes[i].mono)
           << ")\"];\n";
    for (const auto& e : g.edges) {
        os << "  n" << e.from << " -> n" << e.to << " [label=\"(" << e.color << ", " << e.shift.str() << ")\"";
        if (!e.directed) os << ", dir=none";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_json(const StrapGraph& g) {
    nlohmann::json j;
    j["algebra"] = g.alg.str();
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& c : g.nodes[i].weight.c) w.push_back(c.str());
        nodes.push_back({{"index", i},
                         {"tableau", g.nodes[i].label},
                         {"sign", sign_of(g.nodes[i].mono)},
                         {"weight", w},
                         {"class", i < g.classes.size() ? to_string(g.classes[i]) : "interior"}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from},
                         {"to", e.to},
                         {"color", e.color},
                         {"shift", e.shift.str()},
                         {"directed", e.directed}});
    j["nodes"] = nodes;
    j["edges"] = edges;
    j["connected"] = is_connected(g);
    j["diagnostics"] = g.diagnostics;
    return j.dump(2);
}

std::vector<PseudoDemo> pseudo_demo(std::uint64_t seed) {
    struct Candidate {
        std::string name;
        TermedDvf x, y;
        int k;
    };
    std::vector<Candidate> cands;
    for (int k : {1, -1}) {
        cands.push_back({"F2^(2)(u) F1^(2)(u" + std::string(k > 0 ? "+1" : "-1") + ")", sl12_row_terms(2),
                         sl12_row_terms(1), k});
        cands.push_back({"F2^(1)(u) F1^(1)(u" + std::string(k > 0 ? "+1" : "-1") + ")", sl12_two_terms(),
                         sl12_param_terms(1), k});
    }
    std::vector<PseudoDemo> out;
    for (const auto& c : cands) {
        TermedDvf prod = termed_product(c.x, c.y, Rational(c.k));
        StrapGraph g = build_strap(prod, Vacuum::Trivial, seed, 10);
        PseudoDemo d{c.name, 0, 0};
        for (auto cl : g.classes) {
            if (cl == NodeClass::PseudoTop) ++d.pseudo_top;
            if (cl == NodeClass::PseudoBottom) ++d.pseudo_bottom;
        }
        out.push_back(d);
    }
    return out;
}

}  // namespace cbethe
