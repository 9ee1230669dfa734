#pragma once

#include "cbethe/dvf.hpp"
#include "cbethe/verify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cbethe {

// Edge (a, b): common pole at u = u_k^{(a)} + b. from -> to when
// wt(from) - wt(to) = alpha_a; otherwise undirected.
struct StrapEdge {
    int from = 0;
    int to = 0;
    int color = 1;
    Rational shift;
    bool directed = true;
};

enum class NodeClass { Top, Bottom, PseudoTop, PseudoBottom, Interior };
std::string to_string(NodeClass c);

struct StrapGraph {
    AlgebraId alg;
    std::vector<DvfTerm> nodes;
    std::vector<StrapEdge> edges;
    std::vector<NodeClass> classes;
    std::vector<std::string> diagnostics;
};

StrapGraph build_strap(const TermedDvf& t, Vacuum vacuum, std::uint64_t seed, int samples = 20);
std::vector<NodeClass> classify(const StrapGraph& g);
bool is_connected(const StrapGraph& g);
// Every directed edge satisfies the simple-root rule.
bool edges_weight_consistent(const StrapGraph& g);

std::string to_dot(const StrapGraph& g);
std::string to_json(const StrapGraph& g);

struct PseudoDemo {
    std::string dvf;
    int pseudo_top = 0;
    int pseudo_bottom = 0;
};

// Products F(u) G(u + k) of sl(1|2) DVFs; lists the ones whose strap has
// pseudo-top or pseudo-bottom terms.
std::vector<PseudoDemo> pseudo_demo(std::uint64_t seed);

}  // namespace cbethe
