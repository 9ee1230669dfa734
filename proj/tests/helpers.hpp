#pragma once

#include "cbethe/evaluate.hpp"
#include "oracles.hpp"

#include <functional>
#include <stdexcept>

namespace testutil {

inline cbethe::RootAssignment assign(const oracle::Roots& r) {
    cbethe::RootAssignment a;
    a.roots = r.q;
    a.inhom = r.w;
    return a;
}

// Runs body on fresh random points until `want` of them evaluate without
// hitting a pole; returns how many succeeded.
inline int for_points(int want, std::uint64_t seed, int s, int per_color, int n_inhom,
                      const std::function<void(const oracle::Roots&, const cbethe::Rational&)>& body) {
    std::mt19937_64 g(seed);
    int ok = 0;
    for (int tries = 0; ok < want && tries < 20 * want + 20; ++tries) {
        auto r = oracle::random_roots(s, per_color, n_inhom, g);
        auto u = oracle::rnd(g);
        try {
            body(r, u);
            ++ok;
        } catch (const cbethe::PoleHit&) {
        } catch (const std::domain_error&) {
        }
    }
    return ok;
}

}  // namespace testutil
