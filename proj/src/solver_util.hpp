#ifndef RAINBOWDOM_SOLVER_UTIL_HPP
#define RAINBOWDOM_SOLVER_UTIL_HPP

#include <cstdint>

#include "rainbowdom/bounds.hpp"
#include "rainbowdom/graph.hpp"
#include "rainbowdom/rdf.hpp"

namespace rainbowdom::detail {

// Color-symmetry canonical order: a set extends a partial coloring whose
// largest used color is max_used iff its new colors form the consecutive
// block max_used+1..max_used+j. Returns false otherwise; on success new_max
// is the updated largest used color.
inline bool canonical_extension(std::uint32_t set_bits, int max_used, int& new_max) {
    const std::uint32_t fresh = set_bits >> max_used << max_used; // colors > max_used
    if (fresh == 0) {
        new_max = max_used;
        return true;
    }
    const int hi = 32 - __builtin_clz(fresh);
    const int lo = __builtin_ctz(fresh) + 1;
    if (lo != max_used + 1) return false;
    const std::uint32_t block = ((1u << hi) - 1u) & ~((1u << (lo - 1)) - 1u);
    if (fresh != block) return false;
    new_max = hi;
    return true;
}

// Residual weight needed to clear `demand` missing-color units: one weight
// unit supplies a color to at most deg(v) uncolored neighbors and, by landing
// on a demand vertex, absorbs at most t units of its own, so (t + max_degree)
// units of demand per unit of weight.
inline long long charging_lower_bound(long long demand, int t, int max_degree) {
    const long long denom = t + max_degree;
    return (demand + denom - 1) / denom;
}

// Best lower bound we can state for gamma_rt of an arbitrary graph without
// searching: the charging bound always applies, the regular-graph bound when
// g is regular. The charging bound is the stronger one for small t (t=1 on
// cubic graphs gives n/4 instead of n/6).
inline long long global_lower_bound(const Graph& g, int t) {
    const int n = g.n_vertices();
    if (n == 0) return 0;
    int min_deg = g.degree(0), max_deg = g.degree(0);
    for (int v = 1; v < n; ++v) {
        min_deg = std::min(min_deg, g.degree(v));
        max_deg = std::max(max_deg, g.degree(v));
    }
    long long best = charging_lower_bound(static_cast<long long>(t) * n, t, max_deg);
    if (min_deg == max_deg && min_deg >= 1) best = std::max(best, generic_lower_bound(n, min_deg, t));
    return best;
}

// Every vertex colored {1}: valid for any t, weight |V|. Used as the default
// incumbent so budget errors always carry a witness.
inline RainbowAssignment all_singletons(int n_vertices, int t) {
    RainbowAssignment a(t, n_vertices);
    for (auto& s : a.colors) s = ColorSet::single(1);
    return a;
}

} // namespace rainbowdom::detail

#endif
