#include "rainbowdom/constructions.hpp"

#include <stdexcept>
#include <string>

#include "rainbowdom/errors.hpp"

namespace rainbowdom {

TriPartition::TriPartition(ColorSet a_in, ColorSet b_in, ColorSet c_in, int t) : a(a_in), b(b_in), c(c_in) {
    if (t < 3 || t > ColorSet::kMaxColors)
        throw std::invalid_argument("tripartition: t must be at least 3");
    if (a.empty() || b.empty() || c.empty())
        throw std::invalid_argument("tripartition: all three parts must be nonempty");
    if (!(a & b).empty() || !(a & c).empty() || !(b & c).empty())
        throw std::invalid_argument("tripartition: parts must be pairwise disjoint");
    if ((a | b | c) != ColorSet::full(t))
        throw std::invalid_argument("tripartition: parts must cover all colors 1.." + std::to_string(t));
}

TriPartition default_tripartition(int t) {
    switch (t) {
        case 3:
            return {ColorSet::single(1), ColorSet::single(2), ColorSet::single(3), 3};
        case 4:
            return {ColorSet::from_members({1, 2}), ColorSet::single(3), ColorSet::single(4), 4};
        case 5:
            return {ColorSet::from_members({1, 2}), ColorSet::from_members({3, 4}), ColorSet::single(5), 5};
        default:
            throw std::invalid_argument("tripartition: t must be 3, 4 or 5, got " + std::to_string(t));
    }
}

RainbowAssignment extremal_pattern(int n, int k, int t, const TriPartition& p) {
    if (t < 3 || t > 5)
        throw std::invalid_argument("extremal_pattern: t must be 3, 4 or 5, got " + std::to_string(t));
    if (n % 6 != 0)
        throw std::invalid_argument("extremal_pattern: n must be divisible by 6, got n=" + std::to_string(n) +
                                    " (n mod 6 = " + std::to_string(n % 6) + ")");
    if (k % 6 != 1 && k % 6 != 5)
        throw std::invalid_argument("extremal_pattern: k mod 6 must be 1 or 5, got k=" + std::to_string(k) +
                                    " (k mod 6 = " + std::to_string(k % 6) + ")");
    if (k < 1 || 2 * k >= n)
        throw std::invalid_argument("extremal_pattern: k must satisfy 1 <= k < n/2");
    if ((p.a | p.b | p.c) != ColorSet::full(t))
        throw std::invalid_argument("extremal_pattern: partition does not match t=" + std::to_string(t));

    RainbowAssignment out(t, 2 * n);
    const ColorSet outer_cycle[6] = {p.a, {}, p.b, {}, p.c, {}};
    const ColorSet inner_cycle[6] = {{}, p.c, {}, p.a, {}, p.b};
    for (int i = 0; i < n; ++i) {
        out.colors[outer_vertex(i, n)] = outer_cycle[i % 6];
        out.colors[inner_vertex(i, n)] = inner_cycle[i % 6];
    }
    return out;
}

RainbowAssignment extremal_pattern(int n, int k, int t) {
    return extremal_pattern(n, k, t, default_tripartition(t));
}

RainbowAssignment lift(const Graph& g, const RainbowAssignment& a) {
    const VerifyReport check = verify_trdf(g, a);
    if (!check.pass) {
        std::string what = "lift: input is not a valid " + std::to_string(a.t) + "-rainbow domination function;";
        for (const Violation& v : check.violations)
            what += " vertex " + std::to_string(v.vertex) + " misses " + to_string(v.missing);
        throw ContractError(what);
    }
    if (a.t + 1 > ColorSet::kMaxColors)
        throw std::invalid_argument("lift: t+1 exceeds the color limit");

    const Census c = census(a);
    int pivot = 1;
    for (int color = 2; color <= a.t; ++color)
        if (c.class_size[color - 1] < c.class_size[pivot - 1]) pivot = color;

    RainbowAssignment out = a;
    out.t = a.t + 1;
    const int new_color = out.t;
    for (int v = 0; v < g.n_vertices(); ++v) {
        if (!a.colors[v].empty()) continue;
        for (int w : g.neighbors(v)) { // sorted, so the lowest carrier wins
            if (a.colors[w].contains(pivot)) {
                out.colors[w].add(new_color);
                break;
            }
        }
    }
    return out;
}

RainbowAssignment example_4rdf() {
    RainbowAssignment a(4, 36);
    for (int copy = 0; copy < 3; ++copy)
        for (int branch = 0; branch < 4; ++branch)
            a.colors[10 * copy + branch] = ColorSet::single(branch + 1);
    int hub = 30;
    for (int x = 1; x <= 4; ++x)
        for (int y = x + 1; y <= 4; ++y)
            a.colors[hub++] = ColorSet::from_members({x, y});
    return a;
}

} // namespace rainbowdom
