#include <algorithm>
#include <chrono>
#include <numeric>

#include "rainbowdom/errors.hpp"
#include "rainbowdom/solver.hpp"
#include "solver_util.hpp"

namespace rainbowdom {

namespace {

using Clock = std::chrono::steady_clock;

struct BranchSearch {
    const Graph& g;
    const int t;
    const std::uint32_t full;
    const int max_degree;
    const SearchBudget& budget;

    std::vector<int> order;     // processing order: degree desc, id asc
    std::vector<std::uint32_t> candidates; // subsets of full by (size, value)

    std::vector<std::uint32_t> assigned; // set of each assigned vertex
    std::vector<bool> is_assigned;
    std::vector<std::uint32_t> visible;  // union of assigned neighbor sets
    std::vector<int> free_nbrs;          // unassigned neighbor counts
    long long demand = 0;                // sum of missing-color counts over
                                         // unassigned and assigned-empty vertices
    int cur_weight = 0;

    int incumbent_weight = 0;
    std::vector<ColorSet> incumbent;
    long long proven_lower = 0;

    long long nodes = 0;
    Clock::time_point deadline;
    bool out_of_budget = false;

    BranchSearch(const Graph& graph, int t_in, const SearchBudget& b)
        : g(graph), t(t_in), full((1u << t_in) - 1u), max_degree(max_deg(graph)), budget(b) {
        const int n = g.n_vertices();
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
        for (std::uint32_t s = 0; s <= full; ++s) candidates.push_back(s);
        std::stable_sort(candidates.begin(), candidates.end(), [](std::uint32_t a, std::uint32_t b) {
            const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
            return pa != pb ? pa < pb : a < b;
        });
        assigned.assign(n, 0);
        is_assigned.assign(n, false);
        visible.assign(n, 0);
        free_nbrs.resize(n);
        for (int v = 0; v < n; ++v) free_nbrs[v] = g.degree(v);
        demand = static_cast<long long>(t) * n;
        deadline = Clock::now() + budget.max_elapsed;
    }

    static int max_deg(const Graph& graph) {
        int d = 0;
        for (int v = 0; v < graph.n_vertices(); ++v) d = std::max(d, graph.degree(v));
        return std::max(d, 1);
    }

    int missing_count(int v) const { return __builtin_popcount(full & ~visible[v]); }

    long long bound() const { return cur_weight + detail::charging_lower_bound(demand, t, max_degree); }

    // Applies set `s` at v, updating visibility and demand. Returns false when
    // some finished empty vertex can no longer be dominated.
    bool assign(int v, std::uint32_t s) {
        is_assigned[v] = true;
        assigned[v] = s;
        cur_weight += __builtin_popcount(s);
        if (s != 0) demand -= missing_count(v); // v left the demand pool
        bool alive = true;
        for (int w : g.neighbors(v)) {
            --free_nbrs[w];
            if (s != 0) {
                const std::uint32_t seen = visible[w] | s;
                if (seen != visible[w]) {
                    const bool in_pool = !is_assigned[w] || assigned[w] == 0;
                    if (in_pool)
                        demand -= __builtin_popcount((full & ~visible[w])) - __builtin_popcount((full & ~seen));
                    visible[w] = seen;
                }
            }
            if (is_assigned[w] && assigned[w] == 0 && free_nbrs[w] == 0 && (full & ~visible[w]) != 0)
                alive = false; // w is fixed empty, fully surrounded, and still missing a color
        }
        if (s == 0 && free_nbrs[v] == 0 && (full & ~visible[v]) != 0) alive = false;
        return alive;
    }

    void unassign(int v, std::uint32_t s) {
        for (int w : g.neighbors(v)) {
            ++free_nbrs[w];
            if (s != 0) {
                std::uint32_t seen = 0;
                for (int x : g.neighbors(w))
                    if (is_assigned[x] && x != v) seen |= assigned[x];
                if (seen != visible[w]) {
                    const bool in_pool = !is_assigned[w] || assigned[w] == 0;
                    if (in_pool)
                        demand += __builtin_popcount((full & ~seen)) - __builtin_popcount((full & ~visible[w]));
                    visible[w] = seen;
                }
            }
        }
        if (s != 0) demand += missing_count(v);
        cur_weight -= __builtin_popcount(s);
        assigned[v] = 0;
        is_assigned[v] = false;
    }

    bool budget_ok() {
        if (nodes >= budget.max_nodes) return false;
        if ((nodes & 0x3FF) == 0 && Clock::now() >= deadline) return false;
        return true;
    }

    // Returns true when the subtree was fully explored, false on budget stop.
    bool search(int depth, int max_used) {
        if (incumbent_weight <= proven_lower) return true; // nothing better can exist
        if (depth == g.n_vertices()) {
            if (demand == 0 && cur_weight < incumbent_weight) {
                incumbent_weight = cur_weight;
                incumbent.assign(assigned.size(), ColorSet());
                for (size_t v = 0; v < assigned.size(); ++v) incumbent[v] = ColorSet::from_bits(assigned[v]);
            }
            return true;
        }
        const int v = order[depth];
        // Colors every finished-after-this-assignment neighbor still needs.
        std::uint32_t required = 0;
        for (int w : g.neighbors(v))
            if (is_assigned[w] && assigned[w] == 0 && free_nbrs[w] == 1) required |= full & ~visible[w];
        // With no free neighbors left, staying empty is hopeless.
        const bool must_color = free_nbrs[v] == 0 && (full & ~visible[v]) != 0;

        for (std::uint32_t s : candidates) {
            if (cur_weight + __builtin_popcount(s) >= incumbent_weight) break; // sizes ascend
            if ((required & ~s) != 0) continue;
            if (s == 0 && must_color) continue;
            int new_max = max_used;
            if (!detail::canonical_extension(s, max_used, new_max)) continue;

            ++nodes;
            if (!budget_ok()) {
                out_of_budget = true;
                return false;
            }
            const bool alive = assign(v, s);
            if (alive && bound() < incumbent_weight) {
                if (!search(depth + 1, new_max)) {
                    unassign(v, s);
                    return false;
                }
            }
            unassign(v, s);
            if (incumbent_weight <= proven_lower) return true;
        }
        return true;
    }
};

} // namespace

std::string to_string(SolveMethod method) {
    return method == SolveMethod::branch_bound ? "bb" : "dp";
}

SolveResult solve_branch_bound(const Graph& g, int t, const SearchBudget& budget,
                               const std::optional<RainbowAssignment>& warm_start) {
    if (t < 1 || t > ColorSet::kMaxColors)
        throw std::invalid_argument("solve: t must lie in 1.." + std::to_string(ColorSet::kMaxColors));
    const auto started = Clock::now();

    BranchSearch search(g, t, budget);
    search.proven_lower = detail::global_lower_bound(g, t);

    RainbowAssignment best = detail::all_singletons(g.n_vertices(), t);
    if (warm_start) {
        const VerifyReport check = verify_trdf(g, *warm_start);
        if (!check.pass) throw ContractError("solve: warm start is not a valid assignment");
        if (weight(*warm_start) < weight(best)) best = *warm_start;
    }
    search.incumbent_weight = weight(best);
    search.incumbent = best.colors;

    const bool complete = search.search(0, 0);

    SolveResult result;
    result.method = SolveMethod::branch_bound;
    result.stats.nodes = search.nodes;
    result.optimum = search.incumbent_weight;
    result.witness.t = t;
    result.witness.colors = search.incumbent;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);

    if (!complete && search.incumbent_weight > search.proven_lower) {
        throw BudgetExhausted("solve: branch and bound budget exhausted after " + std::to_string(search.nodes) +
                                  " nodes (incumbent " + std::to_string(search.incumbent_weight) +
                                  ", proven lower bound " + std::to_string(search.proven_lower) + ")",
                              result.witness, search.incumbent_weight, search.proven_lower);
    }
    return result;
}

} // namespace rainbowdom
