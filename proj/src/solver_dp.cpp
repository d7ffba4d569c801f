#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "rainbowdom/errors.hpp"
#include "rainbowdom/solver.hpp"
#include "solver_util.hpp"

namespace rainbowdom {

namespace {

using Clock = std::chrono::steady_clock;

// Per-vertex slot in the DP state. An empty (uncolored) vertex stores the
// colors it still misses; a colored one stores its set, which neighbors that
// are placed later will read. Slots whose vertex can no longer influence any
// future column collapse to kDead so that states merge.
constexpr std::uint32_t kColored = 0x10000;
constexpr std::uint32_t kDead = 0x20000;
constexpr std::uint32_t kUnplaced = 0x40000;

bool slot_is_empty(std::uint32_t slot) { return slot < kColored; }
std::uint32_t slot_missing(std::uint32_t slot) { return slot < kColored ? slot : 0; }
std::uint32_t slot_set(std::uint32_t slot) { return (slot & kColored) ? (slot & 0xFFFFu) : 0; }

// State layout: [0] window u_i; [1..k] window v_{i-k+1..i} oldest first;
// [k+1] first-column outer vertex; [k+2..2k+1] first k inner vertices;
// [2k+2] largest color used so far (for the canonical color order).
struct DpKey {
    std::array<std::uint32_t, 16> slot{};
    std::uint8_t len = 0;

    bool operator==(const DpKey& other) const {
        if (len != other.len) return false;
        for (int i = 0; i < len; ++i)
            if (slot[i] != other.slot[i]) return false;
        return true;
    }
};

struct DpKeyHash {
    size_t operator()(const DpKey& key) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < key.len; ++i) {
            h ^= key.slot[i];
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct DpNode {
    DpKey key;
    int weight = 0;
    std::uint16_t su = 0;
    std::uint16_t sv = 0;
    int parent = -1;
};

struct Layer {
    std::vector<DpNode> nodes;
    std::unordered_map<DpKey, int, DpKeyHash> index;

    // Keeps the lighter node per key; first insertion wins ties.
    void push(DpKey key, int weight, std::uint16_t su, std::uint16_t sv, int parent) {
        auto [it, inserted] = index.try_emplace(key, static_cast<int>(nodes.size()));
        if (inserted) {
            nodes.push_back({key, weight, su, sv, parent});
        } else if (weight < nodes[it->second].weight) {
            nodes[it->second] = {key, weight, su, sv, parent};
        }
    }
};

struct ProfileDp {
    const int n;
    const int k;
    const int t;
    const std::uint32_t full;
    const SearchBudget& budget;

    int incumbent_weight;
    long long total_states = 0;

    ProfileDp(const PetersenParams& params, int t_in, const SearchBudget& b, int incumbent)
        : n(params.n), k(params.k), t(t_in), full((1u << t_in) - 1u), budget(b), incumbent_weight(incumbent) {}

    int ulen() const { return 2 * k + 3; }

    // Admissible residual: pending missing colors in the state plus the
    // demand of the still unplaced vertices, discounted by the set sizes of
    // the placed vertices that will neighbor them. The window copies of the
    // first k inner vertices are normalized (missing dropped) so that each
    // pending vertex is counted exactly once.
    long long residual_demand(const DpKey& key, int col) const {
        long long pending = 0;
        if (col >= 1 && col < n - 1 && slot_is_empty(key.slot[0]))
            pending += __builtin_popcount(slot_missing(key.slot[0]));
        for (int i = 1; i <= k; ++i) {
            const std::uint32_t s = key.slot[i];
            if (s != kDead && s != kUnplaced && slot_is_empty(s)) pending += __builtin_popcount(slot_missing(s));
        }
        if (col < n - 1 && slot_is_empty(key.slot[k + 1])) pending += __builtin_popcount(slot_missing(key.slot[k + 1]));
        long long correction = __builtin_popcount(slot_set(key.slot[0])) + __builtin_popcount(slot_set(key.slot[k + 1]));
        for (int j = 0; j < k; ++j) {
            const std::uint32_t s = key.slot[k + 2 + j];
            if (s != kDead && s != kUnplaced) {
                if (slot_is_empty(s))
                    pending += __builtin_popcount(slot_missing(s));
                else
                    correction += __builtin_popcount(slot_set(s));
            }
        }
        for (int i = 1; i <= k; ++i) correction += __builtin_popcount(slot_set(key.slot[i]));
        const long long future = 2LL * t * (n - 1 - col);
        return pending + std::max(0LL, future - correction);
    }

    bool prune(const DpKey& key, int col, int weight) const {
        return weight + detail::charging_lower_bound(residual_demand(key, col), t, 3) >= incumbent_weight;
    }

    Layer initial_layer() const {
        Layer layer;
        for (std::uint32_t su = 0; su <= full; ++su) {
            int m1 = 0;
            if (!detail::canonical_extension(su, 0, m1)) continue;
            for (std::uint32_t sv = 0; sv <= full; ++sv) {
                int m2 = m1;
                if (!detail::canonical_extension(sv, m1, m2)) continue;
                DpKey key;
                key.len = static_cast<std::uint8_t>(ulen());
                // The first block keeps the real residuals; the window copies
                // carry only the sets later columns read.
                key.slot[0] = su ? (kColored | su) : 0;
                for (int i = 1; i < k; ++i) key.slot[i] = kUnplaced;
                key.slot[k] = sv ? (kColored | sv) : 0;
                key.slot[k + 1] = su ? (kColored | su) : (full & ~sv);
                key.slot[k + 2] = sv ? (kColored | sv) : (full & ~su);
                for (int j = 1; j < k; ++j) key.slot[k + 2 + j] = kUnplaced;
                key.slot[2 * k + 2] = static_cast<std::uint32_t>(m2);
                const int w = __builtin_popcount(su) + __builtin_popcount(sv);
                if (w >= incumbent_weight) continue;
                if (prune(key, 0, w)) continue;
                layer.push(key, w, static_cast<std::uint16_t>(su), static_cast<std::uint16_t>(sv), -1);
            }
        }
        return layer;
    }

    // Expands `from` (states after column col-1) into states after column col.
    Layer advance(const Layer& from, int col) const {
        Layer next;
        for (int idx = 0; idx < static_cast<int>(from.nodes.size()); ++idx) {
            const DpNode& node = from.nodes[idx];
            const DpKey& s = node.key;
            const std::uint32_t uslot = s.slot[0];
            const std::uint32_t bu0 = s.slot[k + 1];
            const std::uint32_t leave = col >= k ? s.slot[1] : kUnplaced;
            const int max_used = static_cast<int>(s.slot[2 * k + 2]);

            // Finalization of u_{col-1} (u_0 defers to the wrap check).
            std::uint32_t required_su = col >= 2 && slot_is_empty(uslot) ? slot_missing(uslot) : 0;
            if (col == n - 1 && slot_is_empty(bu0)) required_su |= slot_missing(bu0);

            // Finalization of v_{col-k}; in the first k columns after the
            // window fills, that vertex belongs to the stored first block and
            // only has its residual updated.
            std::uint32_t required_sv = col >= 2 * k && slot_is_empty(leave) ? slot_missing(leave) : 0;
            const int wrap_j = col + k - n; // inner first-block vertex adjacent to v_col
            if (wrap_j >= 0 && slot_is_empty(s.slot[k + 2 + wrap_j]))
                required_sv |= slot_missing(s.slot[k + 2 + wrap_j]);

            const std::uint32_t u_prev_set = slot_set(uslot);
            const std::uint32_t leave_set = slot_set(leave);
            const std::uint32_t wrap_set = wrap_j >= 0 ? slot_set(s.slot[k + 2 + wrap_j]) : 0;
            const std::uint32_t u0_set = slot_set(bu0);

            for (std::uint32_t su = 0; su <= full; ++su) {
                if ((required_su & ~su) != 0) continue;
                int m1 = max_used;
                if (!detail::canonical_extension(su, max_used, m1)) continue;
                const int wu = node.weight + __builtin_popcount(su);
                if (wu >= incumbent_weight) continue;
                for (std::uint32_t sv = 0; sv <= full; ++sv) {
                    if ((required_sv & ~sv) != 0) continue;
                    int m2 = m1;
                    if (!detail::canonical_extension(sv, m1, m2)) continue;
                    const int w = wu + __builtin_popcount(sv);
                    if (w >= incumbent_weight) continue;

                    // New u slot; the last column folds the wrap neighbor u_0
                    // and therefore must come out fully dominated.
                    std::uint32_t new_u;
                    if (su) {
                        new_u = kColored | su;
                    } else {
                        std::uint32_t miss = full & ~(u_prev_set | sv);
                        if (col == n - 1) {
                            miss &= ~u0_set;
                            if (miss != 0) continue;
                        }
                        new_u = miss;
                    }

                    // New v slot, dead once every neighbor is placed. For the
                    // first k columns the real residual lives in the first
                    // block, so the window copy keeps only the set.
                    std::uint32_t new_v;
                    if (col >= n - k) {
                        if (sv == 0 && (full & ~(su | leave_set | wrap_set)) != 0) continue;
                        new_v = kDead;
                    } else if (sv) {
                        new_v = kColored | sv;
                    } else {
                        new_v = col < k ? 0 : (full & ~(su | leave_set));
                    }

                    DpKey key;
                    key.len = static_cast<std::uint8_t>(ulen());
                    key.slot[0] = new_u;
                    for (int i = 1; i < k; ++i) key.slot[i] = s.slot[i + 1];
                    key.slot[k] = new_v;
                    // First-block bookkeeping.
                    std::uint32_t nbu0 = bu0;
                    if (col == 1 && slot_is_empty(bu0)) nbu0 = slot_missing(bu0) & ~su;
                    key.slot[k + 1] = nbu0;
                    for (int j = 0; j < k; ++j) key.slot[k + 2 + j] = s.slot[k + 2 + j];
                    if (col < k) key.slot[k + 2 + col] = sv ? (kColored | sv) : (full & ~su);
                    if (col >= k && col < 2 * k) {
                        const int j = col - k;
                        if (slot_is_empty(key.slot[k + 2 + j]))
                            key.slot[k + 2 + j] = slot_missing(key.slot[k + 2 + j]) & ~sv;
                    }
                    if (wrap_j >= 0) key.slot[k + 2 + wrap_j] = kDead;
                    key.slot[2 * k + 2] = static_cast<std::uint32_t>(m2);

                    if (prune(key, col, w)) continue;
                    next.push(key, w, static_cast<std::uint16_t>(su), static_cast<std::uint16_t>(sv), idx);
                }
            }
        }
        return next;
    }
};

} // namespace

double profile_dp_state_estimate(const PetersenParams& params, int t) {
    if (t < 1 || t > ColorSet::kMaxColors)
        throw std::invalid_argument("solve: t must lie in 1.." + std::to_string(ColorSet::kMaxColors));
    // Seed combinations of the first k columns times per-column state counts.
    return std::pow(4.0, static_cast<double>(t) * params.k) *
           std::pow(2.0, static_cast<double>(t + 1) * (params.k + 1));
}

SolveResult solve_profile_dp(const PetersenParams& params, int t, const SearchBudget& budget,
                             const std::optional<RainbowAssignment>& warm_start) {
    if (t < 1 || t > ColorSet::kMaxColors)
        throw std::invalid_argument("solve: t must lie in 1.." + std::to_string(ColorSet::kMaxColors));
    const double estimate = profile_dp_state_estimate(params, t);
    if (estimate > static_cast<double>(budget.max_states))
        throw StateSpaceTooLarge("solve: profile dp state estimate " + std::to_string(estimate) +
                                     " exceeds budget " + std::to_string(budget.max_states) + " for P(" +
                                     std::to_string(params.n) + "," + std::to_string(params.k) + "), t=" +
                                     std::to_string(t),
                                 estimate, budget.max_states);
    if (params.k > 6)
        throw StateSpaceTooLarge("solve: profile dp supports k <= 6", estimate, budget.max_states);

    const auto started = Clock::now();
    const auto deadline = started + budget.max_elapsed;
    const Graph graph = build_generalized_petersen(params);
    const long long lower = detail::global_lower_bound(graph, t);

    RainbowAssignment best = detail::all_singletons(graph.n_vertices(), t);
    if (warm_start) {
        const VerifyReport check = verify_trdf(graph, *warm_start);
        if (!check.pass) throw ContractError("solve: warm start is not a valid assignment");
        if (weight(*warm_start) < weight(best)) best = *warm_start;
    }

    SolveResult result;
    result.method = SolveMethod::profile_dp;
    result.optimum = weight(best);
    result.witness = best;

    if (result.optimum <= lower) { // incumbent already meets the proven bound
        result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
        return result;
    }

    ProfileDp dp(params, t, budget, result.optimum);
    std::vector<Layer> layers;
    layers.reserve(params.n);
    layers.push_back(dp.initial_layer());
    dp.total_states += static_cast<long long>(layers.back().nodes.size());
    for (int col = 1; col < params.n; ++col) {
        if (Clock::now() >= deadline)
            throw BudgetExhausted("solve: profile dp ran past the time budget at column " + std::to_string(col),
                                  result.witness, result.optimum, lower);
        layers.push_back(dp.advance(layers[col - 1], col));
        dp.total_states += static_cast<long long>(layers.back().nodes.size());
        if (dp.total_states > budget.max_states)
            throw StateSpaceTooLarge("solve: profile dp touched " + std::to_string(dp.total_states) +
                                         " states, over the budget " + std::to_string(budget.max_states),
                                     static_cast<double>(dp.total_states), budget.max_states);
    }

    // Every surviving final state is wrap-consistent; pick the lightest.
    const Layer& last = layers.back();
    int best_idx = -1;
    for (int i = 0; i < static_cast<int>(last.nodes.size()); ++i)
        if (best_idx == -1 || last.nodes[i].weight < last.nodes[best_idx].weight) best_idx = i;

    if (best_idx != -1 && last.nodes[best_idx].weight < result.optimum) {
        RainbowAssignment found(t, graph.n_vertices());
        int idx = best_idx;
        for (int col = params.n - 1; col >= 0; --col) {
            const DpNode& node = layers[col].nodes[idx];
            found.colors[outer_vertex(col, params.n)] = ColorSet::from_bits(node.su);
            found.colors[inner_vertex(col, params.n)] = ColorSet::from_bits(node.sv);
            idx = node.parent;
        }
        if (!verify_trdf(graph, found).pass)
            throw std::logic_error("internal: profile dp reconstructed an invalid witness");
        result.optimum = weight(found);
        result.witness = std::move(found);
    }
    result.stats.states = dp.total_states;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
    return result;
}

} // namespace rainbowdom
