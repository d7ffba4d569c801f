#ifndef RAINBOWDOM_SOLVER_HPP
#define RAINBOWDOM_SOLVER_HPP

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbowdom/graph.hpp"
#include "rainbowdom/rdf.hpp"

namespace rainbowdom {

struct SearchBudget {
    long long max_nodes = 100'000'000;
    long long max_states = 100'000'000;
    std::chrono::milliseconds max_elapsed = std::chrono::minutes(10);
};

enum class SolveMethod { branch_bound, profile_dp };

std::string to_string(SolveMethod method);

struct SolveStats {
    long long nodes = 0;   // branch-and-bound nodes expanded
    long long states = 0;     // profile DP states touched
};

struct SolveResult {
    int optimum = 0;
    RainbowAssignment witness;
    SolveMethod method = SolveMethod::branch_bound;
    SolveStats stats;
    std::chrono::milliseconds elapsed{0};
};

/// Search ran out of nodes or time. Carries the best incumbent seen (always
/// present: engines start from a valid all-singletons assignment) and the
/// lower bound proven so far.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string& what, RainbowAssignment incumbent, int incumbent_weight,
                    long long proven_lower)
        : std::runtime_error(what),
          incumbent(std::move(incumbent)),
          incumbent_weight(incumbent_weight),
          proven_lower(proven_lower) {}

    RainbowAssignment incumbent;
    int incumbent_weight = 0;
    long long proven_lower = 0;
};

/// The profile DP refuses instances whose estimated state space exceeds the
/// budget instead of starting a run it cannot finish.
class StateSpaceTooLarge : public std::runtime_error {
public:
    StateSpaceTooLarge(const std::string& what, double estimate, long long limit)
        : std::runtime_error(what), estimate(estimate), limit(limit) {}

    double estimate = 0;
    long long limit = 0;
};

/// Exact optimum by depth-first branch and bound over per-vertex color sets.
/// Vertices are processed maximum-degree-first (ties by id); at each vertex
/// the candidate sets are tried in increasing size; color symmetry is broken
/// by requiring first occurrences of colors to appear in increasing order.
/// A warm start must be a valid t-RDF and seeds the incumbent; the search
/// returns immediately once the incumbent matches the proven lower bound.
SolveResult solve_branch_bound(const Graph& g, int t, const SearchBudget& budget = {},
                               const std::optional<RainbowAssignment>& warm_start = {});

/// Exact optimum on P(n,k) by dynamic programming over columns (u_i, v_i)
/// with a trailing window of k undetermined inner vertices and cyclic closure
/// against the first k columns. Independent of the branch-and-bound path and
/// cross-checked against it in the tests.
SolveResult solve_profile_dp(const PetersenParams& params, int t, const SearchBudget& budget = {},
                             const std::optional<RainbowAssignment>& warm_start = {});

/// Upper estimate of the DP effort used by the refusal check: seed
/// combinations of the first k columns times per-column state counts.
double profile_dp_state_estimate(const PetersenParams& params, int t);

/// Profile DP when the instance fits the state budget, branch and bound
/// otherwise; Petersen instances get their incumbent seeded from the
/// periodic pattern when the characterization applies.
SolveResult solve_auto(const PetersenParams& params, int t, const SearchBudget& budget = {});
SolveResult solve_auto(const Graph& g, int t, const SearchBudget& budget = {});

enum class CertificateKind { exact, upper_only };

/// Outcome of matching a verified candidate against the best applicable lower
/// bound: exact when the weights meet, otherwise upper_only with the gap.
struct Certificate {
    CertificateKind kind = CertificateKind::upper_only;
    int weight = 0;
    long long lower_bound = 0;
    long long gap = 0;
    std::vector<std::string> sources;
};

Certificate certify(const Graph& g, int t, const RainbowAssignment& candidate);
/// Adds the family lower bounds for P(ck,k) when k divides n.
Certificate certify(const PetersenParams& params, int t, const RainbowAssignment& candidate);

} // namespace rainbowdom

#endif
