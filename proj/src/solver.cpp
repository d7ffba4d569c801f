#include <algorithm>

#include "rainbowdom/bounds.hpp"
#include "rainbowdom/constructions.hpp"
#include "rainbowdom/errors.hpp"
#include "rainbowdom/solver.hpp"
#include "solver_util.hpp"

namespace rainbowdom {

namespace {

// Best construction-backed incumbent for a Petersen instance: the periodic
// pattern on characterized instances, all-singletons otherwise.
RainbowAssignment seed_incumbent(const PetersenParams& params, int t) {
    if (t >= 3 && t <= 5 && params.n % 6 == 0 && (params.k % 6 == 1 || params.k % 6 == 5))
        return extremal_pattern(params.n, params.k, t);
    return detail::all_singletons(2 * params.n, t);
}

} // namespace

SolveResult solve_auto(const PetersenParams& params, int t, const SearchBudget& budget) {
    const RainbowAssignment warm = seed_incumbent(params, t);
    if (profile_dp_state_estimate(params, t) <= static_cast<double>(budget.max_states) && params.k <= 6)
        return solve_profile_dp(params, t, budget, warm);
    return solve_branch_bound(build_generalized_petersen(params), t, budget, warm);
}

SolveResult solve_auto(const Graph& g, int t, const SearchBudget& budget) {
    return solve_branch_bound(g, t, budget);
}

namespace {

Certificate make_certificate(const Graph& g, int t, const RainbowAssignment& candidate, long long family_lower,
                             std::vector<std::string> family_sources) {
    const VerifyReport check = verify_trdf(g, candidate);
    if (!check.pass) {
        std::string what = "certify: candidate fails verification;";
        for (const Violation& v : check.violations)
            what += " vertex " + std::to_string(v.vertex) + " misses " + to_string(v.missing);
        throw ContractError(what);
    }
    Certificate cert;
    cert.weight = weight(candidate);
    cert.lower_bound = detail::global_lower_bound(g, t);
    cert.sources.push_back(kSrcRegularLowerBound);
    if (family_lower > cert.lower_bound) {
        cert.lower_bound = family_lower;
        cert.sources = std::move(family_sources);
    }
    cert.gap = cert.weight - cert.lower_bound;
    cert.kind = cert.gap == 0 ? CertificateKind::exact : CertificateKind::upper_only;
    return cert;
}

} // namespace

Certificate certify(const Graph& g, int t, const RainbowAssignment& candidate) {
    return make_certificate(g, t, candidate, 0, {});
}

Certificate certify(const PetersenParams& params, int t, const RainbowAssignment& candidate) {
    const Graph g = build_generalized_petersen(params);
    long long family_lower = 0;
    std::vector<std::string> family_sources;
    if (params.n % params.k == 0 && params.n / params.k >= 3) {
        const BoundReport report = bounds_pckk(params.n / params.k, params.k, t, TableMode::corrected);
        family_lower = report.lower;
        family_sources = report.sources;
    }
    return make_certificate(g, t, candidate, family_lower, std::move(family_sources));
}

} // namespace rainbowdom
