#include <doctest.h>

#include "rainbowdom/audit.hpp"
#include "rainbowdom/constructions.hpp"
#include "rainbowdom/errors.hpp"
#include "rainbowdom/solver.hpp"

using namespace rainbowdom;

namespace {

RainbowAssignment rotated(const RainbowAssignment& a, int n, int shift) {
    RainbowAssignment out(a.t, 2 * n);
    for (int i = 0; i < n; ++i) {
        out.colors[outer_vertex(i, n)] = a.colors[outer_vertex(i + shift, n)];
        out.colors[inner_vertex(i, n)] = a.colors[inner_vertex(i + shift, n)];
    }
    return out;
}

} // namespace

TEST_CASE("extremal-4 audit passes on the pattern") {
    const Graph g = build_generalized_petersen({12, 1});
    const AuditReport report = audit_extremal_4(g, extremal_pattern(12, 1, 4));
    CHECK(report.overall);
    CHECK(report.checks.size() == 5);
}

TEST_CASE("extremal-4 audit passes on a solver witness, census included") {
    const Graph g = build_generalized_petersen({6, 1});
    const SolveResult r = solve_profile_dp({6, 1}, 4);
    REQUIRE(r.optimum == 8);
    CHECK(audit_extremal_4(g, r.witness).overall);
    const Census c = census(r.witness);
    CHECK(c.by_size[0] == 6);
    CHECK(c.by_size[1] == 4);
    CHECK(c.by_size[2] == 2);
}

TEST_CASE("extremal-4 audit flags a perturbed pattern") {
    const Graph g = build_generalized_petersen({12, 1});
    RainbowAssignment a = extremal_pattern(12, 1, 4);
    std::swap(a.colors[0], a.colors[1]); // move a colored set onto an uncolored vertex
    const AuditReport report = audit_extremal_4(g, a);
    CHECK_FALSE(report.overall);
    bool partition_check_failed = false;
    for (const AuditCheck& check : report.checks)
        if (check.name == "uncolored-neighbor-partitions" && !check.pass) partition_check_failed = true;
    CHECK(partition_check_failed);
}

TEST_CASE("extremal-4 audit rejects non-extremal weight") {
    const Graph g = build_generalized_petersen({6, 1});
    RainbowAssignment ones(4, 12);
    for (auto& s : ones.colors) s = ColorSet::single(1);
    CHECK_THROWS_AS(audit_extremal_4(g, ones), ContractError);
}

TEST_CASE("extremal-5 audit passes on pattern and solver witness") {
    const Graph g6 = build_generalized_petersen({6, 1});
    CHECK(audit_extremal_5(g6, extremal_pattern(6, 1, 5)).overall);
    const SolveResult r = solve_profile_dp({6, 1}, 5);
    REQUIRE(r.optimum == 10);
    CHECK(audit_extremal_5(g6, r.witness).overall);
}

TEST_CASE("extremal-5 audit flags a perturbed pattern") {
    const Graph g = build_generalized_petersen({12, 1});
    RainbowAssignment a = extremal_pattern(12, 1, 5);
    std::swap(a.colors[0], a.colors[1]);
    CHECK_FALSE(audit_extremal_5(g, a).overall);
}

TEST_CASE("audits are invariant under recoloring and rotation") {
    const Graph g = build_generalized_petersen({12, 1});
    RainbowAssignment a = extremal_pattern(12, 1, 4);

    RainbowAssignment recolored(4, 24);
    const int perm[4] = {3, 4, 1, 2};
    for (int v = 0; v < 24; ++v)
        for (int c : a.colors[v].members()) recolored.colors[v].add(perm[c - 1]);
    CHECK(audit_extremal_4(g, recolored).overall);

    for (int shift : {1, 5}) CHECK(audit_extremal_4(g, rotated(a, 12, shift)).overall);
}

TEST_CASE("outer pattern audit detects phase and partition") {
    std::optional<OuterPatternFinding> finding;
    const AuditReport report = audit_outer_pattern({12, 1}, extremal_pattern(12, 1, 3), &finding);
    CHECK(report.overall);
    REQUIRE(finding.has_value());
    CHECK(finding->phase == 0);
    CHECK(finding->part_a == ColorSet::single(1));

    // The detected partition regenerates an equal-weight valid assignment.
    const TriPartition p(finding->part_a, finding->part_b, finding->part_c, 3);
    const RainbowAssignment regen = extremal_pattern(12, 1, 3, p);
    CHECK(weight(regen) == 12);
    CHECK(verify_trdf(build_generalized_petersen({12, 1}), regen).pass);
}

TEST_CASE("outer pattern audit handles rotated and solver-found optima") {
    const RainbowAssignment a = extremal_pattern(6, 1, 3);
    for (int shift = 0; shift < 6; ++shift) {
        std::optional<OuterPatternFinding> finding;
        CHECK(audit_outer_pattern({6, 1}, rotated(a, 6, shift), &finding).overall);
        CHECK(finding.has_value());
    }
    const SolveResult r = solve_profile_dp({6, 1}, 3);
    REQUIRE(r.optimum == 6);
    CHECK(audit_outer_pattern({6, 1}, r.witness).overall);
}

TEST_CASE("outer pattern audit rejects non-extremal inputs") {
    const SolveResult r = solve_profile_dp({7, 1}, 3);
    REQUIRE(r.optimum == 8); // above 7, so the partition property must fail somewhere
    CHECK_THROWS_AS(audit_outer_pattern({7, 1}, r.witness), ContractError);
}

TEST_CASE("census vanishing audit") {
    const Graph g = build_generalized_petersen({6, 1});

    const SolveResult r4 = solve_profile_dp({6, 1}, 4);
    const AuditReport a4 = audit_weight_census_bounds(r4.witness, g, 4);
    CHECK(a4.overall);

    const SolveResult r5 = solve_profile_dp({6, 1}, 5);
    CHECK(audit_weight_census_bounds(r5.witness, g, 5).overall);

    // Weight at or above the premise threshold passes vacuously.
    RainbowAssignment ones(4, 12);
    for (auto& s : ones.colors) s = ColorSet::single(1);
    const AuditReport vac = audit_weight_census_bounds(ones, g, 4);
    CHECK(vac.overall);
    bool found_vacuous = false;
    for (const AuditCheck& check : vac.checks)
        if (check.details.rfind("vacuous", 0) == 0) found_vacuous = true;
    CHECK(found_vacuous);
}
