#ifndef RAINBOWDOM_AUDIT_HPP
#define RAINBOWDOM_AUDIT_HPP

#include <string>
#include <vector>

#include "rainbowdom/graph.hpp"
#include "rainbowdom/rdf.hpp"

namespace rainbowdom {

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string details;
};

/// Executable conclusions of the structural lemmas, evaluated on a concrete
/// assignment. overall is the conjunction of the individual checks.
struct AuditReport {
    std::vector<AuditCheck> checks;
    bool overall = true;

    void add(std::string name, bool pass, std::string details = "");
};

/// Structure forced on a minimum-weight 4-RDF of weight 2|V|/3 on a cubic
/// graph: half the vertices colored, census (n_1, n_2) = (|V|/3, |V|/6) with
/// n_3 = n_4 = 0, colored/uncolored classes bipartition the graph, and the
/// neighbor sets of every uncolored vertex partition {1..4}. A non-cubic
/// graph or a non-extremal weight is a contract error; verification itself is
/// a reported check, so deliberately perturbed assignments get a full
/// deficiency picture instead of an exception.
AuditReport audit_extremal_4(const Graph& g, const RainbowAssignment& a);

/// Same for a 5-RDF of weight 5|V|/6: half colored, colored set independent,
/// every uncolored vertex has three colored neighbors partitioning {1..5},
/// and n_4 = n_5 = 0.
AuditReport audit_extremal_5(const Graph& g, const RainbowAssignment& a);

/// How the periodic outer pattern sits in a detected assignment.
struct OuterPatternFinding {
    int phase = 0;
    int direction = 1; // +1 forward, -1 reflected
    ColorSet part_a, part_b, part_c;
};

/// Verifies that the outer cycle matches A-0-B-0-C-0 with period 6 up to
/// rotation and reflection, reporting the detected phase and partition (also
/// via `finding` when given). Requires the partition property at every
/// uncolored vertex (contract error otherwise, e.g. on non-extremal inputs).
AuditReport audit_outer_pattern(const PetersenParams& params, const RainbowAssignment& a,
                                std::optional<OuterPatternFinding>* finding = nullptr);

/// Census vanishing on minimum-weight assignments: for t=4, weight < 3|V|/4
/// forces n_3 = n_4 = 0; for t=5, weight < |V| forces n_4 = n_5 = 0. Vacuous
/// pass when the weight premise fails. Minimality is caller-asserted.
AuditReport audit_weight_census_bounds(const RainbowAssignment& a, const Graph& g, int t);

} // namespace rainbowdom

#endif
