#include "rainbowdom/audit.hpp"

#include <algorithm>
#include <sstream>

#include "rainbowdom/errors.hpp"

namespace rainbowdom {

void AuditReport::add(std::string name, bool pass, std::string details) {
    overall = overall && pass;
    checks.push_back({std::move(name), pass, std::move(details)});
}

namespace {

std::string list_vertices(const std::vector<int>& vs) {
    std::ostringstream out;
    for (size_t i = 0; i < vs.size() && i < 8; ++i) out << (i ? "," : "") << vs[i];
    if (vs.size() > 8) out << ",...";
    return out.str();
}

int colored_count(const RainbowAssignment& a) {
    return static_cast<int>(std::count_if(a.colors.begin(), a.colors.end(), [](ColorSet s) { return !s.empty(); }));
}

void require_extremal_input(const Graph& g, const RainbowAssignment& a, int t, long long weight_num,
                            long long weight_den) {
    if (!is_cubic(g)) throw ContractError("audit: graph is not cubic");
    if (a.t != t) throw ContractError("audit: expected a t=" + std::to_string(t) + " assignment");
    if (static_cast<int>(a.colors.size()) != g.n_vertices())
        throw ContractError("audit: assignment size does not match the graph");
    const long long expected = weight_num * g.n_vertices();
    if (static_cast<long long>(weight(a)) * weight_den != expected)
        throw ContractError("audit: weight " + std::to_string(weight(a)) + " is not the extremal " +
                            std::to_string(weight_num) + "/" + std::to_string(weight_den) + " of " +
                            std::to_string(g.n_vertices()) + " vertices");
}

bool neighbor_sets_partition(const Graph& g, const RainbowAssignment& a, int v) {
    ColorSet seen;
    int total = 0;
    for (int w : g.neighbors(v)) {
        if (a.colors[w].empty()) return false;
        if (!(seen & a.colors[w]).empty()) return false;
        seen = seen | a.colors[w];
        total += a.colors[w].size();
    }
    return total == a.t && seen == ColorSet::full(a.t);
}

void check_half_colored(AuditReport& report, const Graph& g, const RainbowAssignment& a) {
    const int colored = colored_count(a);
    report.add("half-colored", 2 * colored == g.n_vertices(),
               std::to_string(colored) + " of " + std::to_string(g.n_vertices()) + " vertices colored");
}

void check_neighbor_partitions(AuditReport& report, const Graph& g, const RainbowAssignment& a) {
    std::vector<int> bad;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (a.colors[v].empty() && !neighbor_sets_partition(g, a, v)) bad.push_back(v);
    report.add("uncolored-neighbor-partitions", bad.empty(),
               bad.empty() ? "" : "violated at vertices " + list_vertices(bad));
}

} // namespace

AuditReport audit_extremal_4(const Graph& g, const RainbowAssignment& a) {
    require_extremal_input(g, a, 4, 2, 3);
    const int n = g.n_vertices();
    AuditReport report;
    report.add("verifies", verify_trdf(g, a).pass);
    check_half_colored(report, g, a);

    const Census c = census(a);
    const bool census_ok = c.by_size[1] == n / 3 && c.by_size[2] == n / 6 && c.by_size[3] == 0 && c.by_size[4] == 0;
    report.add("census-n1-n2", census_ok,
               "n_1=" + std::to_string(c.by_size[1]) + " n_2=" + std::to_string(c.by_size[2]) + " n_3=" +
                   std::to_string(c.by_size[3]) + " n_4=" + std::to_string(c.by_size[4]));

    std::vector<int> mixed;
    for (auto [x, y] : g.edges())
        if (a.colors[x].empty() == a.colors[y].empty()) mixed.push_back(x);
    report.add("colored-uncolored-bipartition", mixed.empty(),
               mixed.empty() ? "" : "same-class edges at " + list_vertices(mixed));

    check_neighbor_partitions(report, g, a);
    return report;
}

AuditReport audit_extremal_5(const Graph& g, const RainbowAssignment& a) {
    require_extremal_input(g, a, 5, 5, 6);
    AuditReport report;
    report.add("verifies", verify_trdf(g, a).pass);
    check_half_colored(report, g, a);

    std::vector<int> dependent;
    for (auto [x, y] : g.edges())
        if (!a.colors[x].empty() && !a.colors[y].empty()) dependent.push_back(x);
    report.add("colored-set-independent", dependent.empty(),
               dependent.empty() ? "" : "colored-colored edges at " + list_vertices(dependent));

    check_neighbor_partitions(report, g, a);

    const Census c = census(a);
    report.add("census-n4-n5-zero", c.by_size[4] == 0 && c.by_size[5] == 0,
               "n_4=" + std::to_string(c.by_size[4]) + " n_5=" + std::to_string(c.by_size[5]));
    return report;
}

AuditReport audit_outer_pattern(const PetersenParams& params, const RainbowAssignment& a,
                                std::optional<OuterPatternFinding>* finding) {
    if (finding) finding->reset();
    const Graph g = build_generalized_petersen(params);
    if (static_cast<int>(a.colors.size()) != g.n_vertices())
        throw ContractError("audit: assignment does not match P(" + std::to_string(params.n) + "," +
                            std::to_string(params.k) + ")");
    for (int v = 0; v < g.n_vertices(); ++v)
        if (a.colors[v].empty() && !neighbor_sets_partition(g, a, v))
            throw ContractError("audit: extremality precondition fails, neighbor sets of uncolored vertex " +
                                std::to_string(v) + " do not partition the color set");
    // The partition property alone does not pin the extremal structure: a
    // non-extremal assignment can satisfy it at every uncolored vertex while
    // coloring more than half the graph. The pattern conclusion needs the
    // extremal half/half split, so that is part of the precondition.
    if (2 * colored_count(a) != g.n_vertices())
        throw ContractError("audit: extremality precondition fails, " + std::to_string(colored_count(a)) + " of " +
                            std::to_string(g.n_vertices()) + " vertices are colored, expected exactly half");

    const int n = params.n;
    AuditReport report;
    report.add("uncolored-neighbor-partitions", true);
    report.add("half-colored", true);

    for (int phase = 0; phase < n; ++phase) {
        for (int dir : {1, -1}) {
            const ColorSet A = a.colors[outer_vertex(phase, n)];
            const ColorSet B = a.colors[outer_vertex(phase + 2 * dir, n)];
            const ColorSet C = a.colors[outer_vertex(phase + 4 * dir, n)];
            if (A.empty() || B.empty() || C.empty()) continue;
            if (!(A & B).empty() || !(A & C).empty() || !(B & C).empty()) continue;
            if ((A | B | C) != ColorSet::full(a.t)) continue;
            const ColorSet cycle[6] = {A, {}, B, {}, C, {}};
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                ok = a.colors[outer_vertex(phase + dir * i, n)] == cycle[i % 6];
            if (ok) {
                report.add("outer-pattern-period-6", true,
                           "phase=" + std::to_string(phase) + " direction=" + (dir == 1 ? std::string("+") : "-") +
                               " A=" + to_string(A) + " B=" + to_string(B) + " C=" + to_string(C));
                if (finding) *finding = OuterPatternFinding{phase, dir, A, B, C};
                return report;
            }
        }
    }
    report.add("outer-pattern-period-6", false, "no rotation or reflection matches A-0-B-0-C-0");
    return report;
}

AuditReport audit_weight_census_bounds(const RainbowAssignment& a, const Graph& g, int t) {
    AuditReport report;
    const bool valid = static_cast<int>(a.colors.size()) == g.n_vertices() && a.t == t && verify_trdf(g, a).pass;
    report.add("verifies", valid);
    if (!valid) return report;

    const Census c = census(a);
    const long long w = weight(a);
    const long long n = g.n_vertices();
    if (t == 4) {
        if (4 * w < 3 * n)
            report.add("n3-n4-zero", c.by_size[3] == 0 && c.by_size[4] == 0,
                       "n_3=" + std::to_string(c.by_size[3]) + " n_4=" + std::to_string(c.by_size[4]));
        else
            report.add("n3-n4-zero", true, "vacuous: weight " + std::to_string(w) + " >= 3/4 of " + std::to_string(n));
    } else if (t == 5) {
        if (w < n)
            report.add("n4-n5-zero", c.by_size[4] == 0 && c.by_size[5] == 0,
                       "n_4=" + std::to_string(c.by_size[4]) + " n_5=" + std::to_string(c.by_size[5]));
        else
            report.add("n4-n5-zero", true, "vacuous: weight " + std::to_string(w) + " >= " + std::to_string(n));
    } else {
        report.add("census-vanishing", true, "vacuous: no census conclusion for t=" + std::to_string(t));
    }
    return report;
}

} // namespace rainbowdom
