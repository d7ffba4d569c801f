#ifndef RAINBOWDOM_GRAPH_HPP
#define RAINBOWDOM_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rainbowdom {

/// Simple undirected graph on vertex ids 0..n-1 with sorted adjacency lists
/// and an optional per-vertex label map. Immutable once built (constructors
/// add edges, nothing mutates afterwards), so instances are safe to share
/// across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n_vertices);

    int n_vertices() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;

    /// Inserts the undirected edge {a,b}. Rejects loops, duplicates and
    /// out-of-range endpoints.
    void add_edge(int a, int b);

    bool has_edge(int a, int b) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    /// All edges as (a,b) with a < b, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    void set_label(int v, std::string label);
    std::optional<std::string> label(int v) const;
    const std::map<int, std::string>& labels() const { return labels_; }

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_ && labels_ == other.labels_;
    }

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::map<int, std::string> labels_;
};

bool is_cubic(const Graph& g);

/// Two-coloring of g, handling each connected component independently. The
/// lowest-id vertex of every component goes to part 0, which makes the output
/// deterministic. Empty optional when some component has an odd cycle.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

/// Parameters of a generalized Petersen graph P(n,k). Stored canonically with
/// k <= n/2, using the fact that P(n,k) and P(n,n-k) have the same edge set.
struct PetersenParams {
    int n = 3;
    int k = 1;

    PetersenParams(int n, int k);

    bool operator==(const PetersenParams&) const = default;
};

/// P(n,k): outer cycle u_0..u_{n-1} (ids 0..n-1), inner vertices v_0..v_{n-1}
/// (ids n..2n-1), edges u_i u_{i+1}, u_i v_i, v_i v_{i+k} with indices mod n.
/// This id convention is relied on by the pattern constructors and the
/// profile solver; do not change it.
Graph build_generalized_petersen(const PetersenParams& params);

inline int outer_vertex(int i, int n) { return ((i % n) + n) % n; }
inline int inner_vertex(int i, int n) { return n + ((i % n) + n) % n; }

/// K4 with every edge subdivided once: ids 0..3 are the branch vertices,
/// ids 4..9 the subdivision vertices in lexicographic order of the K4 edge
/// they split ((0,1),(0,2),(0,3),(1,2),(1,3),(2,3)).
Graph build_subdivided_k4();

/// Cubic 36-vertex graph: three subdivided-K4 copies (copy c at ids
/// 10c..10c+9) plus six hub vertices (ids 30..35), one per 2-element subset
/// of {1,2,3,4} in lexicographic order. Hub for subset S attaches, in each
/// copy, to the subdivision vertex of the K4 edge between the branch
/// vertices carrying the two colors outside S.
Graph build_example_graph();

// Text formats. Graphs serialize to JSON {"n_vertices": N, "edges": [[a,b],...],
// "labels": {...}} with a < b and edges sorted, so round trips are bit-exact.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
std::string export_dot(const Graph& g);

} // namespace rainbowdom

#endif
