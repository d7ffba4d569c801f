#include "rainbowdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "rainbowdom/errors.hpp"

namespace rainbowdom {

Graph::Graph(int n_vertices) {
    if (n_vertices < 0)
        throw std::invalid_argument("graph: vertex count must be nonnegative");
    adj_.resize(n_vertices);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_vertices())
        throw std::invalid_argument("graph: vertex id " + std::to_string(v) + " out of range 0.." +
                                    std::to_string(n_vertices() - 1));
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& nbrs : adj_) twice += static_cast<int>(nbrs.size());
    return twice / 2;
}

void Graph::add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b)
        throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(a));
    if (has_edge(a, b))
        throw std::invalid_argument("graph: duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    adj_[a].insert(std::upper_bound(adj_[a].begin(), adj_[a].end(), b), b);
    adj_[b].insert(std::upper_bound(adj_[b].begin(), adj_[b].end(), a), a);
}

bool Graph::has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int a = 0; a < n_vertices(); ++a)
        for (int b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out; // already lexicographic: a ascending, adj_[a] sorted
}

void Graph::set_label(int v, std::string label) {
    check_vertex(v);
    labels_[v] = std::move(label);
}

std::optional<std::string> Graph::label(int v) const {
    check_vertex(v);
    auto it = labels_.find(v);
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

bool is_cubic(const Graph& g) {
    for (int v = 0; v < g.n_vertices(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<int> side(n, -1);
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v)
        (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

PetersenParams::PetersenParams(int n_in, int k_in) : n(n_in), k(k_in) {
    if (n < 3)
        throw std::invalid_argument("petersen: n must be at least 3, got " + std::to_string(n));
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("petersen: k must satisfy 1 <= k <= n-1, got k=" + std::to_string(k));
    if (2 * k == n)
        throw std::invalid_argument("petersen: 2k = n makes P(n,k) non-cubic (k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n) + ")");
    k = std::min(k, n - k); // P(n,k) and P(n,n-k) have identical edge sets
}

Graph build_generalized_petersen(const PetersenParams& params) {
    const int n = params.n;
    const int k = params.k;
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(outer_vertex(i, n), outer_vertex(i + 1, n));
        g.add_edge(outer_vertex(i, n), inner_vertex(i, n));
        g.add_edge(inner_vertex(i, n), inner_vertex(i + k, n));
    }
    for (int i = 0; i < n; ++i) {
        g.set_label(i, "u" + std::to_string(i));
        g.set_label(n + i, "v" + std::to_string(i));
    }
    return g;
}

namespace {

// K4 edges in lexicographic order; subdivision vertex j splits kK4Edges[j].
constexpr std::pair<int, int> kK4Edges[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

int k4_edge_index(int a, int b) {
    for (int j = 0; j < 6; ++j)
        if (kK4Edges[j] == std::pair<int, int>{a, b}) return j;
    throw std::logic_error("k4_edge_index: not a K4 edge");
}

} // namespace

Graph build_subdivided_k4() {
    Graph g(10);
    for (int j = 0; j < 6; ++j) {
        auto [a, b] = kK4Edges[j];
        g.add_edge(a, 4 + j);
        g.add_edge(b, 4 + j);
        g.set_label(4 + j, "s" + std::to_string(a) + std::to_string(b));
    }
    for (int a = 0; a < 4; ++a) g.set_label(a, "b" + std::to_string(a));
    return g;
}

Graph build_example_graph() {
    Graph g(36);
    // Three subdivided-K4 copies at id offsets 0, 10, 20.
    for (int copy = 0; copy < 3; ++copy) {
        const int base = 10 * copy;
        for (int j = 0; j < 6; ++j) {
            auto [a, b] = kK4Edges[j];
            g.add_edge(base + a, base + 4 + j);
            g.add_edge(base + b, base + 4 + j);
            g.set_label(base + 4 + j, "c" + std::to_string(copy) + ".s" + std::to_string(a) + std::to_string(b));
        }
        for (int a = 0; a < 4; ++a)
            g.set_label(base + a, "c" + std::to_string(copy) + ".b" + std::to_string(a));
    }
    // Hubs: one per 2-subset of {1,2,3,4}; branch vertex b carries color b+1.
    // Hub {x,y} joins, per copy, the vertex subdividing the edge between the
    // branches colored with the complementary pair.
    int hub = 30;
    for (int x = 1; x <= 4; ++x) {
        for (int y = x + 1; y <= 4; ++y) {
            int a = -1, b = -1;
            for (int color = 1; color <= 4; ++color) {
                if (color == x || color == y) continue;
                (a == -1 ? a : b) = color - 1;
            }
            const int sub = 4 + k4_edge_index(a, b);
            for (int copy = 0; copy < 3; ++copy) g.add_edge(hub, 10 * copy + sub);
            g.set_label(hub, "h" + std::to_string(x) + std::to_string(y));
            ++hub;
        }
    }
    return g;
}

} // namespace rainbowdom
