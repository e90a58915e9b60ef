// The graph G_s(D) of a Kauffman state: one vertex per circle of D_s, one
// edge per crossing, joining the circles the crossing touches.  Adequacy,
// cycle and clasp queries used by the torsion criteria live here.

#ifndef KHT_STATE_GRAPH_HPP
#define KHT_STATE_GRAPH_HPP

#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "kht/diagram.hpp"

namespace kht {

struct StateGraph {
    int vertices = 0;
    struct GEdge {
        int u, v;       // endpoint circles, u <= v
        int crossing;   // index in the diagram
        bool loop() const { return u == v; }
    };
    std::vector<GEdge> edges;  // in crossing order

    int multiplicity(int a, int b) const {
        if (a > b) std::swap(a, b);
        int m = 0;
        for (const auto& e : edges) m += (e.u == a && e.v == b);
        return m;
    }
    bool singular(const GEdge& e) const {
        return !e.loop() && multiplicity(e.u, e.v) == 1;
    }
    bool has_loop() const {
        for (const auto& e : edges)
            if (e.loop()) return true;
        return false;
    }
    bool has_multi_edge() const {
        for (const auto& e : edges)
            if (!e.loop() && multiplicity(e.u, e.v) >= 2) return true;
        return false;
    }

    std::vector<std::vector<std::pair<int, int>>> adjacency() const {
        std::vector<std::vector<std::pair<int, int>>> adj(vertices);
        for (size_t k = 0; k < edges.size(); ++k) {
            adj[edges[k].u].push_back({edges[k].v, static_cast<int>(k)});
            if (!edges[k].loop())
                adj[edges[k].v].push_back({edges[k].u, static_cast<int>(k)});
        }
        return adj;
    }

    // Edge-list export, one `u v crossing` line per edge.
    std::string edge_list() const {
        std::ostringstream out;
        for (const auto& e : edges)
            out << e.u << ' ' << e.v << ' ' << e.crossing << '\n';
        return out.str();
    }
};

inline StateGraph build_state_graph(const Diagram& d, const State& s) {
    CircleSet cs = d.smooth(s);
    StateGraph g;
    g.vertices = cs.count;
    for (int c = 0; c < d.crossing_count(); ++c) {
        auto [a, b] = cs.touch[c];
        if (a > b) std::swap(a, b);
        g.edges.push_back({a, b, c});
    }
    return g;
}

inline StateGraph plus_graph(const Diagram& d) {
    return build_state_graph(d, d.all_positive());
}
inline StateGraph minus_graph(const Diagram& d) {
    return build_state_graph(d, d.all_negative());
}

inline bool is_plus_adequate(const Diagram& d) {
    return !plus_graph(d).has_loop();
}
inline bool is_minus_adequate(const Diagram& d) {
    return !minus_graph(d).has_loop();
}
inline bool is_adequate(const Diagram& d) {
    return is_plus_adequate(d) && is_minus_adequate(d);
}
inline bool is_doubly_plus_adequate(const Diagram& d) {
    StateGraph g = plus_graph(d);
    return !g.has_loop() && !g.has_multi_edge();
}

// Not bipartite: a loop counts as an odd 1-cycle.
inline bool has_odd_cycle(const StateGraph& g) {
    if (g.has_loop()) return true;
    auto adj = g.adjacency();
    std::vector<int> color(g.vertices, -1);
    for (int s = 0; s < g.vertices; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (auto [v, k] : adj[u]) {
                if (color[v] == -1) {
                    color[v] = color[u] ^ 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return true;
                }
            }
        }
    }
    return false;
}

namespace detail {

// Shortest simple path u -> v of odd edge count avoiding one edge, found by
// iterative deepening with neighbors visited in edge order (deterministic).
inline bool odd_simple_path(const StateGraph& g,
                            const std::vector<std::vector<std::pair<int, int>>>& adj,
                            int banned_edge, int from, int to, int remaining,
                            std::vector<bool>& used_vertex,
                            std::vector<int>& path_edges) {
    for (auto [v, k] : adj[from]) {
        if (k == banned_edge || g.edges[k].loop()) continue;
        if (remaining == 1) {
            if (v != to) continue;
            path_edges.push_back(k);
            return true;
        }
        if (v == to || used_vertex[v]) continue;
        used_vertex[v] = true;
        path_edges.push_back(k);
        if (odd_simple_path(g, adj, banned_edge, v, to, remaining - 1,
                            used_vertex, path_edges))
            return true;
        path_edges.pop_back();
        used_vertex[v] = false;
    }
    return false;
}

}  // namespace detail

// An even cycle of length >= 4 through an edge whose endpoint pair has
// multiplicity 1 ("singular": not part of a 2-gon).  Returns the crossing
// indices of the first such cycle, scanning singular edges in crossing order
// and closing each with a shortest odd simple path between its endpoints.
inline std::optional<std::vector<int>> find_even_cycle_with_singular_edge(
    const StateGraph& g) {
    auto adj = g.adjacency();
    for (size_t k = 0; k < g.edges.size(); ++k) {
        const auto& e = g.edges[k];
        if (!g.singular(e)) continue;
        for (int len = 3; len <= g.vertices; len += 2) {
            std::vector<bool> used(g.vertices, false);
            used[e.u] = true;
            std::vector<int> path;
            if (detail::odd_simple_path(g, adj, static_cast<int>(k), e.u, e.v,
                                        len, used, path)) {
                std::vector<int> cycle{g.edges[k].crossing};
                for (int ke : path) cycle.push_back(g.edges[ke].crossing);
                return cycle;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Clasps: two crossings joined by two parallel strands.  The pair is of type
// T[-2] when the inner 2-edge circle appears in the all-positive smoothing,
// and of type T[+2] when it appears in the all-negative one.
// ---------------------------------------------------------------------------

struct Clasp {
    int c1, c2;           // crossing indices, c1 < c2
    int type;             // -2 or +2
    bool hopf_summand;    // the two graph edges share both endpoints
    bool singular_certified;  // Lemma 4.2 conclusion, checked on the graph
};

inline std::vector<Clasp> detect_clasps(const Diagram& d) {
    std::vector<Clasp> out;
    const auto& cr = d.crossings();
    const int n = d.crossing_count();
    auto shares = [&](int i, int j) {
        std::vector<Edge> common;
        for (Edge a : cr[i].end)
            for (Edge b : cr[j].end)
                if (a == b) common.push_back(a);
        std::sort(common.begin(), common.end());
        common.erase(std::unique(common.begin(), common.end()), common.end());
        return common;
    };
    for (int sgn : {+1, -1}) {
        State s = sgn > 0 ? d.all_positive() : d.all_negative();
        CircleSet cs = d.smooth(s);
        StateGraph g = build_state_graph(d, s);
        // circle -> member edge count (to recognize 2-edge circles)
        std::vector<int> size(cs.count, 0);
        for (int e = 0; e < d.edge_count(); ++e) size[cs.circle_of_edge[e]]++;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                auto common = shares(i, j);
                if (common.size() < 2) continue;
                bool found = false;
                for (size_t a = 0; a < common.size() && !found; ++a) {
                    for (size_t b = a + 1; b < common.size() && !found; ++b) {
                        int ca = cs.circle_of_edge[d.edge_index(common[a])];
                        int cb = cs.circle_of_edge[d.edge_index(common[b])];
                        if (ca != cb || size[ca] != 2) continue;
                        // inner circle of the clasp
                        int inner = ca;
                        auto other = [&](int c) {
                            return g.edges[c].u == inner ? g.edges[c].v
                                                         : g.edges[c].u;
                        };
                        bool summand = other(i) == other(j) &&
                                       !g.edges[i].loop() && !g.edges[j].loop();
                        bool certified = false;
                        if (!summand)
                            certified = g.singular(g.edges[i]) &&
                                        g.singular(g.edges[j]) &&
                                        !g.edges[i].loop() &&
                                        !g.edges[j].loop();
                        bool dup = false;
                        for (const auto& cl : out)
                            if (cl.c1 == i && cl.c2 == j) dup = true;
                        if (!dup)
                            out.push_back({i, j, sgn > 0 ? -2 : +2, summand,
                                           certified});
                        found = true;
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace kht

#endif  // KHT_STATE_GRAPH_HPP