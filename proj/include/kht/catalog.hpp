// Built-in diagrams and the constructions behind them: closures of braid
// words and medial diagrams of plane multigraphs (which realize a prescribed
// Tait graph as G_{s+}).

#ifndef KHT_CATALOG_HPP
#define KHT_CATALOG_HPP

#include <numeric>
#include <string>

#include "kht/diagram.hpp"

namespace kht {

// Closure of a braid word.  Letters are +/-i for the generator crossing
// strand positions i-1 and i (1-based i < strands).  For a positive letter
// the all-positive smoothing runs parallel to the strands, so the closure of
// an all-positive word has |s+| = strand count; negative letters are the
// mirror image.
inline Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1) throw std::invalid_argument("need at least one strand");
    std::vector<Edge> cur(strands), init(strands);
    std::iota(cur.begin(), cur.end(), 1);
    init = cur;
    Edge next = strands + 1;
    std::vector<Crossing> cr;
    for (int letter : word) {
        int i = std::abs(letter);
        if (i < 1 || i >= strands)
            throw std::invalid_argument("braid letter out of range");
        Edge nw = cur[i - 1], ne = cur[i];
        Edge sw = next++, se = next++;
        if (letter > 0)
            cr.push_back(Crossing{{nw, sw, se, ne}});
        else
            cr.push_back(Crossing{{sw, se, ne, nw}});
        cur[i - 1] = sw;
        cur[i] = se;
    }
    // close up: identify each strand's outgoing label with its initial one
    detail::UnionFind uf(next);
    int loops = 0;
    for (int s = 0; s < strands; ++s) {
        if (cur[s] == init[s]) {
            ++loops;  // strand without crossings closes to a free loop
            continue;
        }
        uf.unite(cur[s], init[s]);
    }
    for (auto& x : cr)
        for (auto& e : x.end) e = uf.find(e);
    return Diagram(std::move(cr), loops).canonicalized();
}

// ---------------------------------------------------------------------------
// Medial construction: given a connected plane multigraph (as a rotation
// system), build the alternating diagram whose all-positive state graph is
// the input graph.  Crossings are the edges of the graph; the circles of the
// positive smoothing are its vertices, those of the negative smoothing its
// faces.
// ---------------------------------------------------------------------------

struct PlaneGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotation;  // ccw edge order at each vertex
};

inline Diagram medial_alternating(const PlaneGraph& g) {
    std::vector<int> degree(g.vertices, 0);
    std::vector<std::array<int, 2>> pos(g.edges.size(), {-1, -1});
    for (int v = 0; v < g.vertices; ++v) {
        for (size_t k = 0; k < g.rotation[v].size(); ++k) {
            int e = g.rotation[v][k];
            auto [a, b] = g.edges[e];
            if (a == b)
                throw std::invalid_argument("loop edges not supported");
            int slot = (v == a) ? 0 : 1;
            if (v != a && v != b)
                throw std::invalid_argument("rotation lists foreign edge");
            pos[e][slot] = static_cast<int>(k);
        }
        degree[v] = static_cast<int>(g.rotation[v].size());
    }
    std::vector<int> corner_base(g.vertices + 1, 0);
    for (int v = 0; v < g.vertices; ++v)
        corner_base[v + 1] = corner_base[v] + degree[v];
    auto corner = [&](int v, int k) {
        int d = degree[v];
        return corner_base[v] + ((k % d) + d) % d + 1;
    };
    std::vector<Crossing> cr;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        int pu = pos[e][0], pv = pos[e][1];
        if (pu < 0 || pv < 0)
            throw std::invalid_argument("edge missing from a rotation");
        cr.push_back(Crossing{{corner(u, pu), corner(u, pu - 1),
                               corner(v, pv), corner(v, pv - 1)}});
    }
    return Diagram(std::move(cr));
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

// Left-handed (2,n) torus link diagram: G_{s+} is an n-gon.
inline Diagram torus_2n(int n) {
    if (n < 2) throw std::invalid_argument("T(2,n) needs n >= 2");
    return braid_closure(2, std::vector<int>(n, -1));
}

// The rational 10/3 link 6^2_2: Tait graph is a square with one edge tripled.
inline Diagram link_6_2_2() {
    PlaneGraph g;
    g.vertices = 4;
    g.edges = {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}};
    g.rotation = {{5, 0, 1, 2}, {2, 1, 0, 3}, {3, 4}, {4, 5}};
    return medial_alternating(g);
}

// The alternating 4-component chain 8^4_1: a square with every edge doubled.
inline Diagram link_8_4_1() {
    PlaneGraph g;
    g.vertices = 4;
    for (int k = 0; k < 4; ++k) {
        g.edges.push_back({k, (k + 1) % 4});
        g.edges.push_back({k, (k + 1) % 4});
    }
    g.rotation.resize(4);
    for (int k = 0; k < 4; ++k) {
        int prev = ((k + 3) % 4) * 2;
        g.rotation[k] = {prev + 1, prev, 2 * k, 2 * k + 1};
    }
    return medial_alternating(g);
}

// The (3,4) torus knot 8_19 as the closure of the positive braid
// (sigma_1 sigma_2)^4.
inline Diagram knot_8_19() {
    return braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2});
}

// Rolfsen's 10_153, an adequate non-alternating knot with |s+| = 6 and
// |s-| = 4 whose state graphs both contain triangles.
inline Diagram knot_10_153() {
    throw std::runtime_error("10_153 diagram not pinned yet");
}

inline Diagram connected_hopf_sum(int n) {
    if (n < 1) throw std::invalid_argument("hopf^n needs n >= 1");
    Diagram d = hopf_diagram();
    for (int k = 1; k < n; ++k) d = hopf_sum(d);
    return d;
}

inline std::vector<std::string> catalog_names() {
    return {"unknot",  "hopf",  "trefoil", "T(2,n)", "6_2_2",
            "8_19",    "8_4_1", "10_153",  "hopf^n"};
}

inline Diagram catalog(const std::string& name) {
    if (name == "unknot") return Diagram({}, 1);
    if (name == "hopf") return torus_2n(2);
    if (name == "trefoil") return torus_2n(3);
    if (name == "6_2_2") return link_6_2_2();
    if (name == "8_19") return knot_8_19();
    if (name == "8_4_1") return link_8_4_1();
    if (name == "10_153") return knot_10_153();
    if (name.starts_with("T(2,") && name.ends_with(")")) {
        int n = std::stoi(name.substr(4, name.size() - 5));
        return torus_2n(n);
    }
    if (name.starts_with("hopf^")) {
        int n = std::stoi(name.substr(5));
        return connected_hopf_sum(n);
    }
    throw std::invalid_argument("unknown catalog name: " + name);
}

}  // namespace kht

#endif  // KHT_CATALOG_HPP