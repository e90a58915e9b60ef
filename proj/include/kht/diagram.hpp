// Unoriented framed link diagrams as planar-diagram (PD) codes.
//
// A crossing record X(a,b,c,d) lists four edge ends in counterclockwise
// order; the strand a-c passes under b-d.  The positive (A) smoothing of a
// crossing joins (a,b) and (c,d); the negative smoothing joins (a,d) and
// (b,c).  Crossing order is fixed at construction: it defines the sign
// convention of the chain differential and is never silently reordered.

#ifndef KHT_DIAGRAM_HPP
#define KHT_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kht {

using Edge = int;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Crossing {
    std::array<Edge, 4> end;  // ccw; end[0]-end[2] under, end[1]-end[3] over

    bool operator==(const Crossing&) const = default;
};

// Kauffman state as a bitmask: bit k set <=> negative marker at crossing k.
struct State {
    std::uint32_t neg = 0;

    bool negative_at(int c) const { return (neg >> c) & 1u; }
    State flipped(int c) const { return State{neg ^ (1u << c)}; }
    bool operator==(const State&) const = default;
    auto operator<=>(const State&) const = default;
};

inline int popcount32(std::uint32_t x) { return __builtin_popcount(x); }

// Circles of a smoothed diagram D_s.  Circles are numbered deterministically
// by the smallest edge they contain; crossingless free loops come last.
struct CircleSet {
    int count = 0;
    std::vector<int> circle_of_edge;           // dense edge index -> circle id
    std::vector<std::pair<int, int>> touch;    // per crossing: circles at the
                                               // two smoothing arcs
    bool self_touch(int c) const { return touch[c].first == touch[c].second; }
};

namespace detail {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

  private:
    std::vector<int> parent_;
};

}  // namespace detail

class Diagram {
  public:
    Diagram() = default;

    Diagram(std::vector<Crossing> crossings, int free_loops = 0,
            std::optional<Edge> basepoint = std::nullopt)
        : crossings_(std::move(crossings)), free_loops_(free_loops),
          basepoint_(basepoint) {
        rebuild_index();
        validate();
    }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int free_loops() const { return free_loops_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::optional<Edge> basepoint() const { return basepoint_; }

    bool empty() const { return crossings_.empty() && free_loops_ == 0; }

    void set_basepoint(Edge e) {
        if (!edge_index_.count(e))
            throw std::invalid_argument("basepoint edge not in diagram");
        basepoint_ = e;
    }

    int edge_index(Edge e) const {
        auto it = edge_index_.find(e);
        if (it == edge_index_.end())
            throw std::invalid_argument("unknown edge label");
        return it->second;
    }

    // Circles of D_s by union-find over edges, pairing ends at each crossing
    // according to the marker.
    CircleSet smooth(const State& s) const {
        CircleSet cs;
        const int ne = edge_count();
        detail::UnionFind uf(ne);
        for (int c = 0; c < crossing_count(); ++c) {
            const auto& x = crossings_[c].end;
            if (s.negative_at(c)) {
                uf.unite(edge_index(x[0]), edge_index(x[3]));
                uf.unite(edge_index(x[1]), edge_index(x[2]));
            } else {
                uf.unite(edge_index(x[0]), edge_index(x[1]));
                uf.unite(edge_index(x[2]), edge_index(x[3]));
            }
        }
        // number circles by smallest member edge
        std::vector<int> id(ne, -1);
        cs.circle_of_edge.resize(ne);
        for (int e = 0; e < ne; ++e) {
            int r = uf.find(e);
            if (id[r] < 0) id[r] = cs.count++;
            cs.circle_of_edge[e] = id[r];
        }
        for (int c = 0; c < crossing_count(); ++c) {
            const auto& x = crossings_[c].end;
            int first, second;
            if (s.negative_at(c)) {
                first = cs.circle_of_edge[edge_index(x[0])];
                second = cs.circle_of_edge[edge_index(x[1])];
            } else {
                first = cs.circle_of_edge[edge_index(x[0])];
                second = cs.circle_of_edge[edge_index(x[2])];
            }
            cs.touch.emplace_back(first, second);
        }
        cs.count += free_loops_;  // free loops touch no crossing
        return cs;
    }

    State all_positive() const { return State{0}; }
    State all_negative() const {
        return State{crossing_count() == 32
                         ? ~0u
                         : ((1u << crossing_count()) - 1u)};
    }

    int s_plus_circles() const { return smooth(all_positive()).count; }
    int s_minus_circles() const { return smooth(all_negative()).count; }

    // Link components as a partition of edges (free loops are separate
    // components, counted but not listed).  Strands continue through a
    // crossing from end 0 to end 2 and from end 1 to end 3.
    std::vector<std::vector<Edge>> components() const {
        const int ne = edge_count();
        detail::UnionFind uf(ne);
        for (const auto& x : crossings_) {
            uf.unite(edge_index(x.end[0]), edge_index(x.end[2]));
            uf.unite(edge_index(x.end[1]), edge_index(x.end[3]));
        }
        std::map<int, std::vector<Edge>> by_root;
        for (int e = 0; e < ne; ++e) by_root[uf.find(e)].push_back(edges_[e]);
        std::vector<std::vector<Edge>> comps;
        for (auto& [r, v] : by_root) {
            std::sort(v.begin(), v.end());
            comps.push_back(std::move(v));
        }
        std::sort(comps.begin(), comps.end());
        return comps;
    }

    int component_count() const {
        return static_cast<int>(components().size()) + free_loops_;
    }

    // True when the underlying 4-valent graph is connected (free loops make
    // a diagram split by definition, unless they are all there is).
    bool connected() const {
        int base = static_cast<int>(components_of_crossing_graph());
        if (crossing_count() == 0) return free_loops_ <= 1;
        return base == 1 && free_loops_ == 0;
    }

    Diagram mirrored() const {
        std::vector<Crossing> cr;
        cr.reserve(crossings_.size());
        for (const auto& x : crossings_)
            cr.push_back(Crossing{{x.end[1], x.end[2], x.end[3], x.end[0]}});
        return Diagram(std::move(cr), free_loops_, basepoint_);
    }

    // Renumbers edges 1..E in order of first appearance; crossing order kept.
    Diagram canonicalized() const {
        std::map<Edge, Edge> remap;
        Edge next = 1;
        std::vector<Crossing> cr;
        for (const auto& x : crossings_) {
            Crossing y;
            for (int k = 0; k < 4; ++k) {
                auto [it, fresh] = remap.try_emplace(x.end[k], next);
                if (fresh) ++next;
                y.end[k] = it->second;
            }
            cr.push_back(y);
        }
        std::optional<Edge> bp;
        if (basepoint_ && remap.count(*basepoint_)) bp = remap[*basepoint_];
        return Diagram(std::move(cr), free_loops_, bp);
    }

    bool operator==(const Diagram& o) const {
        return crossings_ == o.crossings_ && free_loops_ == o.free_loops_ &&
               basepoint_ == o.basepoint_;
    }

  private:
    size_t components_of_crossing_graph() const {
        const int ne = edge_count();
        if (ne == 0) return 0;
        detail::UnionFind uf(ne);
        for (const auto& x : crossings_)
            for (int k = 1; k < 4; ++k)
                uf.unite(edge_index(x.end[0]), edge_index(x.end[k]));
        std::set<int> roots;
        for (int e = 0; e < ne; ++e) roots.insert(uf.find(e));
        return roots.size();
    }

    void rebuild_index() {
        edges_.clear();
        edge_index_.clear();
        std::map<Edge, int> occurrences;
        for (const auto& x : crossings_)
            for (Edge e : x.end) occurrences[e]++;
        for (const auto& [e, n] : occurrences) {
            if (e < 1)
                throw ParseError("edge labels must be positive, got " +
                                 std::to_string(e));
            if (n != 2)
                throw ParseError("edge label " + std::to_string(e) +
                                 " occurs " + std::to_string(n) +
                                 " times (expected 2)");
            edge_index_[e] = static_cast<int>(edges_.size());
            edges_.push_back(e);
        }
    }

    void validate() const {
        if (crossing_count() > 30)
            throw std::invalid_argument("diagram too large (max 30 crossings)");
        if (free_loops_ < 0)
            throw std::invalid_argument("negative free loop count");
        if (basepoint_ && !edge_index_.count(*basepoint_))
            throw ParseError("basepoint edge " + std::to_string(*basepoint_) +
                             " not present in diagram");
    }

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::optional<Edge> basepoint_;
    std::vector<Edge> edges_;
    std::map<Edge, int> edge_index_;
};

// ---------------------------------------------------------------------------
// PD text format: one record per line, `#` comments.
//   X(a,b,c,d)    crossing
//   O(k)          k crossingless free loops
//   basepoint e   marked edge
// ---------------------------------------------------------------------------

inline Diagram parse_pd(const std::string& text) {
    std::vector<Crossing> crossings;
    int free_loops = 0;
    std::optional<Edge> basepoint;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // also treat commas/parens as separators so X(1,2,3,4) tokenizes
        std::string cleaned;
        for (char ch : line)
            cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
        std::istringstream ls(cleaned);
        std::string head;
        if (!(ls >> head)) continue;
        auto want_int = [&](const char* what) {
            long v;
            if (!(ls >> v))
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected " + what);
            return static_cast<int>(v);
        };
        if (head == "X") {
            Crossing x;
            for (int k = 0; k < 4; ++k) x.end[k] = want_int("edge label");
            crossings.push_back(x);
        } else if (head == "O") {
            free_loops += want_int("loop count");
        } else if (head == "basepoint") {
            basepoint = want_int("basepoint edge");
        } else {
            throw ParseError("line " + std::to_string(lineno) +
                             ": unknown record '" + head + "'");
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(lineno) +
                             ": trailing tokens");
    }
    return Diagram(std::move(crossings), free_loops, basepoint);
}

inline std::string to_pd_text(const Diagram& d) {
    std::ostringstream out;
    for (const auto& x : d.crossings())
        out << "X(" << x.end[0] << ',' << x.end[1] << ',' << x.end[2] << ','
            << x.end[3] << ")\n";
    if (d.free_loops() > 0) out << "O(" << d.free_loops() << ")\n";
    if (d.basepoint()) out << "basepoint " << *d.basepoint() << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Diagram surgery
// ---------------------------------------------------------------------------

namespace detail {

inline int max_label(const Diagram& d) {
    int m = 0;
    for (Edge e : d.edges()) m = std::max(m, e);
    return m;
}

inline std::vector<Crossing> shifted(const Diagram& d, int by) {
    std::vector<Crossing> cr = d.crossings();
    for (auto& x : cr)
        for (auto& e : x.end) e += by;
    return cr;
}

}  // namespace detail

inline Diagram disjoint_union(const Diagram& a, const Diagram& b) {
    int shift = detail::max_label(a);
    std::vector<Crossing> cr = a.crossings();
    for (const auto& x : detail::shifted(b, shift)) cr.push_back(x);
    return Diagram(std::move(cr), a.free_loops() + b.free_loops());
}

// Splices b into a along edges ea (of a) and eb (of b).  The crossings of b
// are appended after those of a.
inline Diagram connected_sum(const Diagram& a, Edge ea, const Diagram& b,
                             Edge eb) {
    a.edge_index(ea);  // throws on bad label
    b.edge_index(eb);
    int shift = detail::max_label(a);
    std::vector<Crossing> cr = a.crossings();
    int seen = 0;
    for (auto& x : cr)
        for (auto& e : x.end)
            if (e == ea && ++seen == 2) e = eb + shift;
    auto tail = detail::shifted(b, shift);
    seen = 0;
    for (auto& x : tail)
        for (auto& e : x.end)
            if (e == eb + shift && ++seen == 1) e = ea;
    for (const auto& x : tail) cr.push_back(x);
    return Diagram(std::move(cr), a.free_loops() + b.free_loops());
}

// A two-crossing Hopf tangle: the clasp diagram T(2,2).
inline Diagram hopf_diagram() {
    return Diagram({Crossing{{1, 2, 4, 3}}, Crossing{{3, 4, 2, 1}}});
}

// Connected sum with the Hopf link at edge e; for a crossingless diagram the
// tangle absorbs one free loop.
inline Diagram hopf_sum(const Diagram& d, std::optional<Edge> e = std::nullopt) {
    if (d.crossing_count() == 0) {
        if (d.free_loops() < 1)
            throw std::invalid_argument("hopf_sum of empty diagram");
        Diagram h = hopf_diagram();
        return Diagram(h.crossings(), d.free_loops() - 1);
    }
    Edge at = e.value_or(d.edges().front());
    return connected_sum(d, at, hopf_diagram(), 1);
}

// First Reidemeister kinks.  A positive kink raises gradings by (1,3), a
// negative kink lowers them by (1,3).
inline Diagram add_kink(const Diagram& d, Edge e, int sign) {
    d.edge_index(e);
    int m = detail::max_label(d);
    Edge f = m + 1, g = m + 2;
    std::vector<Crossing> cr = d.crossings();
    int seen = 0;
    for (auto& x : cr)
        for (auto& end : x.end)
            if (end == e && ++seen == 2) end = f;
    if (sign > 0)
        cr.push_back(Crossing{{e, f, g, g}});
    else
        cr.push_back(Crossing{{f, g, g, e}});
    return Diagram(std::move(cr), d.free_loops());
}

// Replaces crossing c by its positive (marker +) or negative smoothing.
inline Diagram smooth_at(const Diagram& d, int c, int marker_sign) {
    if (c < 0 || c >= d.crossing_count())
        throw std::invalid_argument("crossing index out of range");
    const auto& x = d.crossings()[c].end;
    std::pair<Edge, Edge> pairs[2];
    if (marker_sign > 0) {
        pairs[0] = {x[0], x[1]};
        pairs[1] = {x[2], x[3]};
    } else {
        pairs[0] = {x[0], x[3]};
        pairs[1] = {x[1], x[2]};
    }
    std::vector<Crossing> cr;
    for (int k = 0; k < d.crossing_count(); ++k)
        if (k != c) cr.push_back(d.crossings()[k]);
    int loops = d.free_loops();
    for (auto [u, v] : pairs) {
        if (u == v) {
            ++loops;  // the arc closes onto itself
            continue;
        }
        Edge keep = std::min(u, v), drop = std::max(u, v);
        for (auto& y : cr)
            for (auto& e : y.end)
                if (e == drop) e = keep;
        for (auto& p : pairs) {
            if (p.first == drop) p.first = keep;
            if (p.second == drop) p.second = keep;
        }
    }
    return Diagram(std::move(cr), loops);
}

// ---------------------------------------------------------------------------
// Orientations and crossing signs
// ---------------------------------------------------------------------------

// Signs of crossings for a chosen orientation.  The default orientation
// traverses each component from its smallest edge toward that edge's first
// occurrence in the code; `flips` reverses selected components (indexed in
// components() order).
struct OrientedDiagram {
    std::vector<int> crossing_sign;  // per crossing, +1 or -1
    int n_plus = 0;
    int n_minus = 0;
    int writhe() const { return n_plus - n_minus; }
};

inline OrientedDiagram orient(const Diagram& d,
                              const std::vector<int>& flips = {}) {
    auto comps = d.components();
    if (!flips.empty() && flips.size() != comps.size())
        throw std::invalid_argument("one orientation sign per component");

    // occurrences of each edge in scan order
    std::map<Edge, std::vector<std::pair<int, int>>> occ;  // edge -> (c,pos)
    for (int c = 0; c < d.crossing_count(); ++c)
        for (int p = 0; p < 4; ++p)
            occ[d.crossings()[c].end[p]].push_back({c, p});

    // per crossing: incoming end of the under strand (0 or 2) and of the
    // over strand (1 or 3)
    std::vector<int> under_in(d.crossing_count(), -1);
    std::vector<int> over_in(d.crossing_count(), -1);

    for (size_t ci = 0; ci < comps.size(); ++ci) {
        if (comps[ci].empty()) continue;
        Edge start = comps[ci][0];
        bool reversed = !flips.empty() && flips[ci] < 0;
        std::pair<int, int> target = occ[start][reversed ? 0 : 1];
        Edge e = start;
        do {
            auto [c, p] = target;
            if (p == 0 || p == 2)
                under_in[c] = p;
            else
                over_in[c] = p;
            int q = p ^ 2;  // strand continues to the opposite end
            Edge next = d.crossings()[c].end[q];
            const auto& noc = occ[next];
            target = (noc[0] == std::make_pair(c, q)) ? noc[1] : noc[0];
            e = next;
        } while (!(e == start &&
                   target == occ[start][reversed ? 0 : 1]));
    }

    OrientedDiagram od;
    od.crossing_sign.resize(d.crossing_count());
    for (int c = 0; c < d.crossing_count(); ++c) {
        bool pos = (over_in[c] == 1 && under_in[c] == 2) ||
                   (over_in[c] == 3 && under_in[c] == 0);
        od.crossing_sign[c] = pos ? +1 : -1;
        (pos ? od.n_plus : od.n_minus)++;
    }
    return od;
}

// Wu's dual state lemma: |s+| + |s-| <= N + 2 for non-split diagrams, with
// equality exactly for alternating diagrams and their connected sums.
inline bool wu_equality(const Diagram& d) {
    return d.s_plus_circles() + d.s_minus_circles() == d.crossing_count() + 2;
}

}  // namespace kht

#endif  // KHT_DIAGRAM_HPP
