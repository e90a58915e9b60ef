// Exact bigraded homology over Z.  Groups are reported as a free rank plus
// invariant factors d1 | d2 | ...; the kernel of the outgoing differential
// is computed as a lattice basis and the incoming differential is expressed
// in it, so the quotient is read off a Smith normal form.

#ifndef KHT_HOMOLOGY_HPP
#define KHT_HOMOLOGY_HPP

#include <json.hpp>

#include "kht/chain.hpp"
#include "kht/diagram.hpp"
#include "kht/int_matrix.hpp"

namespace kht {

struct AbelianGroup {
    long free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors, each > 1

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool torsion_free() const { return torsion.empty(); }

    bool has_torsion_divisible_by(const mpz_class& p) const {
        for (const auto& d : torsion)
            if (d % p == 0) return true;
        return false;
    }

    bool operator==(const AbelianGroup&) const = default;

    std::string str() const {
        if (trivial()) return "0";
        std::string s;
        if (free_rank == 1) s = "Z";
        else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
        for (const auto& d : torsion) {
            if (!s.empty()) s += " + ";
            s += "Z/" + d.get_str();
        }
        return s;
    }
};

inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    AbelianGroup out;
    out.free_rank = a.free_rank + b.free_rank;
    std::vector<mpz_class> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    for (const auto& d : detail::canonical_factors(std::move(all)))
        if (d > 1) out.torsion.push_back(d);
    return out;
}

// ker(d_out) / im(d_in).  d_out acts on the group whose homology we take;
// d_in arrives from one homological degree above.
inline AbelianGroup homology_group(const IntMat& d_in, const IntMat& d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::invalid_argument("homology_group: dimension mismatch");
    if (!(d_out * d_in).is_zero())
        throw std::invalid_argument("homology_group: d o d != 0");
    IntMat kernel = kernel_lattice_basis(d_out);
    IntMat expressed = solve_in_lattice(kernel, d_in);
    auto factors = smith_invariant_factors(expressed);
    AbelianGroup g;
    g.free_rank = kernel.cols() - static_cast<long>(factors.size());
    for (const auto& f : factors)
        if (f > 1) g.torsion.push_back(f);
    return g;
}

struct HomologyTable {
    std::string diagram_id;
    std::string convention = "framed";
    int n = 0;
    int s_plus = 0;
    int s_minus = 0;
    std::map<std::pair<int, int>, AbelianGroup> groups;  // nonzero only

    const AbelianGroup& at(int i, int j) const {
        static const AbelianGroup zero{};
        auto it = groups.find({i, j});
        return it == groups.end() ? zero : it->second;
    }

    long total_free_rank() const {
        long r = 0;
        for (const auto& [ij, g] : groups) r += g.free_rank;
        return r;
    }

    bool operator==(const HomologyTable& o) const {
        return groups == o.groups;
    }

    // rows sorted by (j, i)
    std::string text() const {
        std::vector<std::pair<std::pair<int, int>, const AbelianGroup*>> rows;
        for (const auto& [ij, g] : groups)
            rows.push_back({{ij.second, ij.first}, &g});
        std::sort(rows.begin(), rows.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::ostringstream out;
        for (const auto& [ji, g] : rows)
            out << "H(" << ji.second << "," << ji.first << ") = " << g->str()
                << "\n";
        return out.str();
    }

    nlohmann::json to_json() const {
        nlohmann::json rows = nlohmann::json::array();
        std::vector<std::pair<int, int>> keys;
        for (const auto& [ij, g] : groups) keys.push_back(ij);
        std::sort(keys.begin(), keys.end(), [](auto a, auto b) {
            return std::make_pair(a.second, a.first) <
                   std::make_pair(b.second, b.first);
        });
        for (auto [i, j] : keys) {
            const auto& g = groups.at({i, j});
            nlohmann::json tor = nlohmann::json::array();
            for (const auto& d : g.torsion) tor.push_back(d.get_str());
            rows.push_back({{"i", i},
                            {"j", j},
                            {"free", g.free_rank},
                            {"torsion", tor}});
        }
        return {{"diagram", diagram_id},
                {"convention", convention},
                {"crossings", n},
                {"s_plus", s_plus},
                {"s_minus", s_minus},
                {"groups", rows}};
    }

    static HomologyTable from_json(const nlohmann::json& js) {
        HomologyTable t;
        t.diagram_id = js.at("diagram").get<std::string>();
        t.convention = js.at("convention").get<std::string>();
        t.n = js.at("crossings").get<int>();
        t.s_plus = js.at("s_plus").get<int>();
        t.s_minus = js.at("s_minus").get<int>();
        for (const auto& row : js.at("groups")) {
            AbelianGroup g;
            g.free_rank = row.at("free").get<long>();
            for (const auto& d : row.at("torsion"))
                g.torsion.push_back(mpz_class(d.get<std::string>()));
            if (!g.trivial())
                t.groups[{row.at("i").get<int>(), row.at("j").get<int>()}] = g;
        }
        return t;
    }
};

inline HomologyTable khovanov_table(const Diagram& d,
                                    const std::string& id = "") {
    ChainContext ctx(d);
    HomologyTable t;
    t.diagram_id = id;
    t.n = d.crossing_count();
    t.s_plus = d.s_plus_circles();
    t.s_minus = d.s_minus_circles();
    for (auto [i, j] : ctx.support()) {
        const IntMat& d_out = ctx.differential(i, j);
        const IntMat& d_in = ctx.differential(i + 2, j);
        AbelianGroup g = homology_group(d_in, d_out);
        if (!g.trivial()) t.groups[{i, j}] = g;
    }
    return t;
}

// Remark 1.6 conversion to the oriented (cohomological, q-graded)
// convention: i' = (w - i)/2, j' = (3w - j)/2.
inline HomologyTable grading_convert(const HomologyTable& t, int writhe) {
    HomologyTable out = t;
    out.convention = "oriented";
    out.groups.clear();
    for (const auto& [ij, g] : t.groups) {
        auto [i, j] = ij;
        if ((writhe - i) % 2 != 0 || (3 * writhe - j) % 2 != 0)
            throw std::invalid_argument("grading parity violation");
        out.groups[{(writhe - i) / 2, (3 * writhe - j) / 2}] = g;
    }
    return out;
}

// Duality combined with universal coefficients:
//   FH_{i,j}(D) = FH_{-i,-j}(mirror D)
//   T_{i,j}(mirror D) = T_{-i-2,-j}(D)
struct DualityReport {
    bool holds = true;
    std::string first_violation;
};

inline DualityReport verify_duality_uct(const Diagram& d) {
    HomologyTable td = khovanov_table(d);
    HomologyTable tm = khovanov_table(d.mirrored());
    DualityReport rep;
    std::set<std::pair<int, int>> keys;
    for (const auto& [ij, g] : td.groups) keys.insert(ij);
    for (const auto& [ij, g] : tm.groups) {
        keys.insert({-ij.first, -ij.second});
        keys.insert({-ij.first - 2, -ij.second});
    }
    for (auto [i, j] : keys) {
        if (td.at(i, j).free_rank != tm.at(-i, -j).free_rank) {
            rep.holds = false;
            rep.first_violation = "free rank at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")";
            return rep;
        }
        if (tm.at(i, j).torsion != td.at(-i - 2, -j).torsion) {
            rep.holds = false;
            rep.first_violation = "torsion at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") of mirror";
            return rep;
        }
    }
    return rep;
}

}  // namespace kht

#endif  // KHT_HOMOLOGY_HPP