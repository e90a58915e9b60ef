// kht: exact Khovanov homology of link diagrams, with verifiers for the
// torsion/thickness/exact-sequence statements the library implements.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "kht/bracket.hpp"
#include "kht/catalog.hpp"
#include "kht/field.hpp"
#include "kht/homology.hpp"
#include "kht/split.hpp"
#include "kht/state_graph.hpp"
#include "kht/thickness.hpp"
#include "kht/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitBadConfig = 3;

struct Input {
    std::string catalog_name;
    std::string pd_file;
    std::string orient;  // per-component +/- string
    int basepoint = -1;
};

void add_input_options(CLI::App* cmd, Input& in) {
    cmd->add_option("--catalog", in.catalog_name, "built-in diagram name");
    cmd->add_option("--pd", in.pd_file, "planar-diagram code file");
    cmd->add_option("--orient", in.orient,
                    "orientation per component, e.g. +- (default all +)");
    cmd->add_option("--basepoint", in.basepoint, "basepoint edge label");
}

kht::Diagram load(const Input& in, const std::string& what = "diagram") {
    if (in.catalog_name.empty() == in.pd_file.empty())
        throw CLI::ValidationError(what,
                                   "give exactly one of --catalog / --pd");
    kht::Diagram d;
    if (!in.catalog_name.empty()) {
        try {
            d = kht::catalog(in.catalog_name);
        } catch (const std::invalid_argument& e) {
            throw CLI::ValidationError("catalog", e.what());
        }
    } else {
        std::ifstream f(in.pd_file);
        if (!f) throw kht::ParseError("cannot open " + in.pd_file);
        std::stringstream ss;
        ss << f.rdbuf();
        d = kht::parse_pd(ss.str());
    }
    if (in.basepoint >= 0) d.set_basepoint(in.basepoint);
    return d;
}

std::vector<int> orient_flips(const kht::Diagram& d, const std::string& s) {
    if (s.empty()) return {};
    std::vector<int> flips;
    for (char c : s) {
        if (c == '+') flips.push_back(+1);
        else if (c == '-') flips.push_back(-1);
        else throw CLI::ValidationError("orient", "use only + and -");
    }
    size_t n = d.components().size();
    if (flips.size() != n)
        throw CLI::ValidationError(
            "orient", "expected " + std::to_string(n) + " signs");
    return flips;
}

std::string diagram_label(const Input& in) {
    return !in.catalog_name.empty() ? in.catalog_name : in.pd_file;
}

struct Coeff {
    bool integers = true;
    bool rationals = false;
    long p = 0;
};

Coeff parse_coeff(const std::string& s) {
    Coeff c;
    if (s.empty() || s == "z") return c;
    c.integers = false;
    if (s == "q") {
        c.rationals = true;
        return c;
    }
    if (s.size() > 1 && s[0] == 'z') {
        long p = std::stol(s.substr(1));
        bool prime = p >= 2;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) throw CLI::ValidationError("coeff", "modulus must be prime");
        c.p = p;
        return c;
    }
    throw CLI::ValidationError("coeff", "use z, q or z<p>");
}

void print_field_table(const std::map<std::pair<int, int>, int>& t,
                       const std::string& field, const std::string& label,
                       bool json_out, std::ostream& out) {
    if (json_out) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [ij, dim] : t)
            rows.push_back(
                {{"i", ij.first}, {"j", ij.second}, {"dim", dim}});
        out << nlohmann::json{{"diagram", label},
                              {"field", field},
                              {"groups", rows}}
                   .dump(2)
            << "\n";
        return;
    }
    std::vector<std::pair<std::pair<int, int>, int>> rows;
    for (const auto& [ij, dim] : t)
        rows.push_back({{ij.second, ij.first}, dim});
    std::sort(rows.begin(), rows.end());
    for (const auto& [ji, dim] : rows)
        out << "H(" << ji.second << "," << ji.first << "; " << field
            << ") = dim " << dim << "\n";
}

int writhe_of(const kht::Diagram& d, const std::vector<int>& flips) {
    return kht::orient(d, flips).writhe();
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact Khovanov homology of link diagrams"};
    app.require_subcommand(1);

    Input in;
    std::string format = "text";
    std::string coeff = "z";
    bool oriented_conv = false;

    auto* homology = app.add_subcommand("homology", "bigraded homology table");
    add_input_options(homology, in);
    homology->add_option("--format", format, "text or json");
    homology->add_option("--coeff", coeff, "z (default), q, or z<p>");
    homology->add_flag("--oriented-convention", oriented_conv,
                       "convert gradings per the oriented convention");

    auto* verify = app.add_subcommand("verify", "run a verifier");
    std::string verifier;
    int crossing = -1;
    int edge = -1;
    verify->add_option("name", verifier,
                       "odd-cycle | even-cycle | hopf-split | skein-les | "
                       "r1-shift | reduced | thickness | euler | duality")
        ->required();
    add_input_options(verify, in);
    verify->add_option("--format", format, "text or json");
    verify->add_option("--crossing", crossing, "crossing selector");
    verify->add_option("--edge", edge, "edge selector (hopf-split)");

    auto* bracket = app.add_subcommand("bracket", "bracket and Jones polynomials");
    add_input_options(bracket, in);
    bracket->add_option("--format", format, "text or json");

    auto* graph = app.add_subcommand("graph", "state graph edge list");
    std::string state = "s+";
    add_input_options(graph, in);
    graph->add_option("--state", state, "s+ or s-");

    auto* cat = app.add_subcommand("catalog", "list built-in diagrams");

    auto* matrix = app.add_subcommand("matrix", "differential in triplet form");
    int mi = 0, mj = 0;
    add_input_options(matrix, in);
    matrix->add_option("--i", mi, "homological grading")->required();
    matrix->add_option("--j", mj, "polynomial grading")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitBadConfig;
    }

    try {
        bool json_out = format == "json";
        if (format != "text" && format != "json")
            throw CLI::ValidationError("format", "use text or json");

        if (cat->parsed()) {
            for (const auto& n : kht::catalog_names()) out << n << "\n";
            return kExitOk;
        }

        if (homology->parsed()) {
            kht::Diagram d = load(in);
            Coeff cf = parse_coeff(coeff);
            auto flips = orient_flips(d, in.orient);
            if (cf.integers) {
                kht::HomologyTable t = kht::khovanov_table(d, diagram_label(in));
                if (oriented_conv)
                    t = kht::grading_convert(t, writhe_of(d, flips));
                out << (json_out ? t.to_json().dump(2) + "\n" : t.text());
            } else if (cf.rationals) {
                auto t = kht::khovanov_table_field(d, kht::FieldQ{});
                if (oriented_conv) {
                    int w = writhe_of(d, flips);
                    std::map<std::pair<int, int>, int> conv;
                    for (auto& [ij, dim] : t)
                        conv[{(w - ij.first) / 2, (3 * w - ij.second) / 2}] =
                            dim;
                    t = conv;
                }
                print_field_table(t, "Q", diagram_label(in), json_out, out);
            } else {
                auto t = kht::khovanov_table_field(d, kht::FieldZp{cf.p});
                if (oriented_conv) {
                    int w = writhe_of(d, flips);
                    std::map<std::pair<int, int>, int> conv;
                    for (auto& [ij, dim] : t)
                        conv[{(w - ij.first) / 2, (3 * w - ij.second) / 2}] =
                            dim;
                    t = conv;
                }
                print_field_table(t, "Z" + std::to_string(cf.p),
                                  diagram_label(in), json_out, out);
            }
            return kExitOk;
        }

        if (bracket->parsed()) {
            kht::Diagram d = load(in);
            kht::Laurent br = kht::kauffman_bracket(d);
            kht::Laurent un = kht::bracket_unnormalized(d);
            kht::Laurent jones =
                kht::jones_polynomial(d, orient_flips(d, in.orient));
            if (json_out) {
                out << nlohmann::json{{"diagram", diagram_label(in)},
                                      {"bracket", br.str()},
                                      {"bracket_unreduced", un.str()},
                                      {"jones", kht::jones_str(jones)}}
                           .dump(2)
                    << "\n";
            } else {
                out << "<D> = " << br.str() << "\n";
                out << "[D] = " << un.str() << "\n";
                out << "V(t) = " << kht::jones_str(jones) << "\n";
            }
            return kExitOk;
        }

        if (graph->parsed()) {
            kht::Diagram d = load(in);
            if (state != "s+" && state != "s-")
                throw CLI::ValidationError("state", "use s+ or s-");
            kht::StateGraph g = state == "s+" ? kht::plus_graph(d)
                                              : kht::minus_graph(d);
            out << g.edge_list();
            return kExitOk;
        }

        if (matrix->parsed()) {
            kht::Diagram d = load(in);
            kht::ChainContext ctx(d);
            out << ctx.differential(mi, mj).triplets();
            return kExitOk;
        }

        if (verify->parsed()) {
            kht::Diagram d = load(in);
            std::string label = diagram_label(in);
            std::vector<kht::Report> reports;
            if (verifier == "odd-cycle") {
                reports.push_back(kht::verify_odd_cycle_torsion(d, label));
            } else if (verifier == "even-cycle") {
                reports.push_back(kht::verify_even_cycle_torsion(d, label));
            } else if (verifier == "hopf-split") {
                std::optional<kht::Edge> at;
                if (edge >= 0) at = edge;
                reports.push_back(kht::verify_hopf_splitting(d, at, label));
            } else if (verifier == "skein-les") {
                if (crossing >= 0) {
                    reports.push_back(kht::verify_skein_les(d, crossing, label));
                } else {
                    for (int c = 0; c < d.crossing_count(); ++c)
                        reports.push_back(kht::verify_skein_les(d, c, label));
                }
            } else if (verifier == "r1-shift") {
                reports.push_back(kht::verify_r1_shift(d, label));
            } else if (verifier == "reduced") {
                kht::Edge bp = in.basepoint >= 0
                                   ? in.basepoint
                                   : (d.edge_count() ? d.edges().front() : -1);
                if (bp < 0)
                    throw CLI::ValidationError("reduced", "needs a basepoint");
                reports.push_back(kht::verify_reduced(d, bp, label));
            } else if (verifier == "thickness") {
                reports.push_back(kht::verify_thickness_alternating(d, label));
                reports.push_back(kht::verify_adequate_spread(d, label));
                kht::ThicknessReport th = kht::thickness(kht::khovanov_table(d));
                if (!json_out) {
                    auto part = [&](const char* name,
                                    const kht::ThicknessPart& p) {
                        out << name << ": ";
                        if (p.k)
                            out << "(" << p.k->first << "," << p.k->second
                                << ")-thick";
                        else
                            out << "empty support";
                        auto kv = p.k_value(th.n, th.s_plus, th.s_minus);
                        if (kv) out << ", k = " << *kv;
                        out << "\n";
                    };
                    part("H", th.h);
                    part("FH", th.fh);
                    part("TH", th.th);
                }
            } else if (verifier == "euler") {
                reports.push_back(kht::euler_characteristic_check(d, label));
            } else if (verifier == "duality") {
                reports.push_back(kht::verify_duality(d, label));
            } else {
                throw CLI::ValidationError("verify", "unknown verifier " + verifier);
            }
            bool all_ok = true;
            nlohmann::json jreports = nlohmann::json::array();
            for (const auto& r : reports) {
                all_ok = all_ok && r.passed();
                if (json_out)
                    jreports.push_back(r.to_json());
                else
                    out << r.theorem << " [" << r.diagram << "]: "
                        << (!r.applicable ? "inapplicable"
                                          : (r.holds ? "holds" : "FAILS"))
                        << "\n";
            }
            if (json_out) out << jreports.dump(2) << "\n";
            return all_ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return kExitBadConfig;
    } catch (const kht::ParseError& e) {
        err << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitParseError;
    }
    return kExitBadConfig;
}

#ifndef KHT_CLI_NO_MAIN
int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}
#endif