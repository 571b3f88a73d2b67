// dicritix command line tool: exact dichromatic-number computations,
// dicriticality reports, family generators, isomorph-free enumeration and
// theorem verification over small digraphs.
//
// Exit status: 0 on success (and empty violation lists), 1 when a verify run
// found violations, 2 on usage or format errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dicritix/criticality.hpp"
#include "dicritix/enumeration.hpp"
#include "dicritix/families.hpp"
#include "dicritix/io.hpp"
#include "dicritix/structure.hpp"
#include "dicritix/verify.hpp"

using json = nlohmann::json;
using namespace dicritix;

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long long env_ll(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::strtoll(v, nullptr, 10);
}

std::string colouring_str(const Colouring& phi) {
    std::string s;
    for (int v = 0; v < phi.n(); ++v) {
        if (v) s += ' ';
        s += std::to_string(v) + ":" + (phi.coloured(v) ? std::to_string(phi.colour[v]) : "-");
    }
    return s;
}

json criticality_json(const Digraph& G, const CriticalityReport& r) {
    json j{{"digraph6", write_digraph6(G)},
           {"chi", r.chi},
           {"is_dicritical", r.is_dicritical},
           {"min_degree_ok", r.min_degree_ok},
           {"dmin_ok", r.dmin_ok},
           {"induced_cycle_ok", r.induced_cycle_ok},
           {"simple_neighbour_duality_ok", r.simple_neighbour_duality_ok}};
    if (r.violating_arc) j["violating_arc"] = {r.violating_arc->first, r.violating_arc->second};
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dicritical digraph toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    int workers = int(env_ll("DICRITIX_WORKERS", 0));
    app.add_option("--workers", workers, "worker thread count (default: hardware)");
    long long budget_s = env_ll("DICRITIX_BUDGET_S", 0);
    app.add_option("--budget-s", budget_s, "wall clock budget for searches, seconds (0 = none)");
    int max_n = 16;
    app.add_option("--max-n", max_n, "largest supported order for canonical forms")
        ->check(CLI::Range(16, 31));

    std::string in_path, family_spec, theorem_id;
    int k = 0, n = 0, nmax = 0;
    long long samples = 0;
    std::uint64_t seed = std::uint64_t(env_ll("DICRITIX_SEED", 1));
    bool dicritical_only = false;
    int filter_dmin = 0, filter_deg = 0;
    bool filter_conn = false;

    auto* chi_cmd = app.add_subcommand("chi", "dichromatic number and a witness dicolouring");
    chi_cmd->add_option("file", in_path, "digraph file (digraph6 or edge list, '-' for stdin)")->required();

    auto* crit_cmd = app.add_subcommand("critical", "k-dicriticality report");
    crit_cmd->add_option("file", in_path)->required();
    crit_cmd->add_option("--k", k, "target k")->required();

    auto* gen_cmd = app.add_subcommand("gen", "generate a family member as digraph6");
    gen_cmd->add_option("spec", family_spec, "family spec, e.g. 'Dk(k=4,n=1)' or 'wheel(0,2,2)'")->required();

    auto* props_cmd = app.add_subcommand("props", "degrees, excess, potential, blocks, connectivity");
    props_cmd->add_option("file", in_path)->required();
    props_cmd->add_option("--k", k, "k for excess/potential/clusters")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "stream one digraph6 per isomorphism class");
    enum_cmd->add_option("--n", n, "order")->required();
    enum_cmd->add_option("--k", k, "k for --dicritical");
    enum_cmd->add_flag("--dicritical", dicritical_only, "only k-dicritical digraphs");
    enum_cmd->add_option("--min-dmin", filter_dmin, "filter: min directional degree");
    enum_cmd->add_option("--min-degree", filter_deg, "filter: min total degree");
    enum_cmd->add_flag("--connected", filter_conn, "filter: weakly connected");

    auto* table_cmd = app.add_subcommand("table", "minimum arc counts d_k(n)");
    table_cmd->add_option("--k", k)->required();
    table_cmd->add_option("--nmax", nmax)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a theorem predicate over its instance stream");
    verify_cmd->add_option("id", theorem_id, "theorem id (see --list)")->required();
    verify_cmd->add_option("--k", k);
    verify_cmd->add_option("--nmax", nmax);
    verify_cmd->add_option("--samples", samples);
    verify_cmd->add_option("--seed", seed);

    auto* list_cmd = app.add_subcommand("verify-list", "list known theorem ids");

    auto* canon_cmd = app.add_subcommand("canon", "canonical form as a hex string");
    canon_cmd->add_option("file", in_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (budget_s > 0) set_search_budget_seconds(budget_s);

        if (*chi_cmd) {
            Digraph G = parse_digraph(read_input(in_path));
            auto r = dichromatic_number(G);
            if (format == "json")
                std::cout << json{{"chi", r.chi}, {"witness", r.witness.colour}}.dump(2) << '\n';
            else
                std::cout << "chi = " << r.chi << "\nwitness: " << colouring_str(r.witness) << '\n';
        } else if (*crit_cmd) {
            Digraph G = parse_digraph(read_input(in_path));
            auto r = is_k_dicritical(G, k);
            if (format == "json") {
                std::cout << criticality_json(G, r).dump(2) << '\n';
            } else {
                std::cout << "chi = " << r.chi << "\n"
                          << (r.is_dicritical ? "" : "not ") << k << "-dicritical\n";
                if (r.violating_arc)
                    std::cout << "violating arc: " << r.violating_arc->first << "->"
                              << r.violating_arc->second << '\n';
                std::cout << "min_degree_ok=" << r.min_degree_ok << " dmin_ok=" << r.dmin_ok
                          << " induced_cycle_ok=" << r.induced_cycle_ok
                          << " simple_neighbour_duality_ok=" << r.simple_neighbour_duality_ok << '\n';
            }
        } else if (*gen_cmd) {
            std::cout << write_digraph6(gen_from_spec(family_spec)) << '\n';
        } else if (*props_cmd) {
            Digraph G = parse_digraph(read_input(in_path));
            json degs = json::array();
            for (int v = 0; v < G.order(); ++v) {
                auto d = degrees(G, v);
                degs.push_back({{"v", v}, {"out", d.dPlus}, {"in", d.dMinus}, {"d", d.d}});
            }
            auto bd = blocks(G);
            json jblocks = json::array();
            for (size_t i = 0; i < bd.blocks.size(); ++i)
                jblocks.push_back({{"vertices", bd.blocks[i].vertices.members()},
                                   {"kind", block_kind_name(bd.blocks[i].kind)},
                                   {"leaf", bd.is_leaf(i)}});
            auto gall = is_gallai_forest(G);
            json out{{"n", G.order()},
                     {"arcs", G.arc_count()},
                     {"degrees", degs},
                     {"excess", excess(G, std::max(2, k))},
                     {"blocks", jblocks},
                     {"separating_vertices", bd.separating_vertices.members()},
                     {"gallai_forest", gall.is_gallai_forest}};
            if (k >= 4) out["potential"] = potential(G, k).str();
            if (G.order() >= 2) out["arc_connectivity"] = arc_connectivity(G);
            if (k >= 3) {
                json cl = json::array();
                for (const auto& cluster : clusters(G, k)) cl.push_back(cluster.members());
                out["clusters"] = cl;
            }
            if (format == "json") {
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << "n = " << out["n"] << ", arcs = " << out["arcs"]
                          << ", excess_k = " << out["excess"] << '\n';
                if (out.contains("potential")) std::cout << "potential = " << out["potential"] << '\n';
                if (out.contains("arc_connectivity"))
                    std::cout << "arc connectivity = " << out["arc_connectivity"] << '\n';
                std::cout << "gallai forest = " << (gall.is_gallai_forest ? "yes" : "no") << '\n';
                for (auto& b : out["blocks"])
                    std::cout << "block " << b["vertices"].dump() << " kind " << b["kind"]
                              << (b["leaf"].get<bool>() ? " (leaf)" : "") << '\n';
                if (out.contains("clusters")) std::cout << "clusters: " << out["clusters"].dump() << '\n';
            }
        } else if (*enum_cmd) {
            if (dicritical_only) {
                if (k <= 0) throw CLI::ValidationError("--dicritical requires --k");
                for (const auto& G : enumerate_k_dicritical(k, n, workers).digraphs())
                    std::cout << write_digraph6(G) << '\n';
            } else {
                EnumFilters f;
                f.min_dmin = filter_dmin;
                f.min_total_degree = filter_deg;
                f.connected = filter_conn;
                enumerate_digraphs(n, f, [](const Digraph& G) { std::cout << write_digraph6(G) << '\n'; },
                                   workers);
            }
        } else if (*table_cmd) {
            MinArcsTable t = min_arcs_table(k, nmax, workers);
            if (format == "json") {
                json rows = json::array();
                for (auto& e : t.entries)
                    rows.push_back({{"n", e.n},
                                    {"arcs", e.arcs},
                                    {"provenance", e.exhaustive ? "exhaustive" : "upper-bound-only"}});
                std::cout << json{{"k", t.k}, {"entries", rows}}.dump(2) << '\n';
            } else {
                std::cout << "d_" << t.k << "(n):\n";
                for (auto& e : t.entries)
                    std::cout << "  n=" << e.n << "  arcs=" << e.arcs
                              << (e.exhaustive ? "" : "  (upper bound only)") << '\n';
            }
        } else if (*verify_cmd) {
            VerifyOptions o;
            o.k = k;
            o.nmax = nmax;
            o.samples = samples;
            o.seed = seed;
            o.workers = workers;
            VerificationReport rep = verify_theorem(theorem_id, o);
            if (format == "json")
                std::cout << rep.to_json().dump(2) << '\n';
            else
                std::cout << rep.text();
            return rep.ok() ? 0 : 1;
        } else if (*list_cmd) {
            for (const auto& id : verify_ids()) std::cout << id << '\n';
        } else if (*canon_cmd) {
            Digraph G = parse_digraph(read_input(in_path));
            std::cout << canonical_form(G, max_n).hex() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
