#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treecompat/cuts.hpp"
#include "treecompat/display.hpp"
#include "treecompat/elig.hpp"
#include "treecompat/oracle.hpp"
#include "treecompat/phylo.hpp"
#include "treecompat/splits.hpp"
#include "treecompat/triangulate.hpp"

using json = nlohmann::json;
using namespace treecompat;

namespace {

constexpr int kExitCompatible = 0;
constexpr int kExitIncompatible = 1;
constexpr int kExitError = 2;

struct Options {
    std::vector<std::string> inputs;
    int max_cut_vertices = 24;
    long max_steps = 10000000;
    int oracle_max_labels = 7;
    unsigned seed = 0;  // reserved; all pipeline output is deterministic
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

Profile load_profile(const std::vector<std::string>& paths) {
    Profile p;
    for (const std::string& path : paths) {
        Profile part = parse_profile(read_file(path));
        p.insert(p.end(), part.begin(), part.end());
    }
    if (p.empty()) throw std::runtime_error("no trees in input");
    return p;
}

CutSearchOptions search_options(const Options& o) {
    CutSearchOptions s;
    s.max_vertices = o.max_cut_vertices;
    s.max_steps = o.max_steps;
    return s;
}

// The display graph of a multi-block profile is disconnected; the cut
// machinery works per block.
DisplayGraph single_block_display(const Profile& p, const std::string& cmd) {
    auto blocks = partition_profile(p);
    if (blocks.size() != 1)
        throw std::runtime_error(cmd + " needs a profile with a connected display graph; this one has " +
                                 std::to_string(blocks.size()) +
                                 " blocks (run them separately)");
    return build_display_graph(p);
}

int cmd_check(const Options& o, const std::string& certificate_path) {
    Profile p = load_profile(o.inputs);
    auto blocks = partition_profile(p);
    json report;
    report["blocks"] = json::array();
    bool all_ok = true;
    std::string single_certificate;
    for (const Profile& block : blocks) {
        DisplayGraph d = build_display_graph(block);
        SolveResult r = find_complete_parallel_set(d, search_options(o));
        json jb;
        jb["trees"] = json::array();
        for (const PhyloTree& t : block) jb["trees"].push_back(serialize_newick(t));
        if (r.certificate) {
            CutCertificate minimal = minimalize_complete_set(d, *r.certificate);
            std::string cert = certificate_to_json(d, minimal);
            jb["compatible"] = true;
            jb["certificate"] = json::parse(cert);
            if (blocks.size() == 1) single_certificate = cert;
        } else {
            jb["compatible"] = false;
            jb["blocking_edges"] = json::array();
            for (const Edge& e : r.blocking_edges)
                jb["blocking_edges"].push_back(d.graph.edge_name(e));
            all_ok = false;
        }
        report["blocks"].push_back(std::move(jb));
    }
    report["verdict"] = all_ok ? "compatible" : "incompatible";
    if (!certificate_path.empty()) {
        if (blocks.size() != 1)
            throw std::runtime_error("--certificate needs a single-block profile");
        if (!all_ok) throw std::runtime_error("no certificate: profile is incompatible");
        write_file(certificate_path, single_certificate + "\n");
    }
    std::cout << report.dump(2) << "\n";
    return all_ok ? kExitCompatible : kExitIncompatible;
}

// Certificates exist per block; a full supertree joins the block supertrees
// through fresh internal vertices, which vanish again under restriction.
PhyloTree join_supertrees(const std::vector<PhyloTree>& trees) {
    if (trees.size() == 1) return trees[0];
    std::vector<std::set<int>> adj;
    std::map<int, std::string> labels;
    std::vector<int> anchors;
    for (const PhyloTree& t : trees) {
        int base = static_cast<int>(adj.size());
        for (int v = 0; v < t.num_vertices(); ++v) {
            adj.emplace_back();
            if (t.is_leaf(v)) labels[base + v] = t.label(v);
        }
        for (const auto& [a, b] : t.edges()) {
            adj[base + a].insert(base + b);
            adj[base + b].insert(base + a);
        }
        if (t.num_vertices() == 1) {
            anchors.push_back(base);
        } else {
            int leaf = t.leaf_with_label(*t.labels().begin());
            int nb = *t.neighbors(leaf).begin();
            int mid = static_cast<int>(adj.size());
            adj.emplace_back();
            adj[base + leaf].erase(base + nb);
            adj[base + nb].erase(base + leaf);
            adj[base + leaf].insert(mid);
            adj[mid].insert(base + leaf);
            adj[base + nb].insert(mid);
            adj[mid].insert(base + nb);
            anchors.push_back(mid);
        }
    }
    if (anchors.size() == 2) {
        adj[anchors[0]].insert(anchors[1]);
        adj[anchors[1]].insert(anchors[0]);
    } else {
        int hub = static_cast<int>(adj.size());
        adj.emplace_back();
        for (int a : anchors) {
            adj[a].insert(hub);
            adj[hub].insert(a);
        }
    }
    return PhyloTree::from_adjacency(std::move(adj), std::move(labels));
}

int cmd_supertree(const Options& o) {
    Profile p = load_profile(o.inputs);
    std::vector<PhyloTree> parts;
    for (const Profile& block : partition_profile(p)) {
        DisplayGraph d = build_display_graph(block);
        SolveResult r = find_complete_parallel_set(d, search_options(o));
        if (!r.certificate) {
            std::cerr << "incompatible block; blocking edges:";
            for (const Edge& e : r.blocking_edges)
                std::cerr << " " << d.graph.edge_name(e);
            std::cerr << "\n";
            return kExitIncompatible;
        }
        CutCertificate minimal = minimalize_complete_set(d, *r.certificate);
        parts.push_back(supertree_from_certificate(d, minimal));
    }
    std::cout << serialize_newick(join_supertrees(parts)) << "\n";
    return kExitCompatible;
}

int cmd_triangulate(const Options& o, const std::string& emit,
                    const std::string& dot_path, const std::string& fill_path) {
    Profile p = load_profile(o.inputs);
    if (emit == "display") {
        std::cout << build_display_graph(p).to_dot();
        return kExitCompatible;
    }
    if (emit == "elig") {
        std::cout << build_elig(build_display_graph(p)).to_dot();
        return kExitCompatible;
    }
    DisplayGraph d = single_block_display(p, "triangulate");
    SolveResult r = find_complete_parallel_set(d, search_options(o));
    if (!r.certificate) {
        std::cerr << "incompatible profile; no legal triangulation from cuts\n";
        return kExitIncompatible;
    }
    CutCertificate minimal = minimalize_complete_set(d, *r.certificate);
    LegalTriangulation t = build_legal_triangulation(d, minimal.cuts);
    std::string dot = triangulation_to_dot(d, t);
    std::string fill = fill_edges_to_json(d, t);
    if (dot_path.empty())
        std::cout << dot;
    else
        write_file(dot_path, dot);
    if (fill_path.empty())
        std::cout << fill << "\n";
    else
        write_file(fill_path, fill + "\n");
    return kExitCompatible;
}

int cmd_verify(const Options& o, const std::string& certificate_path, bool oracle) {
    Profile p = load_profile(o.inputs);
    DisplayGraph d = single_block_display(p, "verify");
    CutCertificate c = certificate_from_json(d, read_file(certificate_path));
    CertificateCheck check = validate_certificate(d, c);
    if (!check.valid) {
        std::cout << "invalid: " << check.failure << "\n";
        return kExitIncompatible;
    }
    std::cout << "valid\n";
    if (oracle) {
        OracleBudget b;
        b.max_labels = o.oracle_max_labels;
        OracleResult ground = brute_force_compatible(p, b);
        if (!ground.compatible) {
            std::cout << "oracle: incompatible (certificate contradicts exhaustive search)\n";
            return kExitIncompatible;
        }
        std::cout << "oracle: compatible, witness " << serialize_newick(*ground.supertree)
                  << "\n";
    }
    return kExitCompatible;
}

int cmd_emit(const Options& o, const std::string& what) {
    Profile p = load_profile(o.inputs);
    DisplayGraph d = build_display_graph(p);
    if (what == "display")
        std::cout << d.to_dot();
    else if (what == "elig")
        std::cout << build_elig(d).to_dot();
    else
        throw std::runtime_error("unknown emit target: " + what);
    return kExitCompatible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree compatibility via minimal cuts of the display graph"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("inputs", o.inputs, "Newick profile files")->required();
        cmd->add_option("--max-cut-vertices", o.max_cut_vertices,
                        "vertex cap for cut enumeration");
        cmd->add_option("--max-steps", o.max_steps, "enumeration step budget");
        cmd->add_option("--oracle-max-labels", o.oracle_max_labels,
                        "label cap for the brute-force oracle");
        cmd->add_option("--seed", o.seed, "random seed (output is deterministic)");
    };

    std::string certificate_path, emit_target, dot_path, fill_path;
    bool oracle = false;

    CLI::App* check = app.add_subcommand("check", "decide compatibility");
    add_common(check);
    check->add_option("--certificate", certificate_path, "write the certificate JSON here");

    CLI::App* supertree = app.add_subcommand("supertree", "print a compatible supertree");
    add_common(supertree);

    CLI::App* triangulate =
        app.add_subcommand("triangulate", "emit a legal triangulation of the display graph");
    add_common(triangulate);
    triangulate->add_option("--emit", emit_target, "emit display|elig DOT instead")
        ->check(CLI::IsMember({"display", "elig"}));
    triangulate->add_option("--dot", dot_path, "write DOT here instead of stdout");
    triangulate->add_option("--fill", fill_path, "write the fill JSON here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate against a profile");
    add_common(verify);
    verify->add_option("--certificate", certificate_path, "certificate JSON file")->required();
    verify->add_flag("--oracle", oracle, "cross-check with the brute-force oracle");

    CLI::App* emit = app.add_subcommand("emit", "print a DOT rendering");
    emit->add_option("what", emit_target, "display or elig")
        ->required()
        ->check(CLI::IsMember({"display", "elig"}));
    add_common(emit);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(o, certificate_path);
        if (supertree->parsed()) return cmd_supertree(o);
        if (triangulate->parsed()) return cmd_triangulate(o, emit_target, dot_path, fill_path);
        if (verify->parsed()) return cmd_verify(o, certificate_path, oracle);
        if (emit->parsed()) return cmd_emit(o, emit_target);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
