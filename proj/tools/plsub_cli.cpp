#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plsub/certificate.hpp"
#include "plsub/errors.hpp"
#include "plsub/oracle.hpp"
#include "plsub/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitStageFail = 2;
constexpr int kExitInputError = 3;

plsub::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw plsub::InputError("cannot open " + path);
    return plsub::read_edge_list(in);
}

void save_graph(const std::string& path, const plsub::Graph& g) {
    std::ofstream out(path);
    if (!out) throw plsub::InputError("cannot open " + path + " for writing");
    plsub::write_edge_list(out, g);
}

// "0-1,1-2,2-3" -> {{0,1},{1,2},{2,3}}
std::vector<std::pair<int, int>> parse_tree(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos)
            throw plsub::InputError("bad tree edge '" + item + "' (expected u-v)");
        try {
            edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        } catch (const std::exception&) {
            throw plsub::InputError("bad tree edge '" + item + "'");
        }
    }
    if (edges.empty()) throw plsub::InputError("empty tree edge list");
    return edges;
}

int run(int argc, char** argv) {
    CLI::App app{"planar subgraph construction pipeline"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate an input graph (edge-list format)");
    gen->require_subcommand(1);
    std::string gen_out;

    auto* gen_bi = gen->add_subcommand("biclique", "disjoint union of k copies of K_{t,t}");
    int bi_k = 1, bi_t = 4;
    gen_bi->add_option("-k,--copies", bi_k, "number of copies")->required();
    gen_bi->add_option("-t,--side", bi_t, "side size of each copy")->required();
    gen_bi->add_option("-o,--output", gen_out, "output file")->required();

    auto* gen_bl = gen->add_subcommand("blowup", "blow-up of a tree with optional noise");
    std::string bl_tree;
    std::vector<int> bl_sizes;
    double bl_noise = 0.0;
    std::uint64_t bl_seed = 0;
    gen_bl->add_option("--tree", bl_tree, "tree edges, e.g. 0-1,1-2")->required();
    gen_bl->add_option("--sizes", bl_sizes, "part sizes")->required()->delimiter(',');
    gen_bl->add_option("--noise", bl_noise, "noise edge probability");
    gen_bl->add_option("--seed", bl_seed, "random seed");
    gen_bl->add_option("-o,--output", gen_out, "output file")->required();

    auto* gen_rn = gen->add_subcommand("random", "random graph with a minimum-degree floor");
    int rn_n = 100, rn_dmin = 10;
    std::uint64_t rn_seed = 0;
    gen_rn->add_option("-n,--vertices", rn_n, "vertex count")->required();
    gen_rn->add_option("--dmin", rn_dmin, "minimum degree")->required();
    gen_rn->add_option("--seed", rn_seed, "random seed");
    gen_rn->add_option("-o,--output", gen_out, "output file")->required();

    // ---- extract ----
    auto* ext = app.add_subcommand("extract", "run the pipeline and emit a certificate");
    std::string ext_in, ext_out;
    double ext_gamma = 0.3;
    plsub::RegularityParams ext_params;
    std::uint64_t ext_seed = 0;
    bool ext_waive = false;
    ext->add_option("-i,--input", ext_in, "input graph file")->required();
    ext->add_option("--gamma", ext_gamma, "degree fraction gamma in (0, 1/2)")->required();
    ext->add_option("--eps", ext_params.eps, "regularity tolerance");
    ext->add_option("--d", ext_params.d, "density threshold");
    ext->add_option("--seed", ext_seed, "random seed");
    ext->add_flag("--waive-size-check", ext_waive, "proceed below the degree precondition");
    ext->add_option("-o,--output", ext_out, "certificate file")->required();

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "check a certificate against its input graph");
    std::string ver_in, ver_cert;
    ver->add_option("-i,--input", ver_in, "input graph file")->required();
    ver->add_option("-c,--certificate", ver_cert, "certificate file")->required();

    // ---- oracle ----
    auto* ora = app.add_subcommand("oracle", "planar-subgraph value of a (small) graph");
    std::string ora_in;
    long ora_budget = 50000000;
    bool ora_greedy = false;
    std::uint64_t ora_seed = 0;
    ora->add_option("-i,--input", ora_in, "input graph file")->required();
    ora->add_option("--budget", ora_budget, "search node budget");
    ora->add_flag("--greedy", ora_greedy, "use the greedy heuristic instead");
    ora->add_option("--seed", ora_seed, "greedy shuffle seed");

    // ---- stats ----
    auto* sta = app.add_subcommand("stats", "basic graph statistics");
    std::string sta_in;
    sta->add_option("-i,--input", sta_in, "input graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    if (gen->parsed()) {
        plsub::Graph g;
        if (gen_bi->parsed()) {
            g = plsub::gen_disjoint_biclique(bi_k, bi_t);
        } else if (gen_bl->parsed()) {
            g = plsub::gen_tree_blowup(parse_tree(bl_tree), bl_sizes, bl_noise, bl_seed).first;
        } else {
            g = plsub::gen_random_min_degree(rn_n, rn_dmin, rn_seed);
        }
        save_graph(gen_out, g);
        std::cout << "wrote " << gen_out << ": n=" << g.n() << " m=" << g.e() << "\n";
        return kExitOk;
    }

    if (ext->parsed()) {
        const plsub::Graph g = load_graph(ext_in);
        ext_params.delta = ext_params.d - 2 * ext_params.eps;
        auto cfg = plsub::PipelineConfig::from_gamma(ext_gamma, ext_params, ext_seed);
        cfg.waive_size_check = ext_waive;
        plsub::Certificate cert;
        try {
            cert = plsub::extract_planar(g, ext_gamma, cfg);
        } catch (const plsub::InputError&) {
            throw;
        } catch (const plsub::Error& e) {
            std::cerr << "pipeline failed: " << e.what() << "\n";
            return kExitStageFail;
        }
        std::ofstream out(ext_out);
        if (!out) throw plsub::InputError("cannot open " + ext_out + " for writing");
        plsub::write_certificate(out, cert);
        std::cout << "n=" << cert.n << " k=" << cert.k << " components=" << cert.components.size()
                  << " insertions=" << cert.insertions.size() << " edges=" << cert.total_edges
                  << " bound=" << cert.claimed_bound << "\n";
        for (const auto& w : cert.waived_hypotheses) std::cout << "waived: " << w << "\n";
        return kExitOk;
    }

    if (ver->parsed()) {
        const plsub::Graph g = load_graph(ver_in);
        std::ifstream in(ver_cert);
        if (!in) throw plsub::InputError("cannot open " + ver_cert);
        const auto cert = plsub::read_certificate(in);
        const auto rep = plsub::verify_certificate(g, cert);
        if (rep.ok()) {
            std::cout << "OK: " << cert.total_edges << " edges >= " << cert.claimed_bound << "\n";
            return kExitOk;
        }
        for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
        return kExitVerifyFail;
    }

    if (ora->parsed()) {
        const plsub::Graph g = load_graph(ora_in);
        const auto r = ora_greedy ? plsub::pl_greedy(g, ora_seed) : plsub::pl_exact(g, ora_budget);
        std::cout << "pl=" << r.value << " exact=" << (r.exact ? "yes" : "no")
                  << " nodes=" << r.nodes_explored << "\n";
        for (auto [u, v] : r.witness_edges) std::cout << u << " " << v << "\n";
        return kExitOk;
    }

    const plsub::Graph g = load_graph(sta_in);
    const auto s = plsub::graph_stats(g);
    std::cout << "n=" << s.n << " m=" << s.e << " min_degree=" << s.min_degree << " components=";
    for (size_t i = 0; i < s.component_sizes.size(); ++i)
        std::cout << (i ? "," : "") << s.component_sizes[i];
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const plsub::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const plsub::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStageFail;
    }
}
