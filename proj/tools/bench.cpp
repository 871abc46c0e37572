// Times the serial and OpenMP minimal-separator subset scans and the two
// oracle compatibility checks on seeded random inputs, and checks they
// agree while at it.
#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treecompat/cuts.hpp"
#include "treecompat/display.hpp"
#include "treecompat/oracle.hpp"
#include "treecompat/phylo.hpp"

using namespace treecompat;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

PhyloTree random_binary_tree(const std::set<std::string>& labels, std::mt19937& rng) {
    std::vector<PhyloTree> all = enumerate_binary_topologies(labels);
    return all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)];
}

std::set<std::string> label_range(int n) {
    std::set<std::string> out;
    for (int i = 0; i < n; ++i) out.insert(std::string(1, static_cast<char>('a' + i)));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernel comparison"};
    unsigned seed = 42;
    int rounds = 5;
    int labels = 6;
    app.add_option("--seed", seed, "random seed");
    app.add_option("--rounds", rounds, "profiles per benchmark");
    app.add_option("--labels", labels, "labels per profile (<= 7)");
    CLI11_PARSE(app, argc, argv);

    std::mt19937 rng(seed);
    std::vector<Profile> profiles;
    for (int i = 0; i < rounds; ++i) {
        auto ls = label_range(labels);
        profiles.push_back({random_binary_tree(ls, rng), random_binary_tree(ls, rng)});
    }

    double t_serial = 0, t_parallel = 0;
    for (const Profile& p : profiles) {
        Graph g = build_display_graph(p).graph;
        auto start = clock_type::now();
        auto serial = enumerate_minimal_separators_serial(g);
        t_serial += seconds_since(start);
        start = clock_type::now();
        auto parallel = enumerate_minimal_separators(g);
        t_parallel += seconds_since(start);
        if (serial != parallel) {
            std::cerr << "separator enumerators disagree\n";
            return 1;
        }
    }
    std::cout << "minimal separators (display graph, " << rounds << " profiles): serial "
              << t_serial << " s, parallel " << t_parallel << " s\n";

    double o_serial = 0, o_parallel = 0;
    for (const Profile& p : profiles) {
        auto start = clock_type::now();
        auto serial = brute_force_compatible_serial(p);
        o_serial += seconds_since(start);
        start = clock_type::now();
        auto parallel = brute_force_compatible(p);
        o_parallel += seconds_since(start);
        if (serial.compatible != parallel.compatible) {
            std::cerr << "oracle variants disagree\n";
            return 1;
        }
    }
    std::cout << "oracle compatibility (" << rounds << " profiles): serial " << o_serial
              << " s, parallel " << o_parallel << " s\n";
    return 0;
}
