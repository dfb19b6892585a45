#ifndef MATCHFREE_TESTS_CORPUS_HPP
#define MATCHFREE_TESTS_CORPUS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "matchfree/graph.hpp"

namespace matchfree::test {

/// All connected base graphs with n vertices, labeled.
inline std::vector<Graph> connected_graphs(int n) { return all_connected_graphs(n); }

inline std::vector<Graph> connected_graphs_up_to(int n_max) {
    std::vector<Graph> out;
    for (int n = 1; n <= n_max; ++n)
        for (auto& g : all_connected_graphs(n)) out.push_back(std::move(g));
    return out;
}

/// All labeled trees on n vertices.
inline std::vector<Graph> labeled_trees(int n) {
    std::vector<Graph> out;
    for_each_connected_graph(n, [&](const Graph& g) {
        if (static_cast<int>(g.edges().size()) == n - 1) out.push_back(g);
    });
    return out;
}

/// Brute-force graph isomorphism for small n.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edges().size() != b.edges().size()) return false;
    std::vector<int> perm(static_cast<size_t>(a.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!b.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace matchfree::test

#endif
