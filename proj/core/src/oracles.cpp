#include "matchfree/oracles.hpp"

#include <algorithm>

namespace matchfree {
namespace oracle {

bool has_k_disjoint_edges(const Graph& g, VertexSet f, int k) {
    if (k == 0) return true;
    auto edges = g.edges_within(f);
    std::function<bool(size_t, VertexSet, int)> rec = [&](size_t i, VertexSet used, int left) {
        if (left == 0) return true;
        for (size_t j = i; j < edges.size(); ++j) {
            auto [u, v] = edges[j];
            if (used.contains(u) || used.contains(v)) continue;
            if (rec(j + 1, used | VertexSet::of({u, v}), left - 1)) return true;
        }
        return false;
    };
    return rec(0, VertexSet{}, k);
}

std::vector<VertexSet> mf_facets(const Graph& g, int q) {
    std::vector<VertexSet> faces;
    for_each_subset(g.verts(), [&](VertexSet f) {
        if (!has_k_disjoint_edges(g, f, q)) faces.push_back(f);
    });
    std::vector<VertexSet> facets;
    for (VertexSet f : faces) {
        bool maximal = true;
        for (VertexSet other : faces)
            if (f != other && f.subset_of(other)) { maximal = false; break; }
        if (maximal) facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end(), size_lex_less);
    return facets;
}

std::vector<std::vector<Edge>> matchings_by_subset_filter(const Graph& g, int k) {
    const auto& edges = g.edges();
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> pick;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (static_cast<int>(pick.size()) == k) {
            VertexSet used;
            bool disjoint = true;
            for (auto [u, v] : pick) {
                if (used.contains(u) || used.contains(v)) disjoint = false;
                used.add(u);
                used.add(v);
            }
            if (disjoint) out.push_back(pick);
            return;
        }
        if (i >= edges.size()) return;
        for (size_t j = i; j < edges.size(); ++j) {
            pick.push_back(edges[j]);
            rec(j + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

ExtendedInt girth_by_cycle_enumeration(const Graph& g, bool odd_only) {
    int best = -1;
    std::vector<int> path;
    VertexSet on_path;
    // Simple cycles rooted at their smallest vertex, extended by larger ones.
    std::function<void(int, int)> extend = [&](int root, int v) {
        for (int w : elements(g.adj(v) & g.verts())) {
            if (w == root && path.size() >= 3) {
                int len = static_cast<int>(path.size());
                if (!odd_only || len % 2 == 1)
                    if (best == -1 || len < best) best = len;
            }
            if (w <= root || on_path.contains(w)) continue;
            path.push_back(w);
            on_path.add(w);
            extend(root, w);
            path.pop_back();
            on_path.remove(w);
        }
    };
    for (int root : elements(g.verts())) {
        path = {root};
        on_path = VertexSet::single(root);
        extend(root, root);
    }
    return best == -1 ? ExtendedInt::infinity() : ExtendedInt(best);
}

bool even_connected_by_walks(const Graph& g, const Matching& m, int u, int v) {
    // Enumerate every graph walk p_0..p_L with L odd, 3 <= L <= 2|m|+1,
    // then test the definition: odd-position steps are matching edges,
    // each used at most once.
    int max_len = 2 * m.size() + 1;
    std::vector<int> walk{u};
    bool found = false;
    std::function<void()> extend = [&]() {
        if (found) return;
        int last = walk.back();
        int len = static_cast<int>(walk.size()) - 1;
        if (last == v && len >= 3 && len % 2 == 1) {
            std::vector<Edge> used;
            bool ok = true;
            for (size_t k = 1; k + 1 < walk.size(); k += 2) {
                Edge e = make_edge(walk[k], walk[k + 1]);
                if (!m.contains_edge(e)) { ok = false; break; }
                used.push_back(e);
            }
            if (ok) {
                std::sort(used.begin(), used.end());
                if (std::adjacent_find(used.begin(), used.end()) == used.end()) {
                    found = true;
                    return;
                }
            }
        }
        if (len >= max_len) return;
        for (int w : elements(g.adj(last) & g.verts())) {
            walk.push_back(w);
            extend();
            walk.pop_back();
            if (found) return;
        }
    };
    extend();
    return found;
}

std::vector<VertexSet> colon_generators_by_membership(const Graph& g, const Matching& m) {
    MonomialIdeal power = sf_power(g, m.size() + 1);
    VertexSet u = m.support();
    std::vector<VertexSet> members;
    for_each_subset(g.verts(), [&](VertexSet cand) {
        if (power.contains_monomial(cand | u)) members.push_back(cand);
    });
    std::vector<VertexSet> minimal;
    for (VertexSet c : members) {
        bool is_min = true;
        for (int x : elements(c)) {
            VertexSet smaller = c - VertexSet::single(x);
            if (power.contains_monomial(smaller | u)) { is_min = false; break; }
        }
        if (is_min) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), size_lex_less);
    return minimal;
}

}  // namespace oracle
}  // namespace matchfree
