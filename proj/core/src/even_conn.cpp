#include "matchfree/even_conn.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "matchfree/ideal.hpp"

namespace matchfree {

bool validate_witness(const Graph& g, const Matching& m, const EvenConnectionWitness& w) {
    const auto& p = w.walk;
    if (p.size() < 4 || p.size() % 2 != 0) return false;  // length 2r+2 with r >= 1
    for (size_t k = 0; k + 1 < p.size(); ++k)
        if (!g.has_edge(p[k], p[k + 1])) return false;
    std::vector<Edge> used;
    for (size_t k = 1; k + 1 < p.size(); k += 2) {
        Edge e = make_edge(p[k], p[k + 1]);
        if (!m.contains_edge(e)) return false;
        used.push_back(e);
    }
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end()) return false;  // each e_i once
    return used.size() == w.used_edges.size();
}

std::optional<EvenConnectionWitness> even_connected(const Graph& g, const Matching& m, int u, int v) {
    if (u == v) throw std::invalid_argument("even-connection endpoints must differ");
    if (m.support().contains(u) || m.support().contains(v))
        throw std::invalid_argument("endpoints must avoid the matching support");

    const auto& edges = m.edges();
    int q = m.size();
    // State (w, used) = reachable even position; step = graph edge into an
    // endpoint of an unused matching edge, then that edge.
    struct Prev {
        int vertex = -1;
        unsigned used = 0;
        int via = -1;      // odd-position vertex
        int edge_idx = -1;
    };
    std::map<std::pair<int, unsigned>, Prev> prev;
    std::queue<std::pair<int, unsigned>> bfs;
    bfs.push({u, 0});
    prev[{u, 0}] = Prev{};

    auto build = [&](int w, unsigned used) {
        EvenConnectionWitness out;
        std::vector<int> rev{v};
        int cw = w;
        unsigned cu = used;
        while (!(cw == u && cu == 0)) {
            Prev p = prev[{cw, cu}];
            rev.push_back(cw);
            rev.push_back(p.via);
            out.used_edges.push_back(edges[p.edge_idx]);
            cw = p.vertex;
            cu = p.used;
        }
        rev.push_back(u);
        std::reverse(rev.begin(), rev.end());
        std::reverse(out.used_edges.begin(), out.used_edges.end());
        out.walk = std::move(rev);
        return out;
    };

    while (!bfs.empty()) {
        auto [w, used] = bfs.front();
        bfs.pop();
        if (used != 0 && g.has_edge(w, v)) return build(w, used);
        for (int j = 0; j < q; ++j) {
            if (used & (1u << j)) continue;
            auto [a, b] = edges[j];
            for (auto [in, out] : {std::pair{a, b}, std::pair{b, a}}) {
                if (!g.has_edge(w, in)) continue;
                std::pair<int, unsigned> key{out, used | (1u << j)};
                if (prev.count(key)) continue;
                prev[key] = Prev{w, used, in, j};
                bfs.push(key);
            }
        }
    }
    return std::nullopt;
}

Graph even_conn_graph(const Graph& g, const Matching& m) {
    for (auto [u, v] : m.edges())
        if (!g.has_edge(u, v)) throw std::invalid_argument("matching edge not in the graph");
    VertexSet keep = g.verts() - m.support();
    std::vector<Edge> edges = g.edges_within(keep);
    auto vs = keep.to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            if (g.has_edge(vs[i], vs[j])) continue;
            if (even_connected(g, m, vs[i], vs[j])) edges.push_back({vs[i], vs[j]});
        }
    return Graph::on_subset(g.n(), keep, edges);
}

Graph b_graph(const WhiskerGraph& w, const Matching& m) {
    VertexSet y;
    for (auto e : m.edges()) {
        if (w.is_whisker_edge(e)) throw std::invalid_argument("b_graph needs base edges only");
        y.add(w.whisker_of(e.first));
        y.add(w.whisker_of(e.second));
    }
    return even_conn_graph(w.graph(), m).restrict_to(y);
}

MatchingOrderKey matching_order_key(const WhiskerGraph& w, const Matching& m) {
    int whiskers = 0;
    for (auto e : m.edges())
        if (w.is_whisker_edge(e)) ++whiskers;
    return {whiskers, m.edges()};
}

MatchingOrder MatchingOrder::build(const WhiskerGraph& w, int x1, int size, const Policy& within_family) {
    Graph rest = w.graph().restrict_to(w.graph().verts() - VertexSet::single(x1));
    std::vector<Matching> all = enumerate_matchings(rest, size);
    auto whiskers = [&](const Matching& m) { return matching_order_key(w, m).first; };
    std::stable_sort(all.begin(), all.end(),
                     [&](const Matching& a, const Matching& b) { return whiskers(a) < whiskers(b); });
    if (within_family) {
        std::vector<Matching> reordered;
        size_t i = 0;
        while (i < all.size()) {
            size_t j = i;
            while (j < all.size() && whiskers(all[j]) == whiskers(all[i])) ++j;
            std::vector<Matching> family(all.begin() + i, all.begin() + j);
            within_family(family);
            if (family.size() != j - i) throw std::invalid_argument("order policy changed a family size");
            for (auto& m : family) {
                if (whiskers(m) != whiskers(all[i]))
                    throw std::invalid_argument("order policy moved a matching across families");
                reordered.push_back(std::move(m));
            }
            i = j;
        }
        all = std::move(reordered);
    }
    MatchingOrder order;
    order.ordered_ = std::move(all);
    return order;
}

int MatchingOrder::position(const Matching& m) const {
    for (size_t i = 0; i < ordered_.size(); ++i)
        if (ordered_[i] == m) return static_cast<int>(i);
    throw std::invalid_argument("matching not in the order");
}

SwapSet swap_set(const WhiskerGraph& w, int x1, const Matching& m, const MatchingOrder& order) {
    const Graph& g = w.graph();
    VertexSet candidates = g.verts() - VertexSet::single(x1) - m.support();
    SwapSet out;
    out.matching = m;
    int pos = order.position(m);
    for (int z : elements(candidates)) {
        for (auto e : m.edges()) {
            for (int y : {e.first, e.second}) {
                if (y == x1 || !g.has_edge(y, z)) continue;
                std::vector<Edge> swapped;
                for (auto f : m.edges())
                    if (f != e) swapped.push_back(f);
                swapped.push_back(make_edge(y, z));
                Matching result(swapped);
                if (order.position(result) < pos) {
                    if (!out.vertices.contains(z)) {
                        out.vertices.add(z);
                        out.witnesses.push_back({z, y, e, result});
                    }
                }
            }
        }
    }
    return out;
}

bool colon_oracle_verify(const Graph& g, const Matching& m) {
    if (m.size() < 1) throw std::invalid_argument("colon oracle needs a nonempty matching");
    MonomialIdeal power = sf_power(g, m.size() + 1);
    MonomialIdeal colon = colon_by_monomial(power, m.support());
    for (VertexSet gen : colon.generators())
        if (gen.size() != 2) return false;
    return colon == edge_ideal(even_conn_graph(g, m));
}

}  // namespace matchfree
