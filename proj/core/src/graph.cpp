#include "matchfree/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

namespace matchfree {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : n_(n), verts_(VertexSet::range(n)), labels_(std::move(labels)) {
    if (n < 0 || n > 64) throw std::out_of_range("vertex count must be in [0, 64]");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        check_vertex(u, n);
        check_vertex(v, n);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        edges_.push_back(make_edge(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw std::invalid_argument("repeated edge");
    build_adj();
}

Graph Graph::on_subset(int n, VertexSet verts, const std::vector<Edge>& edges) {
    Graph g(n, edges);
    for (auto [u, v] : g.edges_)
        if (!verts.contains(u) || !verts.contains(v))
            throw std::invalid_argument("edge endpoint outside vertex subset");
    g.verts_ = verts;
    return g;
}

void Graph::build_adj() {
    adj_.assign(n_, VertexSet{});
    for (auto [u, v] : edges_) {
        adj_[u].add(v);
        adj_[v].add(u);
    }
}

VertexSet Graph::neighborhood(VertexSet s) const {
    VertexSet out;
    for (int v : elements(s & verts_)) out |= adj_[v];
    return out & verts_;
}

VertexSet Graph::closed_neighborhood(VertexSet s) const { return (neighborhood(s) | s) & verts_; }

Graph Graph::restrict_to(VertexSet keep) const {
    keep &= verts_;
    Graph g;
    g.n_ = n_;
    g.verts_ = keep;
    g.labels_ = labels_;
    for (auto e : edges_)
        if (keep.contains(e.first) && keep.contains(e.second)) g.edges_.push_back(e);
    g.build_adj();
    return g;
}

std::vector<Edge> Graph::edges_within(VertexSet s) const {
    std::vector<Edge> out;
    for (auto e : edges_)
        if (s.contains(e.first) && s.contains(e.second)) out.push_back(e);
    return out;
}

bool Graph::is_connected() const {
    if (verts_.empty()) return true;
    VertexSet seen = VertexSet::single(verts_.lowest());
    while (true) {
        VertexSet next = seen;
        for (int v : elements(seen)) next |= adj_[v] & verts_;
        if (next == seen) break;
        seen = next;
    }
    return seen == verts_;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(n_, -1);
    for (int s : elements(verts_)) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : elements(adj_[u] & verts_)) {
                if (color[w] == -1) {
                    color[w] = color[u] ^ 1;
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool Graph::is_simplicial_vertex(int v) const {
    VertexSet nb = adj_[v] & verts_;
    for (int a : elements(nb))
        if (!nb.subset_of(adj_[a] | VertexSet::single(a))) return false;
    return true;
}

Graph Graph::complement() const {
    std::vector<Edge> comp;
    auto vs = verts_.to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!has_edge(vs[i], vs[j])) comp.push_back({vs[i], vs[j]});
    return Graph::on_subset(n_, verts_, comp);
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (auto [u, v] : edges_) {
        if (support_.contains(u) || support_.contains(v))
            throw std::invalid_argument("edges of a matching must be pairwise disjoint");
        support_.add(u);
        support_.add(v);
    }
}

bool Matching::contains_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

WhiskerGraph::WhiskerGraph(Graph base, Graph graph) : base_(std::move(base)), graph_(std::move(graph)) {
    if (graph_.n() != 2 * base_.n()) throw std::invalid_argument("whisker graph must have 2n vertices");
    for (int v : elements(base_.verts())) {
        if (!graph_.verts().contains(v) || !graph_.verts().contains(base_.n() + v))
            throw std::invalid_argument("whisker pair missing from graph");
        if (graph_.degree(base_.n() + v) != 1)
            throw std::invalid_argument("whisker vertex must have degree 1");
    }
}

WhiskerGraph WhiskerGraph::remove_pair(int base_vertex) const {
    VertexSet gone = VertexSet::of({base_vertex, whisker_of(base_vertex)});
    return WhiskerGraph(base_.restrict_to(base_.verts() - VertexSet::single(base_vertex)),
                        graph_.restrict_to(graph_.verts() - gone));
}

WhiskerGraph whisker(const Graph& h) {
    int n = h.n();
    if (2 * n > 64) throw std::out_of_range("whisker graph would exceed 64 vertices");
    std::vector<Edge> edges = h.edges();
    for (int i : elements(h.verts())) edges.push_back({i, n + i});
    VertexSet wverts = h.verts();
    for (int i : elements(h.verts())) wverts.add(n + i);
    return WhiskerGraph(h, Graph::on_subset(2 * n, wverts, edges));
}

Graph add_whiskers_at(const Graph& h, const std::vector<int>& s, int t) {
    int n = h.n();
    int total = n + t * static_cast<int>(s.size());
    if (total > 64) throw std::out_of_range("too many whiskers");
    std::vector<Edge> edges = h.edges();
    int next = n;
    for (int v : s) {
        check_vertex(v, n);
        for (int j = 0; j < t; ++j) edges.push_back({v, next++});
    }
    return Graph(total, edges);
}

namespace {

// Shortest cycle through BFS roots; every non-tree edge closes a walk of
// length dist[x]+dist[y]+1 that contains a cycle no longer than itself, and
// a root on a shortest cycle attains the girth exactly.
ExtendedInt shortest_cycle(const Graph& g) {
    int best = -1;
    std::vector<int> dist(g.n()), parent(g.n());
    for (int root : elements(g.verts())) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : elements(g.adj(u) & g.verts())) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                }
            }
        }
        for (auto [u, v] : g.edges()) {
            if (dist[u] == -1 || dist[v] == -1) continue;
            if (parent[u] == v || parent[v] == u) continue;
            int len = dist[u] + dist[v] + 1;
            if (best == -1 || len < best) best = len;
        }
    }
    return best == -1 ? ExtendedInt::infinity() : ExtendedInt(best);
}

}  // namespace

ExtendedInt girth(const Graph& g) { return shortest_cycle(g); }

ExtendedInt odd_girth(const Graph& g) {
    if (g.is_bipartite()) return ExtendedInt::infinity();
    // BFS on the bipartite double cover: dist from (v,0) to (v,1) is the
    // shortest odd closed walk through v, and closed odd walks contain odd
    // cycles of at most their length.
    int best = -1;
    std::vector<std::array<int, 2>> dist(g.n());
    for (int root : elements(g.verts())) {
        for (auto& d : dist) d = {-1, -1};
        dist[root][0] = 0;
        std::queue<std::pair<int, int>> q;
        q.push({root, 0});
        while (!q.empty()) {
            auto [u, p] = q.front();
            q.pop();
            for (int w : elements(g.adj(u) & g.verts())) {
                if (dist[w][p ^ 1] == -1) {
                    dist[w][p ^ 1] = dist[u][p] + 1;
                    q.push({w, p ^ 1});
                }
            }
        }
        if (dist[root][1] != -1 && (best == -1 || dist[root][1] < best)) best = dist[root][1];
    }
    return best == -1 ? ExtendedInt::infinity() : ExtendedInt(best);
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.n = g.num_verts();
    s.girth = girth(g);
    s.odd_girth = odd_girth(g);
    s.matching_number = matching_number(g);
    return s;
}

bool is_unicyclic(const Graph& g) {
    return g.is_connected() && static_cast<int>(g.edges().size()) == g.num_verts();
}

std::vector<Matching> enumerate_matchings(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("matching size must be nonnegative");
    std::vector<Matching> out;
    std::vector<Edge> current;
    const auto& edges = g.edges();
    // Edges are chosen with increasing index, so the emitted order is
    // lexicographic on sorted edge lists.
    std::function<void(size_t, VertexSet)> rec = [&](size_t start, VertexSet used) {
        if (static_cast<int>(current.size()) == k) {
            out.emplace_back(current);
            return;
        }
        for (size_t i = start; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (used.contains(u) || used.contains(v)) continue;
            current.push_back(edges[i]);
            rec(i + 1, used | VertexSet::of({u, v}));
            current.pop_back();
        }
    };
    rec(0, VertexSet{});
    return out;
}

std::vector<std::uint8_t> matching_number_table(const Graph& g) {
    if (g.n() > 24) throw std::out_of_range("matching number table capped at 24 vertices");
    std::vector<std::uint8_t> nu(std::size_t{1} << g.n(), 0);
    for (std::uint64_t mask = 1; mask < nu.size(); ++mask) {
        VertexSet f{mask};
        if (!f.subset_of(g.verts())) continue;
        int v = f.lowest();
        std::uint64_t rest = mask & (mask - 1);
        std::uint8_t best = nu[rest];  // v unmatched
        for (int u : elements(g.adj(v) & VertexSet{rest}))
            best = std::max<std::uint8_t>(best, 1 + nu[rest & ~(std::uint64_t{1} << u)]);
        nu[mask] = best;
    }
    return nu;
}

int matching_number(const Graph& g) {
    // Branch on the lowest active vertex; memoless DFS is plenty at <= 24.
    std::function<int(VertexSet)> rec = [&](VertexSet f) -> int {
        if (f.empty()) return 0;
        int v = f.lowest();
        VertexSet rest = f - VertexSet::single(v);
        int best = rec(rest);
        for (int u : elements(g.adj(v) & rest))
            best = std::max(best, 1 + rec(rest - VertexSet::single(u)));
        return best;
    };
    if (g.num_verts() <= 24) return rec(g.verts());
    throw std::out_of_range("matching number capped at 24 vertices");
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.subset_of(VertexSet::range(g.n())))
        throw std::out_of_range("subset contains out-of-range vertex");
    s &= g.verts();
    std::vector<int> map = s.to_vector();
    std::vector<int> inv(g.n(), -1);
    for (size_t i = 0; i < map.size(); ++i) inv[map[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v)) edges.push_back(make_edge(inv[u], inv[v]));
    return {Graph(static_cast<int>(map.size()), edges), map};
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, e);
}

Graph make_complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph(a + b, e);
}

Graph make_star(int n) {
    if (n < 1) throw std::invalid_argument("star needs at least one vertex");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return Graph(n, e);
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw std::out_of_range("connected-graph enumeration supports 1 <= n <= 7");
    std::vector<Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (size_t b = 0; b < slots.size(); ++b)
            if ((mask >> b) & 1) edges.push_back(slots[b]);
        Graph g(n, edges);
        if (g.is_connected()) fn(g);
    }
}

std::vector<Graph> all_connected_graphs(int n) {
    if (n > 6)
        throw std::out_of_range("materializing all connected graphs is capped at n = 6; "
                                "use for_each_connected_graph for n = 7");
    std::vector<Graph> out;
    for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> generate_family(Family family, const std::vector<int>& params) {
    auto need = [&](size_t k) {
        if (params.size() != k) throw std::invalid_argument("wrong number of family parameters");
    };
    switch (family) {
        case Family::Path: need(1); return {make_path(params[0])};
        case Family::Cycle: need(1); return {make_cycle(params[0])};
        case Family::Complete: need(1); return {make_complete(params[0])};
        case Family::CompleteBipartite: need(2); return {make_complete_bipartite(params[0], params[1])};
        case Family::Star: need(1); return {make_star(params[0])};
        case Family::AllConnected: need(1); return all_connected_graphs(params[0]);
    }
    throw std::invalid_argument("unsupported family");
}

}  // namespace matchfree
