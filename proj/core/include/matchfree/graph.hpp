#ifndef MATCHFREE_GRAPH_HPP
#define MATCHFREE_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "matchfree/extended_int.hpp"
#include "matchfree/vertex_set.hpp"

namespace matchfree {

using Edge = std::pair<int, int>;  // normalized u < v

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on indexed vertices.  `verts` is the set of
/// vertices actually present; constructions like even-connection graphs
/// live on a sub-universe of a larger graph and keep the original indices,
/// so deleting vertices shrinks `verts` without reindexing.
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    /// Graph on a restricted vertex set, same universe and indices.
    static Graph on_subset(int n, VertexSet verts, const std::vector<Edge>& edges);

    int n() const { return n_; }
    VertexSet verts() const { return verts_; }
    int num_verts() const { return verts_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet adj(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    VertexSet neighborhood(VertexSet s) const;          // open N(S)
    VertexSet closed_neighborhood(VertexSet s) const;   // N[S]
    int degree(int v) const { return adj_[v].size(); }

    /// Spanning subgraph on the vertices of `keep` (indices retained).
    Graph restrict_to(VertexSet keep) const;
    /// Edges with both endpoints inside `s` (s need not be all of verts()).
    std::vector<Edge> edges_within(VertexSet s) const;

    bool is_connected() const;
    bool is_bipartite() const;
    bool is_simplicial_vertex(int v) const;
    Graph complement() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && verts_ == o.verts_ && edges_ == o.edges_;
    }

  private:
    int n_ = 0;
    VertexSet verts_;
    std::vector<Edge> edges_;        // sorted, normalized
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
    void build_adj();
};

/// A set of pairwise disjoint edges.
class Matching {
  public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);  // throws if edges overlap

    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet support() const { return support_; }
    int size() const { return static_cast<int>(edges_.size()); }
    bool contains_edge(const Edge& e) const;

    bool operator==(const Matching& o) const { return edges_ == o.edges_; }

  private:
    std::vector<Edge> edges_;  // sorted
    VertexSet support_;
};

/// W(H): the base graph H on vertices 0..n-1 plus a pendant (whisker)
/// vertex n+i attached to each base vertex i.  After deleting whisker
/// pairs the active sets shrink but the pairing i <-> n+i is unchanged.
class WhiskerGraph {
  public:
    WhiskerGraph() = default;
    WhiskerGraph(Graph base, Graph graph);

    const Graph& base() const { return base_; }
    const Graph& graph() const { return graph_; }
    int base_n() const { return base_.n(); }
    int whisker_of(int base_vertex) const { return base_.n() + base_vertex; }
    int base_of(int whisker_vertex) const { return whisker_vertex - base_.n(); }
    bool is_base_vertex(int v) const { return v < base_.n() && base_.verts().contains(v); }
    bool is_whisker_vertex(int v) const { return v >= base_.n() && graph_.verts().contains(v); }
    bool is_whisker_edge(const Edge& e) const {
        return e.second >= base_.n() && e.first == base_of(e.second);
    }
    /// Active base vertex count (= nu(W(H))).
    int num_base_verts() const { return base_.verts().size(); }

    /// Deletes the whisker pair {x_i, y_i}; result is W(H \ x_i) with the
    /// original indices retained.
    WhiskerGraph remove_pair(int base_vertex) const;

  private:
    Graph base_;
    Graph graph_;
};

/// n, girth m, odd girth ell, matching number nu of a base graph.
struct GraphStats {
    int n = 0;
    ExtendedInt girth = ExtendedInt::infinity();
    ExtendedInt odd_girth = ExtendedInt::infinity();
    int matching_number = 0;
};

WhiskerGraph whisker(const Graph& h);

/// H plus t pendant vertices attached to every vertex of S (the partial
/// whiskering used for the complete-bipartite-link counterexample).  New
/// vertices are appended after H's range, grouped per base vertex.
Graph add_whiskers_at(const Graph& h, const std::vector<int>& s, int t);

ExtendedInt girth(const Graph& g);
ExtendedInt odd_girth(const Graph& g);
GraphStats graph_stats(const Graph& g);
bool is_unicyclic(const Graph& g);

/// All matchings of size exactly k, lexicographic on sorted edge lists.
std::vector<Matching> enumerate_matchings(const Graph& g, int k);
int matching_number(const Graph& g);

/// nu(G[mask]) for every mask subset of g.verts(), as a flat table indexed
/// by mask bits.  Backbone of the matching-free complex construction.
std::vector<std::uint8_t> matching_number_table(const Graph& g);

/// Induced subgraph on s, reindexed 0..|s|-1; second value maps new
/// index -> original vertex.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, VertexSet s);

enum class Family { Path, Cycle, Complete, CompleteBipartite, Star, AllConnected };

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_star(int n);

/// All connected graphs on n labeled vertices (n <= 6; use
/// for_each_connected_graph for n = 7, which is too large to materialize).
std::vector<Graph> all_connected_graphs(int n);
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

/// Family dispatch: path:n, cycle:n, complete:n, kbip:a,b, star:n,
/// all_connected:n and tree:<edge list> are parsed by the CLI layer.
std::vector<Graph> generate_family(Family family, const std::vector<int>& params);

}  // namespace matchfree

#endif
