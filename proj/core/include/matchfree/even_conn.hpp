#ifndef MATCHFREE_EVEN_CONN_HPP
#define MATCHFREE_EVEN_CONN_HPP

#include <functional>
#include <optional>
#include <vector>

#include "matchfree/graph.hpp"

namespace matchfree {

/// Witness walk p_0..p_{2r+1} for an even-connection: consecutive pairs are
/// edges of G and every {p_{2k+1}, p_{2k+2}} is a matching edge, each used
/// at most once.
struct EvenConnectionWitness {
    std::vector<int> walk;
    std::vector<Edge> used_edges;
};

/// Checks a witness against the definition.
bool validate_witness(const Graph& g, const Matching& m, const EvenConnectionWitness& w);

/// Shortest even-connection between u and v with respect to m, if any.
/// u, v must lie outside Supp(m).
std::optional<EvenConnectionWitness> even_connected(const Graph& g, const Matching& m, int u, int v);

/// G^{e_1...e_q}: vertex set V(G) \ Supp(m), adjacency = original edge or
/// even-connection.
Graph even_conn_graph(const Graph& g, const Matching& m);

/// B_G(e_1,...,e_q): induced subgraph of the even-connection graph on the
/// whisker partners of the matched base vertices.  m must consist of base
/// edges only.
Graph b_graph(const WhiskerGraph& w, const Matching& m);

/// Primary = number of whisker edges, secondary = the sorted edge list.
using MatchingOrderKey = std::pair<int, std::vector<Edge>>;
MatchingOrderKey matching_order_key(const WhiskerGraph& w, const Matching& m);

/// Total order on the (q-1)-matchings of G \ {x1}: families with fewer
/// whisker edges come first; the within-family order defaults to
/// lexicographic but can be replaced (it is mathematically arbitrary).
class MatchingOrder {
  public:
    /// Reorders matchings within a family of equal whisker count; must not
    /// mix families.
    using Policy = std::function<void(std::vector<Matching>&)>;

    static MatchingOrder build(const WhiskerGraph& w, int x1, int size, const Policy& within_family = {});

    const std::vector<Matching>& ordered() const { return ordered_; }
    int position(const Matching& m) const;
    bool less(const Matching& a, const Matching& b) const { return position(a) < position(b); }

  private:
    std::vector<Matching> ordered_;
};

/// Vertices admitting a single edge-swap of m to a strictly earlier
/// matching, with the witnessing swaps.
struct SwapSet {
    Matching matching;
    VertexSet vertices;
    struct Swap {
        int z;
        int y;        // endpoint kept from the replaced edge
        Edge removed;
        Matching result;
    };
    std::vector<Swap> witnesses;
};

SwapSet swap_set(const WhiskerGraph& w, int x1, const Matching& m, const MatchingOrder& order);

/// Brute-force check of the colon description: (I(G)^[q+1] : supp(m)) has
/// all generators of degree 2 and equals I(G^{e_1...e_q}).
bool colon_oracle_verify(const Graph& g, const Matching& m);

}  // namespace matchfree

#endif
