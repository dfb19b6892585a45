#ifndef MATCHFREE_ORACLES_HPP
#define MATCHFREE_ORACLES_HPP

#include <optional>
#include <vector>

#include "matchfree/graph.hpp"
#include "matchfree/ideal.hpp"
#include "matchfree/simplicial.hpp"

namespace matchfree {
/// Independent brute-force routes, deliberately written from the raw
/// definitions rather than through the structured implementations they
/// cross-check.
namespace oracle {

/// Does G[f] contain k pairwise disjoint edges?  Plain branching over the
/// edge list.
bool has_k_disjoint_edges(const Graph& g, VertexSet f, int k);

/// Facets of MF^q(G) by filtering all subsets and discarding non-maximal
/// ones pairwise.
std::vector<VertexSet> mf_facets(const Graph& g, int q);

/// All k-subsets of E(G) that are pairwise disjoint.
std::vector<std::vector<Edge>> matchings_by_subset_filter(const Graph& g, int k);

/// Shortest (odd) cycle by enumerating all simple cycles.
ExtendedInt girth_by_cycle_enumeration(const Graph& g, bool odd_only);

/// Even-connection test by enumerating all graph walks of length at most
/// 2|m|+1 and checking the definition on each.
bool even_connected_by_walks(const Graph& g, const Matching& m, int u, int v);

/// Minimal generators of (I(G)^[q+1] : supp(m)) by sweeping all squarefree
/// monomials for membership  m' ∈ (I:u) <=> some generator divides m'·u.
std::vector<VertexSet> colon_generators_by_membership(const Graph& g, const Matching& m);

}  // namespace oracle
}  // namespace matchfree

#endif
