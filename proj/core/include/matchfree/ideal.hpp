#ifndef MATCHFREE_IDEAL_HPP
#define MATCHFREE_IDEAL_HPP

#include <vector>

#include "matchfree/graph.hpp"
#include "matchfree/simplicial.hpp"

namespace matchfree {

/// Squarefree monomial ideal: generators are vertex subsets (supports),
/// kept as an inclusion-minimal antichain.  No generators = zero ideal.
class MonomialIdeal {
  public:
    MonomialIdeal() = default;
    MonomialIdeal(int variable_count, std::vector<VertexSet> generators);

    int variable_count() const { return nvars_; }
    const std::vector<VertexSet>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains_monomial(VertexSet support) const;  // membership for squarefree monomials

    bool operator==(const MonomialIdeal& o) const {
        return nvars_ == o.nvars_ && gens_ == o.gens_;
    }

  private:
    int nvars_ = 0;
    std::vector<VertexSet> gens_;  // minimal, sorted by size then lex
};

MonomialIdeal edge_ideal(const Graph& g);

/// (I : m) for a squarefree monomial m, by dividing each generator and
/// re-minimalizing.
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, VertexSet m);

/// MF^q(G): faces are the F with no q-matching inside G[F].  Full simplex
/// on the graph's vertices when q > nu(G).
SimplicialComplex mf_complex(const Graph& g, int q);

/// Independence complex, = MF^1.
SimplicialComplex independence_complex(const Graph& g);

/// I(G)^[q]: generated by the supports of the q-matchings of G.
MonomialIdeal sf_power(const Graph& g, int q);

/// Stanley-Reisner ideal: minimal non-faces as generators.
MonomialIdeal stanley_reisner(const SimplicialComplex& d);

/// Checks I_{MF^q(G)} = I(G)^[q] by computing both sides.
bool verify_sr_equality(const Graph& g, int q);

/// The {Y, N, S} partition of V(G) \ f attached to a face f with exactly
/// q-1 disjoint edges: Y holds the whisker partners of the endpoints of the
/// base edges of the matching, N the whisker pairs through N_G(f) ∩ V(H),
/// S the rest.  Overlaps resolve by the precedence f > Y > N.
struct PartitionYNS {
    VertexSet face;
    Matching matching;
    VertexSet y;
    VertexSet n;
    VertexSet s;
};

PartitionYNS partition_yns(const WhiskerGraph& w, VertexSet f, const Matching& m);

/// Extends a pairwise non-even-connected set S of whisker partners to one
/// of size m (the number of base edges of the matching).  Greedy endpoint
/// choice, lower-indexed whisker preferred, with exhaustive backtracking:
/// for some graphs a seed admits no completion at all (the triangle with a
/// pendant path, matching {x1x2, x3x4}, seed {y1} is the smallest case),
/// and then a runtime_error reports it.
VertexSet extend_whisker_set(const WhiskerGraph& w, const Matching& m, VertexSet s);

}  // namespace matchfree

#endif
