#ifndef MATCHFREE_SIMPLICIAL_HPP
#define MATCHFREE_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "matchfree/extended_int.hpp"
#include "matchfree/vertex_set.hpp"

namespace matchfree {

/// Simplicial complex on vertices 0..n-1 stored by its facet list.
/// The void complex (no faces at all) and the empty complex (single facet
/// {}) are distinct values; dimension returns -inf and -1 respectively.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Prunes non-maximal and duplicate sets; facets end up sorted by size
    /// then lexicographically.  Passing no sets gives the void complex.
    static SimplicialComplex from_facets(int n, std::vector<VertexSet> sets);
    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_complex(int n);        // {∅}
    static SimplicialComplex full_simplex(int n, VertexSet verts);

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    bool is_simplex() const { return facets_.size() == 1; }

    bool is_face(VertexSet f) const;
    ExtendedInt dimension() const;
    bool is_pure() const;
    int min_facet_size() const;  // throws on void

    /// Vertices that appear in some face.
    VertexSet support() const;

    /// All faces, grouped by |F| (index k holds the k-element faces, so
    /// faces_by_size()[0] = {∅}).  Throws if the complex is void.
    std::vector<std::vector<VertexSet>> faces_by_size() const;
    std::size_t face_count() const;

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && facets_ == o.facets_;
    }

  private:
    int n_ = 0;
    std::vector<VertexSet> facets_;
};

/// link_Δ(F) = {F' : F'∩F = ∅, F'∪F ∈ Δ}, on the same vertex range.
SimplicialComplex link(const SimplicialComplex& d, VertexSet f);

/// Δ∖F = {H ∈ Δ : H∩F = ∅}.
SimplicialComplex deletion(const SimplicialComplex& d, VertexSet f);

/// Faces not containing σ (the complement of the open star).  This is the
/// step that drives the shelling filtration.
SimplicialComplex remove_star(const SimplicialComplex& d, VertexSet sigma);

/// Join of complexes with disjoint supports on a shared vertex range.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex skeleton(const SimplicialComplex& d, int i);
SimplicialComplex pure_skeleton(const SimplicialComplex& d, int dim);

/// Inclusion-minimal non-faces of d (the Stanley-Reisner generators).
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& d);

/// Δ^∨ = {V∖F : F ∉ Δ}; undefined for the void complex and the full simplex.
SimplicialComplex alexander_dual(const SimplicialComplex& d);

/// ⟨V∖F : F facet of Δ⟩.
SimplicialComplex complement_complex(const SimplicialComplex& d);

/// Hashable identity key: vertex count followed by the sorted facet masks.
std::vector<std::uint64_t> complex_key(const SimplicialComplex& d);

/// Isomorphism-normalized copy: vertices relabeled by an iterated
/// degree-refinement signature so that relabelings of the same complex
/// usually map to the same facet list.  Used only as a memo key.
SimplicialComplex canonical_relabel(const SimplicialComplex& d);

}  // namespace matchfree

#endif
