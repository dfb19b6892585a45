#ifndef MATCHFREE_HOMOLOGY_HPP
#define MATCHFREE_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "matchfree/simplicial.hpp"

namespace matchfree {

enum class Field { GF2, Rationals };

inline std::string field_name(Field f) { return f == Field::GF2 ? "gf2" : "rationals"; }

/// Ranks of reduced homology, indices -1 .. dim.
struct BettiVector {
    int top_dim = -1;                // dimension of the complex
    std::vector<long> ranks;         // ranks[i + 1] = rank of H~_i

    long rank(int i) const {
        if (i < -1 || i > top_dim) return 0;
        return ranks[static_cast<size_t>(i + 1)];
    }
    bool vanishes_below(int d) const {
        for (int i = -1; i < d; ++i)
            if (rank(i) != 0) return false;
        return true;
    }
};

/// Reduced simplicial homology ranks over the field.  The complex is first
/// simplified by elementary collapses (homotopy-preserving), then boundary
/// ranks are computed: bit-parallel elimination for GF2, and for the
/// rationals exact fraction-free elimination wherever the mod-2 ranks do
/// not already pin the rational ranks through rank(d) + rank(d+1) <= n_d.
BettiVector reduced_betti(const SimplicialComplex& d, Field field);

/// Reisner criterion: reduced homology of every face link vanishes below
/// the link dimension.  Links are deduplicated by a relabeling-normalized
/// facet key, so repeated links across whisker symmetry are computed once.
bool is_cohen_macaulay(const SimplicialComplex& d, Field field);

/// Every pure d-skeleton is Cohen-Macaulay.
bool is_sequentially_cm(const SimplicialComplex& d, Field field);

/// depth(R/I_Δ) = max{ i : Δ^(i) is Cohen-Macaulay } + 1.
int depth(const SimplicialComplex& d, Field field);

int min_facet_size(const SimplicialComplex& d);

/// Drops memoized Cohen-Macaulay verdicts (used by tests and benchmarks).
void clear_homology_cache();

}  // namespace matchfree

#endif
