#ifndef MATCHFREE_THEOREMS_HPP
#define MATCHFREE_THEOREMS_HPP

#include <optional>
#include <string>

#include "matchfree/extended_int.hpp"
#include "matchfree/graph.hpp"

namespace matchfree {

/// Classification of MF^q(W(H)) as far as the closed forms go.  Ranges
/// that are only known to be pure map to PureUnknownCm and never assert
/// Cohen-Macaulayness either way.
enum class CmClass { CM, SeqCmNotPure, PureUnknownCm, NotPure, FullSimplex };

std::string cm_class_name(CmClass c);

/// Purity of MF^q(W(H)): always pure for bipartite H, otherwise pure
/// exactly when q < ceil(ell/2) or q > n - floor(ell/2) with ell the odd
/// girth.
bool expected_pure(const Graph& h, int q);

/// Largest q with a guaranteed shelling: ceil(m/2) for finite girth m,
/// otherwise nu(W(H)) = n.
ExtendedInt expected_shellable_upper(const Graph& h);

CmClass expected_cm_class(const Graph& h, int q);

/// depth(R/I^[q]) where the closed form applies: n+q-1 for q <= floor(m/2)
/// or acyclic H, n when m is odd and q = ceil(m/2); absent elsewhere.
std::optional<int> expected_depth(const Graph& h, int q);

/// Upper bound n+q-1-floor(m/2) for connected unicyclic H with odd girth,
/// on ceil(m/2) <= q <= n - floor(m/2); absent outside that range.
std::optional<int> uni_depth_upper_bound(const Graph& h, int q);

/// Whisker-cycle depth record: the conjectured value (n+q-1 below the
/// midpoint, else 2q-1), whether that value is proved, and optionally the
/// exactly computed depth.
struct WhiskerCycleReport {
    int n = 0;
    int q = 0;
    int conjectured_depth = 0;
    bool proved = false;
    std::optional<int> computed_depth;
};

WhiskerCycleReport whisker_cycle_report(int n, int q, bool compute = true);

/// Checks the facet characterization of MF^{n-1}(W(H)) for girth(H) != 3:
/// V \ {u,v} is a facet iff u,v are distinct base vertices, or both are
/// whisker vertices over a non-edge, or a mixed pair with i != j.
bool facet_complement_check(const Graph& h);

/// (MF^2 CM <=> H triangle-free, MF^{n-1} CM <=> H acyclic), both decided
/// computationally over GF2.
std::pair<bool, bool> cm_characterizations_check(const Graph& h);

}  // namespace matchfree

#endif
