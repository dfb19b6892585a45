#include "matchfree/theorems.hpp"

#include <stdexcept>

#include "matchfree/homology.hpp"
#include "matchfree/ideal.hpp"

namespace matchfree {

namespace {

void check_q_range(const Graph& h, int q) {
    int nu = h.num_verts();  // nu(W(H)) = n: the whisker edges are a perfect matching
    if (q < 1 || q > nu) throw std::invalid_argument("q outside 1..nu(W(H))");
}

}  // namespace

std::string cm_class_name(CmClass c) {
    switch (c) {
        case CmClass::CM: return "cm";
        case CmClass::SeqCmNotPure: return "seq_cm_not_pure";
        case CmClass::PureUnknownCm: return "pure";
        case CmClass::NotPure: return "not_pure";
        case CmClass::FullSimplex: return "full_simplex";
    }
    return "?";
}

bool expected_pure(const Graph& h, int q) {
    check_q_range(h, q);
    ExtendedInt ell = odd_girth(h);
    if (ell.is_infinite()) return true;
    int l = ell.value();
    int n = h.num_verts();
    return q < (l + 1) / 2 || q > n - l / 2;
}

ExtendedInt expected_shellable_upper(const Graph& h) {
    ExtendedInt m = girth(h);
    if (m.is_infinite()) return ExtendedInt(h.num_verts());
    return ExtendedInt((m.value() + 1) / 2);
}

CmClass expected_cm_class(const Graph& h, int q) {
    check_q_range(h, q);
    ExtendedInt m = girth(h);
    if (m.is_infinite()) return CmClass::CM;
    int g = m.value();
    if (h.is_bipartite()) return q <= g / 2 ? CmClass::CM : CmClass::PureUnknownCm;

    int n = h.num_verts();
    int ell = odd_girth(h).value();
    if (g % 2 == 0) {
        if (q <= g / 2) return CmClass::CM;
        if (q < (ell + 1) / 2) return CmClass::PureUnknownCm;
        if (q <= n - ell / 2) return CmClass::NotPure;
        return CmClass::PureUnknownCm;
    }
    // odd girth case: m = ell
    if (q < (g + 1) / 2) return CmClass::CM;
    if (q == (g + 1) / 2) return CmClass::SeqCmNotPure;
    if (q <= n - g / 2) return CmClass::NotPure;
    return CmClass::PureUnknownCm;
}

std::optional<int> expected_depth(const Graph& h, int q) {
    check_q_range(h, q);
    int n = h.num_verts();
    ExtendedInt m = girth(h);
    if (m.is_infinite()) return n + q - 1;
    int g = m.value();
    if (q <= g / 2) return n + q - 1;
    if (g % 2 == 1 && q == (g + 1) / 2) return n;
    return std::nullopt;
}

std::optional<int> uni_depth_upper_bound(const Graph& h, int q) {
    if (!is_unicyclic(h)) throw std::invalid_argument("unicyclic depth bound needs a unicyclic graph");
    ExtendedInt m = girth(h);
    if (m.value() % 2 == 0) throw std::invalid_argument("unicyclic depth bound needs odd girth");
    int g = m.value();
    int n = h.num_verts();
    if (q < (g + 1) / 2 || q > n - g / 2) return std::nullopt;
    return n + q - 1 - g / 2;
}

WhiskerCycleReport whisker_cycle_report(int n, int q, bool compute) {
    if (n < 3 || q < 1 || q > n) throw std::invalid_argument("whisker cycle report needs 3 <= n, 1 <= q <= n");
    WhiskerCycleReport rep;
    rep.n = n;
    rep.q = q;
    rep.conjectured_depth = q <= n / 2 ? n + q - 1 : 2 * q - 1;
    rep.proved = q <= n / 2 || (n % 2 == 1 && q == (n + 1) / 2);
    if (compute) {
        WhiskerGraph w = whisker(make_cycle(n));
        rep.computed_depth = depth(mf_complex(w.graph(), q), Field::GF2);
    }
    return rep;
}

bool facet_complement_check(const Graph& h) {
    if (girth(h) == ExtendedInt(3)) throw std::invalid_argument("facet characterization needs girth != 3");
    int n = h.num_verts();
    if (n < 2) throw std::invalid_argument("facet characterization needs n >= 2");
    WhiskerGraph w = whisker(h);
    const Graph& g = w.graph();
    SimplicialComplex mf = mf_complex(g, n - 1);

    if (!mf.is_pure()) return false;
    for (VertexSet f : mf.facets())
        if (f.size() != 2 * n - 2) return false;

    auto characterized = [&](int u, int v) {
        bool ub = w.is_base_vertex(u), vb = w.is_base_vertex(v);
        if (ub && vb) return true;                                        // (1)
        if (!ub && !vb) return !h.has_edge(w.base_of(u), w.base_of(v));   // (2)
        int x = ub ? u : v, y = ub ? v : u;                               // (3)
        return w.base_of(y) != x;
    };

    auto vs = g.verts().to_vector();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) {
            VertexSet facet = g.verts() - VertexSet::of({vs[i], vs[j]});
            bool is_facet = std::binary_search(mf.facets().begin(), mf.facets().end(), facet,
                                               size_lex_less);
            if (is_facet != characterized(vs[i], vs[j])) return false;
        }
    return true;
}

std::pair<bool, bool> cm_characterizations_check(const Graph& h) {
    int n = h.num_verts();
    if (n < 2) throw std::invalid_argument("characterization check needs n >= 2");
    WhiskerGraph w = whisker(h);
    bool triangle_free = !(girth(h) == ExtendedInt(3));
    bool acyclic = girth(h).is_infinite();
    bool cm2 = is_cohen_macaulay(mf_complex(w.graph(), 2), Field::GF2);
    bool cm_top = is_cohen_macaulay(mf_complex(w.graph(), n - 1), Field::GF2);
    return {cm2 == triangle_free, cm_top == acyclic};
}

}  // namespace matchfree
