#include "matchfree/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchfree/even_conn.hpp"

namespace matchfree {

namespace {

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens) {
    std::sort(gens.begin(), gens.end(), size_lex_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<VertexSet> keep;
    for (VertexSet g : gens) {
        bool redundant = false;
        for (VertexSet k : keep)
            if (k.subset_of(g)) { redundant = true; break; }
        if (!redundant) keep.push_back(g);
    }
    return keep;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int variable_count, std::vector<VertexSet> generators)
    : nvars_(variable_count) {
    for (VertexSet g : generators)
        if (!g.subset_of(VertexSet::range(nvars_)))
            throw std::out_of_range("generator variable out of range");
    gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains_monomial(VertexSet support) const {
    for (VertexSet g : gens_)
        if (g.subset_of(support)) return true;
    return false;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<VertexSet> gens;
    for (auto [u, v] : g.edges()) gens.push_back(VertexSet::of({u, v}));
    return MonomialIdeal(g.n(), std::move(gens));
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, VertexSet m) {
    std::vector<VertexSet> gens;
    for (VertexSet g : ideal.generators()) gens.push_back(g - m);
    return MonomialIdeal(ideal.variable_count(), std::move(gens));
}

SimplicialComplex mf_complex(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("matching-free complex needs q >= 1");
    if (g.n() > 20) throw std::out_of_range("matching-free complex capped at 20 vertices");
    auto nu = matching_number_table(g);
    std::vector<VertexSet> facets;
    for_each_subset(g.verts(), [&](VertexSet f) {
        if (nu[f.bits] >= q) return;
        for (int v : elements(g.verts() - f))
            if (nu[f.bits | (std::uint64_t{1} << v)] < q) return;
        facets.push_back(f);
    });
    return SimplicialComplex::from_facets(g.n(), std::move(facets));
}

SimplicialComplex independence_complex(const Graph& g) { return mf_complex(g, 1); }

MonomialIdeal sf_power(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("squarefree power needs q >= 1");
    std::vector<VertexSet> gens;
    for (const Matching& m : enumerate_matchings(g, q)) gens.push_back(m.support());
    return MonomialIdeal(g.n(), std::move(gens));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& d) {
    return MonomialIdeal(d.vertex_count(), minimal_nonfaces(d));
}

bool verify_sr_equality(const Graph& g, int q) {
    return stanley_reisner(mf_complex(g, q)) == sf_power(g, q);
}

PartitionYNS partition_yns(const WhiskerGraph& w, VertexSet f, const Matching& m) {
    const Graph& g = w.graph();
    if (!f.subset_of(g.verts())) throw std::out_of_range("face outside the graph");
    for (auto [u, v] : m.edges())
        if (!f.contains(u) || !f.contains(v) || !g.has_edge(u, v))
            throw std::invalid_argument("matching must consist of edges inside the face");
    if (matching_number(g.restrict_to(f)) != m.size())
        throw std::invalid_argument("face must contain exactly |m| pairwise disjoint edges");

    VertexSet y;
    for (auto e : m.edges())
        if (!w.is_whisker_edge(e)) {
            y.add(w.whisker_of(e.first));
            y.add(w.whisker_of(e.second));
        }
    y -= f;

    VertexSet n;
    VertexSet base_range = VertexSet::range(w.base_n());
    for (int x : elements(g.neighborhood(f) & base_range)) {
        n.add(x);
        n.add(w.whisker_of(x));
    }
    n -= f;
    n -= y;

    VertexSet s = g.verts() - f - y - n;
    return PartitionYNS{f, m, y, n, s};
}

VertexSet extend_whisker_set(const WhiskerGraph& w, const Matching& m, VertexSet s) {
    std::vector<Edge> base_edges;
    for (auto e : m.edges())
        if (!w.is_whisker_edge(e)) base_edges.push_back(e);
    Matching mh(base_edges);
    int target = mh.size();

    VertexSet y;
    for (auto [a, b] : mh.edges()) {
        y.add(w.whisker_of(a));
        y.add(w.whisker_of(b));
    }
    if (!s.subset_of(y)) throw std::invalid_argument("seed set must consist of whisker partners");

    const Graph& g = w.graph();
    auto compatible = [&](int cand, VertexSet with) {
        for (int v : elements(with))
            if (even_connected(g, mh, cand, v)) return false;
        return true;
    };
    for (int a : elements(s))
        for (int b : elements(s))
            if (a < b && even_connected(g, mh, a, b))
                throw std::invalid_argument("seed vertices must be pairwise not even-connected");

    // Greedy endpoint selection with backtracking: always try the next
    // free edge's lower-indexed whisker first.  The pure greedy can dead-
    // end (and for some seeds no completion exists at all), so the search
    // is exhaustive before reporting failure.
    std::optional<VertexSet> found;
    std::function<void(VertexSet)> search = [&](VertexSet cur) {
        if (found) return;
        if (cur.size() == target) {
            found = cur;
            return;
        }
        for (auto [a, b] : mh.edges()) {
            int ya = w.whisker_of(a), yb = w.whisker_of(b);
            if (cur.contains(ya) || cur.contains(yb)) continue;
            for (int cand : {std::min(ya, yb), std::max(ya, yb)})
                if (compatible(cand, cur)) search(cur | VertexSet::single(cand));
            // any completion picks exactly one partner per free edge (the two
            // partners of an edge are always even-connected through it), so
            // branching on the first free edge is exhaustive
            return;
        }
    };
    search(s);
    if (!found)
        throw std::runtime_error("no pairwise non-even-connected whisker set extends the seed");
    return *found;
}

}  // namespace matchfree
