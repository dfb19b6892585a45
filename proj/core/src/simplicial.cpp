#include "matchfree/simplicial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace matchfree {

namespace {

void prune_to_maximal(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(),
              [](VertexSet a, VertexSet b) { return size_lex_less(b, a); });  // large first
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> keep;
    for (VertexSet s : sets) {
        bool covered = false;
        for (VertexSet k : keep)
            if (s.subset_of(k)) { covered = true; break; }
        if (!covered) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end(), size_lex_less);
    sets = std::move(keep);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VertexSet> sets) {
    if (n < 0 || n > 64) throw std::out_of_range("vertex count must be in [0, 64]");
    SimplicialComplex c;
    c.n_ = n;
    for (VertexSet s : sets)
        if (!s.subset_of(VertexSet::range(n))) throw std::out_of_range("facet vertex out of range");
    prune_to_maximal(sets);
    c.facets_ = std::move(sets);
    return c;
}

SimplicialComplex SimplicialComplex::void_complex(int n) { return from_facets(n, {}); }

SimplicialComplex SimplicialComplex::empty_complex(int n) { return from_facets(n, {VertexSet{}}); }

SimplicialComplex SimplicialComplex::full_simplex(int n, VertexSet verts) {
    return from_facets(n, {verts});
}

bool SimplicialComplex::is_face(VertexSet f) const {
    for (VertexSet fac : facets_)
        if (f.subset_of(fac)) return true;
    return false;
}

ExtendedInt SimplicialComplex::dimension() const {
    if (facets_.empty()) return ExtendedInt::neg_infinity();
    int best = -1;
    for (VertexSet f : facets_) best = std::max(best, f.size() - 1);
    return ExtendedInt(best);
}

bool SimplicialComplex::is_pure() const {
    for (VertexSet f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

int SimplicialComplex::min_facet_size() const {
    if (facets_.empty()) throw std::logic_error("min_facet_size of the void complex");
    int best = facets_.front().size();
    for (VertexSet f : facets_) best = std::min(best, f.size());
    return best;
}

VertexSet SimplicialComplex::support() const {
    VertexSet s;
    for (VertexSet f : facets_) s |= f;
    return s;
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_size() const {
    if (facets_.empty()) throw std::logic_error("face enumeration of the void complex");
    std::unordered_set<VertexSet> seen;
    ExtendedInt d = dimension();
    std::vector<std::vector<VertexSet>> out(static_cast<size_t>(d.value() + 2));
    for (VertexSet fac : facets_)
        for_each_subset(fac, [&](VertexSet f) {
            if (seen.insert(f).second) out[f.size()].push_back(f);
        });
    for (auto& level : out) std::sort(level.begin(), level.end(), lex_less);
    return out;
}

std::size_t SimplicialComplex::face_count() const {
    std::unordered_set<VertexSet> seen;
    for (VertexSet fac : facets_)
        for_each_subset(fac, [&](VertexSet f) { seen.insert(f); });
    return seen.size();
}

SimplicialComplex link(const SimplicialComplex& d, VertexSet f) {
    if (!d.is_face(f)) throw std::invalid_argument("link of a non-face");
    std::vector<VertexSet> facets;
    for (VertexSet fac : d.facets())
        if (f.subset_of(fac)) facets.push_back(fac - f);
    // Facets of Δ containing f stay incomparable after removing f.
    std::sort(facets.begin(), facets.end(), size_lex_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return SimplicialComplex::from_facets(d.vertex_count(), std::move(facets));
}

SimplicialComplex deletion(const SimplicialComplex& d, VertexSet f) {
    std::vector<VertexSet> facets;
    for (VertexSet fac : d.facets()) facets.push_back(fac - f);
    return SimplicialComplex::from_facets(d.vertex_count(), std::move(facets));
}

SimplicialComplex remove_star(const SimplicialComplex& d, VertexSet sigma) {
    if (sigma.empty()) return SimplicialComplex::void_complex(d.vertex_count());
    std::vector<VertexSet> facets;
    for (VertexSet fac : d.facets()) {
        if (!sigma.subset_of(fac)) {
            facets.push_back(fac);
        } else {
            for (int v : elements(sigma)) facets.push_back(fac - VertexSet::single(v));
        }
    }
    return SimplicialComplex::from_facets(d.vertex_count(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("join requires a shared vertex range");
    if (a.support().intersects(b.support()))
        throw std::invalid_argument("join requires disjoint supports");
    std::vector<VertexSet> facets;
    for (VertexSet fa : a.facets())
        for (VertexSet fb : b.facets()) facets.push_back(fa | fb);
    return SimplicialComplex::from_facets(a.vertex_count(), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& d, int i) {
    if (i < -1) throw std::invalid_argument("skeleton dimension below -1");
    std::vector<VertexSet> facets;
    for (VertexSet fac : d.facets()) {
        if (fac.size() <= i + 1) {
            facets.push_back(fac);
            continue;
        }
        // all (i+1)-subsets of fac
        auto vs = fac.to_vector();
        std::vector<int> pick(static_cast<size_t>(i + 1));
        std::function<void(int, int)> rec = [&](int start, int chosen) {
            if (chosen == i + 1) {
                VertexSet s;
                for (int k = 0; k < chosen; ++k) s.add(pick[static_cast<size_t>(k)]);
                facets.push_back(s);
                return;
            }
            for (int p = start; p < static_cast<int>(vs.size()); ++p) {
                pick[static_cast<size_t>(chosen)] = vs[static_cast<size_t>(p)];
                rec(p + 1, chosen + 1);
            }
        };
        if (i + 1 == 0) facets.push_back(VertexSet{});
        else rec(0, 0);
    }
    return SimplicialComplex::from_facets(d.vertex_count(), std::move(facets));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& d, int dim) {
    ExtendedInt top = d.dimension();
    if (top.is_neg_infinite() || dim < -1 || ExtendedInt(dim) > top)
        throw std::invalid_argument("pure skeleton dimension out of range");
    std::vector<VertexSet> faces;
    std::unordered_set<VertexSet> seen;
    for (VertexSet fac : d.facets()) {
        if (fac.size() < dim + 1) continue;
        auto vs = fac.to_vector();
        std::vector<int> idx(static_cast<size_t>(dim + 1));
        std::function<void(int, int)> rec = [&](int start, int chosen) {
            if (chosen == dim + 1) {
                VertexSet s;
                for (int k = 0; k < chosen; ++k) s.add(idx[static_cast<size_t>(k)]);
                if (seen.insert(s).second) faces.push_back(s);
                return;
            }
            for (int p = start; p < static_cast<int>(vs.size()); ++p) {
                idx[static_cast<size_t>(chosen)] = vs[static_cast<size_t>(p)];
                rec(p + 1, chosen + 1);
            }
        };
        if (dim + 1 == 0) {
            if (seen.insert(VertexSet{}).second) faces.push_back(VertexSet{});
        } else {
            rec(0, 0);
        }
    }
    return SimplicialComplex::from_facets(d.vertex_count(), std::move(faces));
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& d) {
    if (d.vertex_count() > 20) throw std::out_of_range("non-face sweep capped at 20 vertices");
    std::vector<VertexSet> out;
    std::uint64_t total = std::uint64_t{1} << d.vertex_count();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        VertexSet f{mask};
        if (d.is_face(f)) continue;
        bool minimal = true;
        for (int v : elements(f))
            if (!d.is_face(f - VertexSet::single(v))) { minimal = false; break; }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& d) {
    if (d.is_void()) throw std::invalid_argument("Alexander dual of the void complex");
    VertexSet all = VertexSet::range(d.vertex_count());
    if (d.is_face(all)) throw std::invalid_argument("Alexander dual of the full simplex");
    std::vector<VertexSet> facets;
    for (VertexSet nf : minimal_nonfaces(d)) facets.push_back(all - nf);
    return SimplicialComplex::from_facets(d.vertex_count(), std::move(facets));
}

SimplicialComplex complement_complex(const SimplicialComplex& d) {
    VertexSet all = VertexSet::range(d.vertex_count());
    std::vector<VertexSet> facets;
    for (VertexSet f : d.facets()) facets.push_back(all - f);
    return SimplicialComplex::from_facets(d.vertex_count(), std::move(facets));
}

std::vector<std::uint64_t> complex_key(const SimplicialComplex& d) {
    std::vector<std::uint64_t> key;
    key.reserve(d.facets().size() + 1);
    key.push_back(static_cast<std::uint64_t>(d.vertex_count()));
    for (VertexSet f : d.facets()) key.push_back(f.bits);
    return key;
}

SimplicialComplex canonical_relabel(const SimplicialComplex& d) {
    auto vs = d.support().to_vector();
    if (vs.empty()) return d;
    // Iterated refinement with hashed signatures: start from the multiset
    // of facet sizes through v, then fold in the co-occurring signatures.
    // Collisions only weaken the ordering, never the correctness: the memo
    // key is the relabeled facet list itself.
    auto fold = [](std::uint64_t h, std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h * 0x100000001b3ULL;
    };
    std::vector<std::uint64_t> sig(static_cast<size_t>(d.vertex_count()), 0);
    std::vector<std::uint64_t> scratch;
    for (int v : vs) {
        scratch.clear();
        for (VertexSet f : d.facets())
            if (f.contains(v)) scratch.push_back(static_cast<std::uint64_t>(f.size()));
        std::sort(scratch.begin(), scratch.end());
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : scratch) h = fold(h, x);
        sig[static_cast<size_t>(v)] = h;
    }
    std::vector<std::uint64_t> facet_hash(d.facets().size());
    std::vector<std::uint64_t> next(sig.size());
    for (int round = 0; round < 3; ++round) {
        for (size_t i = 0; i < d.facets().size(); ++i) {
            scratch.clear();
            for (int w : elements(d.facets()[i])) scratch.push_back(sig[static_cast<size_t>(w)]);
            std::sort(scratch.begin(), scratch.end());
            std::uint64_t h = 1099511628211ULL;
            for (auto x : scratch) h = fold(h, x);
            facet_hash[i] = h;
        }
        for (int v : vs) {
            scratch.clear();
            for (size_t i = 0; i < d.facets().size(); ++i)
                if (d.facets()[i].contains(v)) scratch.push_back(facet_hash[i]);
            std::sort(scratch.begin(), scratch.end());
            std::uint64_t h = sig[static_cast<size_t>(v)];
            for (auto x : scratch) h = fold(h, x);
            next[static_cast<size_t>(v)] = h;
        }
        sig = next;
    }
    std::stable_sort(vs.begin(), vs.end(),
                     [&](int a, int b) { return sig[static_cast<size_t>(a)] < sig[static_cast<size_t>(b)]; });
    std::vector<int> newIndex(static_cast<size_t>(d.vertex_count()), -1);
    for (size_t i = 0; i < vs.size(); ++i) newIndex[static_cast<size_t>(vs[i])] = static_cast<int>(i);
    std::vector<VertexSet> facets;
    for (VertexSet f : d.facets()) {
        VertexSet g;
        for (int v : elements(f)) g.add(newIndex[static_cast<size_t>(v)]);
        facets.push_back(g);
    }
    return SimplicialComplex::from_facets(static_cast<int>(vs.size()), std::move(facets));
}

}  // namespace matchfree
