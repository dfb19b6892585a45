#include "matchfree/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace matchfree {

namespace {

// ---------------------------------------------------------------------
// Face bookkeeping and elementary collapses
// ---------------------------------------------------------------------

struct FaceLevels {
    // levels[k] = faces with k vertices; levels[0] = {∅}.
    std::vector<std::vector<VertexSet>> levels;
};

// Repeatedly removes pairs (σ, τ) where σ ≠ ∅ has τ as its unique proper
// coface.  The result is again a simplicial complex of the same homotopy
// type, usually far smaller.
FaceLevels collapsed_faces(const SimplicialComplex& d) {
    std::unordered_set<VertexSet> faces;
    for (VertexSet fac : d.facets())
        for_each_subset(fac, [&](VertexSet f) { faces.insert(f); });

    VertexSet support = d.support();
    std::unordered_map<VertexSet, int> coface_count;
    coface_count.reserve(faces.size());
    for (VertexSet f : faces) {
        int c = 0;
        for (int v : elements(support - f))
            if (faces.count(f | VertexSet::single(v))) ++c;
        coface_count[f] = c;
    }

    std::deque<VertexSet> queue;
    for (auto& [f, c] : coface_count)
        if (c == 1 && !f.empty()) queue.push_back(f);

    auto decrement = [&](VertexSet f) {
        for (int v : elements(f)) {
            VertexSet sub = f - VertexSet::single(v);
            auto it = coface_count.find(sub);
            if (it == coface_count.end() || !faces.count(sub)) continue;
            if (--it->second == 1 && !sub.empty()) queue.push_back(sub);
        }
    };

    while (!queue.empty()) {
        VertexSet sigma = queue.front();
        queue.pop_front();
        if (!faces.count(sigma) || coface_count[sigma] != 1) continue;
        VertexSet tau;
        for (int v : elements(support - sigma)) {
            VertexSet c = sigma | VertexSet::single(v);
            if (faces.count(c)) { tau = c; break; }
        }
        faces.erase(sigma);
        faces.erase(tau);
        decrement(tau);   // sigma is gone already; its count no longer matters
        decrement(sigma);
    }

    FaceLevels out;
    for (VertexSet f : faces) {
        size_t k = static_cast<size_t>(f.size());
        if (out.levels.size() <= k) out.levels.resize(k + 1);
        out.levels[k].push_back(f);
    }
    for (auto& level : out.levels) std::sort(level.begin(), level.end(), lex_less);
    return out;
}

// ---------------------------------------------------------------------
// Boundary matrices and ranks
// ---------------------------------------------------------------------

struct BoundaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, int>>> columns;  // (row, ±1)
};

BoundaryMatrix boundary_matrix(const std::vector<VertexSet>& lower,
                               const std::vector<VertexSet>& upper) {
    BoundaryMatrix m;
    m.rows = static_cast<int>(lower.size());
    m.cols = static_cast<int>(upper.size());
    std::unordered_map<VertexSet, int> row_of;
    row_of.reserve(lower.size());
    for (size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = static_cast<int>(i);
    m.columns.resize(upper.size());
    for (size_t j = 0; j < upper.size(); ++j) {
        VertexSet f = upper[j];
        for (int v : elements(f)) {
            auto it = row_of.find(f - VertexSet::single(v));
            if (it == row_of.end()) continue;  // collapsed away
            int pos = VertexSet(f.bits & ((std::uint64_t{1} << v) - 1)).size();
            m.columns[j].push_back({it->second, (pos % 2 == 0) ? 1 : -1});
        }
    }
    return m;
}

long gf2_rank(const BoundaryMatrix& m) {
    size_t words = static_cast<size_t>((m.rows + 63) / 64);
    if (words == 0) return 0;
    std::vector<std::vector<std::uint64_t>> pivots;        // reduced columns
    std::vector<int> pivot_row;
    std::vector<std::uint64_t> col(words);
    long rank = 0;
    for (const auto& entries : m.columns) {
        std::fill(col.begin(), col.end(), 0);
        for (auto [r, s] : entries) col[static_cast<size_t>(r) / 64] ^= std::uint64_t{1} << (r % 64);
        for (size_t p = 0; p < pivots.size(); ++p) {
            int pr = pivot_row[p];
            if (col[static_cast<size_t>(pr) / 64] >> (pr % 64) & 1)
                for (size_t w = 0; w < words; ++w) col[w] ^= pivots[p][w];
        }
        int lead = -1;
        for (size_t w = 0; w < words; ++w)
            if (col[w]) { lead = static_cast<int>(w * 64 + std::countr_zero(col[w])); break; }
        if (lead < 0) continue;
        pivots.push_back(col);
        pivot_row.push_back(lead);
        ++rank;
    }
    return rank;
}

// Fraction-free (Bareiss) rank with row/column pivoting on the smallest
// nonzero entry.  Exact over the integers; division at each step is exact.
long bareiss_rank(const BoundaryMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (static_cast<long long>(m.rows) * m.cols > 4'000'000)
        throw std::length_error("exact rational elimination: matrix too large");
    std::vector<std::vector<mpz_class>> a(static_cast<size_t>(m.rows),
                                          std::vector<mpz_class>(static_cast<size_t>(m.cols), 0));
    for (int j = 0; j < m.cols; ++j)
        for (auto [r, s] : m.columns[static_cast<size_t>(j)])
            a[static_cast<size_t>(r)][static_cast<size_t>(j)] = s;

    size_t R = a.size(), C = a[0].size();
    mpz_class prev = 1;
    long rank = 0;
    for (size_t k = 0; k < std::min(R, C); ++k) {
        size_t bi = R, bj = C;
        for (size_t i = k; i < R; ++i)
            for (size_t j = k; j < C; ++j) {
                if (a[i][j] == 0) continue;
                if (bi == R || mpz_cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi == R) break;
        std::swap(a[k], a[bi]);
        if (bj != k)
            for (size_t i = 0; i < R; ++i) std::swap(a[i][k], a[i][bj]);
        for (size_t i = k + 1; i < R; ++i) {
            for (size_t j = k + 1; j < C; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
        ++rank;
    }
    return rank;
}

// Is the complex the complete k-skeleton of the simplex on its support?
// (Facets are distinct, so a count match means every (k+1)-subset occurs.)
// These complexes are shellable, hence CM over any field, and are wedges
// of binom(s-1, k+1) spheres of dimension k.
bool is_full_simplex_skeleton(const SimplicialComplex& d, long* wedge_count = nullptr) {
    if (d.is_void() || !d.is_pure()) return false;
    int k1 = d.facets().front().size();
    int s = d.support().size();
    if (k1 == 0 || k1 >= s) return false;
    unsigned long long total = 1;
    for (int i = 1; i <= k1; ++i) total = total * static_cast<unsigned>(s - k1 + i) / static_cast<unsigned>(i);
    if (d.facets().size() != total) return false;
    if (wedge_count) {
        unsigned long long w = 1;
        for (int i = 1; i <= k1; ++i) w = w * static_cast<unsigned>(s - 1 - k1 + i) / static_cast<unsigned>(i);
        *wedge_count = static_cast<long>(w);
    }
    return true;
}

BettiVector betti_from_levels(const FaceLevels& fl, int top_dim, Field field) {
    BettiVector out;
    out.top_dim = top_dim;
    out.ranks.assign(static_cast<size_t>(top_dim + 2), 0);

    int levels = static_cast<int>(fl.levels.size());  // faces of size 0..levels-1
    std::vector<long> n(static_cast<size_t>(levels), 0);
    for (int k = 0; k < levels; ++k) n[static_cast<size_t>(k)] = static_cast<long>(fl.levels[static_cast<size_t>(k)].size());

    // r2[k] = gf2 rank of ∂ from k-element faces to (k-1)-element faces.
    std::vector<BoundaryMatrix> mats(static_cast<size_t>(levels));
    std::vector<long> r2(static_cast<size_t>(levels + 1), 0);
    for (int k = 1; k < levels; ++k) {
        mats[static_cast<size_t>(k)] =
            boundary_matrix(fl.levels[static_cast<size_t>(k - 1)], fl.levels[static_cast<size_t>(k)]);
        r2[static_cast<size_t>(k)] = gf2_rank(mats[static_cast<size_t>(k)]);
    }

    // Faces with k elements sit in dimension k-1, index k of the output.
    if (field == Field::GF2) {
        for (int k = 0; k < levels; ++k)
            out.ranks[static_cast<size_t>(k)] =
                n[static_cast<size_t>(k)] - r2[static_cast<size_t>(k)] - r2[static_cast<size_t>(k + 1)];
        return out;
    }

    // Rational ranks: rank_Q >= rank_2 and rank_Q ∂_k + rank_Q ∂_{k+1} <= n_k,
    // so whenever the GF2 ranks already saturate n_k both rational ranks are
    // pinned.  Only the remaining matrices need exact elimination.
    std::vector<std::optional<long>> rq(static_cast<size_t>(levels + 1));
    rq[0] = 0;
    rq[static_cast<size_t>(levels)] = 0;
    for (int k = 0; k < levels; ++k) {
        if (n[static_cast<size_t>(k)] == r2[static_cast<size_t>(k)] + r2[static_cast<size_t>(k + 1)]) {
            rq[static_cast<size_t>(k)] = r2[static_cast<size_t>(k)];
            rq[static_cast<size_t>(k + 1)] = r2[static_cast<size_t>(k + 1)];
        }
    }
    for (int k = 1; k < levels; ++k)
        if (!rq[static_cast<size_t>(k)]) rq[static_cast<size_t>(k)] = bareiss_rank(mats[static_cast<size_t>(k)]);

    for (int k = 0; k < levels; ++k)
        out.ranks[static_cast<size_t>(k)] =
            n[static_cast<size_t>(k)] - *rq[static_cast<size_t>(k)] - *rq[static_cast<size_t>(k + 1)];
    return out;
}

// ---------------------------------------------------------------------
// Cohen-Macaulay cache
// ---------------------------------------------------------------------

struct KeyHash {
    size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        size_t h = v.size();
        for (auto x : v) h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::mutex cm_cache_mutex;
std::unordered_map<std::vector<std::uint64_t>, bool, KeyHash> cm_cache[2];

bool cm_rec(const SimplicialComplex& d, Field field);

bool cm_compute(const SimplicialComplex& d, Field field) {
    if (d.is_simplex()) return true;

    // Cone apex stripping: Δ = A * Γ is Cohen-Macaulay iff Γ is.
    VertexSet apex = d.facets().front();
    for (VertexSet f : d.facets()) apex &= f;
    if (!apex.empty()) {
        std::vector<VertexSet> stripped;
        for (VertexSet f : d.facets()) stripped.push_back(f - apex);
        return cm_rec(SimplicialComplex::from_facets(d.vertex_count(), std::move(stripped)), field);
    }

    if (!d.is_pure()) return false;            // CM complexes are pure
    if (is_full_simplex_skeleton(d)) return true;

    ExtendedInt dim = d.dimension();
    if (!reduced_betti(d, field).vanishes_below(dim.value())) return false;
    for (int v : elements(d.support()))
        if (!cm_rec(link(d, VertexSet::single(v)), field)) return false;
    return true;
}

bool cm_rec(const SimplicialComplex& d, Field field) {
    if (d.is_void()) throw std::invalid_argument("Cohen-Macaulayness of the void complex");
    auto key = complex_key(canonical_relabel(d));
    auto& cache = cm_cache[field == Field::GF2 ? 0 : 1];
    {
        std::lock_guard<std::mutex> lock(cm_cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool result = cm_compute(d, field);
    {
        std::lock_guard<std::mutex> lock(cm_cache_mutex);
        cache.emplace(std::move(key), result);
    }
    return result;
}

}  // namespace

BettiVector reduced_betti(const SimplicialComplex& d, Field field) {
    if (d.is_void()) throw std::invalid_argument("homology of the void complex");
    int top = d.dimension().value();  // -1 for {∅}
    long wedge = 0;
    if (is_full_simplex_skeleton(d, &wedge)) {
        BettiVector out;
        out.top_dim = top;
        out.ranks.assign(static_cast<size_t>(top + 2), 0);
        out.ranks[static_cast<size_t>(top + 1)] = wedge;
        return out;
    }
    FaceLevels fl = collapsed_faces(d);
    return betti_from_levels(fl, top, field);
}

bool is_cohen_macaulay(const SimplicialComplex& d, Field field) { return cm_rec(d, field); }

bool is_sequentially_cm(const SimplicialComplex& d, Field field) {
    if (d.is_void()) throw std::invalid_argument("sequential CM of the void complex");
    int top = d.dimension().is_neg_infinite() ? -1 : d.dimension().value();
    for (int dd = 0; dd <= top; ++dd)
        if (!cm_rec(pure_skeleton(d, dd), field)) return false;
    return true;
}

int depth(const SimplicialComplex& d, Field field) {
    if (d.is_void()) throw std::invalid_argument("depth of the void complex");
    if (d.dimension().is_neg_infinite() || d.dimension() == ExtendedInt(-1)) return 0;
    int top = d.dimension().value();
    // Skeleta of CM complexes are CM, so the CM skeleta form an initial
    // segment and the first failure ends the scan.
    int best = -1;
    for (int i = 0; i <= top; ++i) {
        if (!cm_rec(skeleton(d, i), field)) break;
        best = i;
    }
    return best + 1;
}

int min_facet_size(const SimplicialComplex& d) { return d.min_facet_size(); }

void clear_homology_cache() {
    std::lock_guard<std::mutex> lock(cm_cache_mutex);
    cm_cache[0].clear();
    cm_cache[1].clear();
}

}  // namespace matchfree
