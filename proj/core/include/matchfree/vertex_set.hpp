#ifndef MATCHFREE_VERTEX_SET_HPP
#define MATCHFREE_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace matchfree {

/// Subset of an indexed vertex universe of size <= 64, stored as a bitmask.
/// All set algebra used by graphs, complexes and ideals goes through here.
struct VertexSet {
    std::uint64_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet of(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr void add(int v) { bits |= std::uint64_t{1} << v; }
    constexpr void remove(int v) { bits &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    constexpr VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits &= ~o.bits; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }
    constexpr int lowest() const { return std::countr_zero(bits); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }
};

/// Iterates the elements of a set: for (int v : elements(s)) ...
struct ElementRange {
    std::uint64_t bits;
    struct iterator {
        std::uint64_t b;
        int operator*() const { return std::countr_zero(b); }
        iterator& operator++() { b &= b - 1; return *this; }
        bool operator!=(const iterator& o) const { return b != o.b; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};
inline ElementRange elements(VertexSet s) { return {s.bits}; }

/// Vertex-list order: the set whose smallest differing vertex is present
/// comes first.  Used wherever the deterministic "lexicographic on sorted
/// vertex lists" order is required.
inline bool lex_less(VertexSet a, VertexSet b) {
    std::uint64_t diff = a.bits ^ b.bits;
    if (diff == 0) return false;
    std::uint64_t low = diff & (~diff + 1);
    return (a.bits & low) != 0;
}

/// Size-then-lex order used for facet lists and generator lists.
inline bool size_lex_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

/// Visits all subsets of `mask` (including empty and full).
template <typename F>
void for_each_subset(VertexSet mask, F&& fn) {
    std::uint64_t m = mask.bits;
    std::uint64_t sub = m;
    while (true) {
        fn(VertexSet(sub));
        if (sub == 0) break;
        sub = (sub - 1) & m;
    }
}

}  // namespace matchfree

template <>
struct std::hash<matchfree::VertexSet> {
    size_t operator()(const matchfree::VertexSet& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits);
    }
};

#endif
