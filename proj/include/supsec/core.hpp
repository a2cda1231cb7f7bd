#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace supsec {

// Ground sets are capped so a face always fits in one 64-bit word.
inline constexpr int kMaxGroundSize = 64;

/// Error with input-position diagnostics (1-based line, 0 = unknown).
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, int line = 0, int column = 0)
        : std::runtime_error(msg), line(line), column(column) {}
    int line;
    int column;
};

/// A subset of the ground set, one bit per element id.
struct Face {
    std::uint64_t bits = 0;

    bool empty() const { return bits == 0; }
    int size() const { return std::popcount(bits); }
    bool contains(int v) const { return (bits >> v) & 1u; }
    bool subset_of(Face o) const { return (bits & ~o.bits) == 0; }
    bool strict_subset_of(Face o) const { return bits != o.bits && subset_of(o); }
    Face with(int v) const { return {bits | (std::uint64_t{1} << v)}; }
    Face without(int v) const { return {bits & ~(std::uint64_t{1} << v)}; }
    Face unite(Face o) const { return {bits | o.bits}; }

    std::vector<int> members() const;

    bool operator==(const Face&) const = default;
};

/// Canonical order: cardinality first, then bit pattern. Every sorted
/// container of faces in this library uses this order.
inline bool face_less(Face a, Face b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.bits < b.bits;
}

struct FaceLess {
    bool operator()(Face a, Face b) const { return face_less(a, b); }
};

struct FaceHash {
    std::size_t operator()(Face f) const {
        std::uint64_t x = f.bits;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

/// A total order on element ids 0..n-1; rank 0 is the minimum.
class LinearOrder {
public:
    static LinearOrder from_ranks(std::vector<int> ranks);
    static LinearOrder from_sequence(std::span<const int> min_to_max);

    int size() const { return static_cast<int>(rank_.size()); }
    int rank(int v) const { return rank_[v]; }
    bool less(int a, int b) const { return rank_[a] < rank_[b]; }
    int minimum() const;
    std::vector<int> sequence() const;

    /// Highest rank taken over the members of f, or -1 for the empty face.
    int max_rank(Face f) const;

    /// All elements of rank >= k (k is clamped to 0..n).
    Face ge_rank_mask(int k) const;

    bool operator==(const LinearOrder& o) const { return rank_ == o.rank_; }

private:
    explicit LinearOrder(std::vector<int> ranks);
    std::vector<int> rank_;                  // rank_[id] in 0..n-1, bijective
    std::vector<std::uint64_t> ge_mask_;     // ge_mask_[k] = elements of rank >= k
};

/// A ground set plus d >= 1 total orders over it. Duplicate orders are
/// allowed; element ids follow declaration order of the names.
class Representation {
public:
    Representation(std::vector<std::string> names, std::vector<LinearOrder> orders);

    int n() const { return static_cast<int>(names_.size()); }
    int d() const { return static_cast<int>(orders_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[v]; }
    std::optional<int> id_of(std::string_view name) const;
    const LinearOrder& order(int i) const { return orders_[i]; }
    const std::vector<LinearOrder>& orders() const { return orders_; }

    /// The sub-representation on the first k orders, same ground set.
    Representation prefix(int k) const;

    /// The whole ground set as a face.
    Face full() const;

private:
    std::vector<std::string> names_;
    std::vector<LinearOrder> orders_;
    std::unordered_map<std::string, int> ids_;
};

/// Resolves name tokens against the ground set; duplicates collapse to one
/// member. Unknown tokens raise parse_error naming the token.
Face canonical_face(std::span<const std::string> tokens, const Representation& r);

/// A downward-closed family of faces, stored sorted in canonical order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Validates downward closure; throws std::invalid_argument otherwise.
    static SimplicialComplex from_faces(std::vector<Face> faces);

    /// Downward closure of the given generators.
    static SimplicialComplex closure_of(std::span<const Face> generators);

    std::span<const Face> faces() const { return faces_; }
    std::size_t size() const { return faces_.size(); }
    bool empty() const { return faces_.empty(); }
    bool contains(Face f) const;

    /// Maximal faces, computed on demand.
    std::vector<Face> facets() const;

    /// True for a complex of the exact form {∅, {v}}.
    bool is_point() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<Face> faces_;  // sorted by face_less, no duplicates
};

struct HasseArc {
    Face upper, lower;
    bool operator==(const HasseArc&) const = default;
};

/// Covering relation of inclusion on a downward-closed family: each face has
/// exactly one down-arc per member. Arcs are oriented upper -> lower.
struct HasseDiagram {
    std::vector<Face> nodes;      // canonical order
    std::vector<HasseArc> arcs;   // sorted by (upper, lower) in canonical order
};

HasseDiagram hasse_diagram(const SimplicialComplex& cx);

struct MatchPair {
    Face upper, lower;
    bool operator==(const MatchPair&) const = default;
};

/// A set of Hasse arcs intended as a complete acyclic matching. Whether it
/// actually is one is decided by verify_matching, never assumed.
struct MorseMatching {
    std::vector<MatchPair> pairs;  // sorted by (lower, upper)
    bool operator==(const MorseMatching&) const = default;
};

struct CollapseStep {
    Face free, facet;
    bool operator==(const CollapseStep&) const = default;
};

/// An ordered list of elementary collapses. Validity is defined by replay.
struct CollapseSequence {
    std::vector<CollapseStep> steps;
    bool operator==(const CollapseSequence&) const = default;
};

}  // namespace supsec
