#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "supsec/core.hpp"
#include "supsec/gen.hpp"
#include "supsec/supremum.hpp"

namespace th {

using namespace supsec;

inline Face F(std::initializer_list<int> vs) {
    Face f;
    for (int v : vs) f = f.with(v);
    return f;
}

// --- independent oracles, deliberately naive ------------------------------

inline bool oracle_dominates(int x, Face f, const LinearOrder& o) {
    for (int v : f.members())
        if (o.rank(v) > o.rank(x)) return false;
    return true;
}

inline bool oracle_is_face(Face f, const Representation& r) {
    for (int v = 0; v < r.n(); ++v) {
        bool dom = false;
        for (int i = 0; i < r.d() && !dom; ++i) dom = oracle_dominates(v, f, r.order(i));
        if (!dom) return false;
    }
    return true;
}

// every one of the 2^n subsets, no pruning
inline std::vector<Face> oracle_sigma(const Representation& r) {
    std::vector<Face> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << r.n()); ++m)
        if (oracle_is_face(Face{m}, r)) out.push_back(Face{m});
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

// psi from the raw definition: x is a candidate iff in every order but the
// last, x lies strictly below some member of f. nullopt when no candidate.
inline std::optional<int> oracle_psi(Face f, const Representation& r) {
    std::vector<int> cand;
    for (int x = 0; x < r.n(); ++x) {
        bool ok = true;
        for (int i = 0; ok && i < r.d() - 1; ++i) {
            const LinearOrder& o = r.order(i);
            bool below_some = false;
            for (int v : f.members()) below_some = below_some || o.less(x, v);
            ok = below_some;
        }
        if (ok) cand.push_back(x);
    }
    if (cand.empty()) return std::nullopt;
    const LinearOrder& last = r.order(r.d() - 1);
    return *std::min_element(cand.begin(), cand.end(),
                             [&](int a, int b) { return last.less(a, b); });
}

// --- fixtures --------------------------------------------------------------

// ground a..e with alphabetical ids; orders a<b<e<d<c, c<b<a<d<e, e<d<c<b<a
inline Representation worked_example() {
    std::vector<LinearOrder> orders;
    orders.push_back(LinearOrder::from_sequence(std::vector<int>{0, 1, 4, 3, 2}));
    orders.push_back(LinearOrder::from_sequence(std::vector<int>{2, 1, 0, 3, 4}));
    orders.push_back(LinearOrder::from_sequence(std::vector<int>{4, 3, 2, 1, 0}));
    return Representation({"a", "b", "c", "d", "e"}, std::move(orders));
}

inline constexpr const char* kWorkedFile = "a b e d c\nc b a d e\ne d c b a\n";

inline SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_faces(
        {F({}), F({0}), F({1}), F({2}), F({0, 1}), F({0, 2}), F({1, 2})});
}

inline SimplicialComplex edge_complex() {
    return SimplicialComplex::closure_of(std::vector<Face>{F({0, 1})});
}

inline SimplicialComplex point_complex() {
    return SimplicialComplex::from_faces({F({}), F({0})});
}

// two triangles sharing the single vertex c: facets {a,b,c}, {c,d,e}
inline SimplicialComplex abc_cde() {
    return SimplicialComplex::closure_of(std::vector<Face>{F({0, 1, 2}), F({2, 3, 4})});
}

}  // namespace th
