#include "supsec/supremum.hpp"

#include <algorithm>

namespace supsec {

bool dominates_in_order(int x, Face f, const LinearOrder& order) {
    return order.rank(x) >= order.max_rank(f);
}

bool dominates(int x, Face f, const Representation& r) {
    for (const LinearOrder& o : r.orders())
        if (dominates_in_order(x, f, o)) return true;
    return false;
}

bool is_face(Face f, const Representation& r) {
    // accumulate, per order, everything that dominates f there
    std::uint64_t dominated = 0;
    const std::uint64_t all = r.full().bits;
    for (const LinearOrder& o : r.orders()) {
        dominated |= o.ge_rank_mask(o.max_rank(f)).bits;
        if (dominated == all) return true;
    }
    return false;
}

namespace {

// Visits all cardinality-k subsets of 0..n-1 in increasing bit-pattern order.
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k == 0) {
        fn(Face{});
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Face f;
        for (int i : idx) f = f.with(i);
        fn(f);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int j = pos + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

SimplicialComplex supremum_section(const Representation& r) {
    std::vector<Face> faces;
    const int cap = std::min(r.d(), r.n());
    for (int k = 0; k <= cap; ++k) {
        for_each_subset_of_size(r.n(), k, [&](Face f) {
            if (is_face(f, r)) faces.push_back(f);
        });
    }
    return SimplicialComplex::from_faces(std::move(faces));
}

Representation drop_last_order(const Representation& r) {
    if (r.d() < 2) throw std::domain_error("cannot drop the only order of a 1-representation");
    return r.prefix(r.d() - 1);
}

bool contains_complex(const SimplicialComplex& cx, const Representation& r) {
    const Face ground = r.full();
    for (Face f : cx.faces())
        if (!f.subset_of(ground))
            throw std::invalid_argument("complex uses a vertex outside the ground set");
    for (Face f : cx.faces())
        if (!is_face(f, r)) return false;
    return true;
}

}  // namespace supsec
