#include "supsec/search.hpp"

#include <algorithm>
#include <numeric>

#include "supsec/gen.hpp"
#include "supsec/supremum.hpp"

namespace supsec {

namespace {

constexpr int kExhaustiveLimit = 10;

struct Candidate {
    const std::vector<std::string>& names;
    const std::vector<Face>& target_facets;
    const SimplicialComplex& target;
    bool exact;

    // facet-membership prune first; the full section only for survivors
    std::optional<Representation> test(const std::vector<LinearOrder>& orders) const {
        const int n = static_cast<int>(names.size());
        const std::uint64_t all = n == kMaxGroundSize ? ~std::uint64_t{0}
                                                      : (std::uint64_t{1} << n) - 1;
        for (Face f : target_facets) {
            std::uint64_t dom = 0;
            for (const LinearOrder& o : orders) {
                dom |= o.ge_rank_mask(o.max_rank(f)).bits;
                if (dom == all) break;
            }
            if (dom != all) return std::nullopt;
        }
        Representation r(names, orders);
        if (exact && !(supremum_section(r) == target)) return std::nullopt;
        return r;
    }
};

// Non-decreasing tuples of permutations in lexicographic order: slot j scans
// from slot j-1's value upward, so every multiset shows up exactly once and
// the first hit is the lexicographically smallest witness.
std::optional<Representation> exhaust(std::vector<std::vector<int>>& slots, std::size_t j,
                                      const Candidate& cand, std::uint64_t& checked) {
    if (j == slots.size()) {
        ++checked;
        std::vector<LinearOrder> orders;
        orders.reserve(slots.size());
        for (const std::vector<int>& s : slots) orders.push_back(LinearOrder::from_sequence(s));
        return cand.test(orders);
    }
    if (j == 0) {
        slots[0].resize(cand.names.size());
        std::iota(slots[0].begin(), slots[0].end(), 0);
    } else {
        slots[j] = slots[j - 1];
    }
    while (true) {
        if (auto r = exhaust(slots, j + 1, cand, checked)) return r;
        if (!std::next_permutation(slots[j].begin(), slots[j].end())) return std::nullopt;
    }
}

}  // namespace

SearchResult search_representation(const NamedComplex& target, const SearchOptions& opt) {
    if (opt.d < 1) throw std::invalid_argument("need at least one order");
    if (opt.extra < 0) throw std::invalid_argument("auxiliary element count must be >= 0");

    std::vector<std::string> names = target.names;
    for (int i = 0; i < opt.extra; ++i) {
        std::string aux = "z" + std::to_string(i);
        if (std::find(names.begin(), names.end(), aux) != names.end())
            throw std::invalid_argument("target vertex collides with auxiliary name '" + aux +
                                        "'");
        names.push_back(std::move(aux));
    }
    const int n = static_cast<int>(names.size());
    if (n < 1) throw std::invalid_argument("search needs at least one element");
    if (n > kMaxGroundSize)
        throw std::invalid_argument("ground set size must be at most " +
                                    std::to_string(kMaxGroundSize));

    const std::vector<Face> target_facets = target.complex.facets();
    const Candidate cand{names, target_facets, target.complex, opt.exact};

    SearchResult out;
    if (!opt.seed && n <= kExhaustiveLimit) {
        out.exhaustive = true;
        std::vector<std::vector<int>> slots(static_cast<std::size_t>(opt.d));
        out.witness = exhaust(slots, 0, cand, out.checked);
    } else {
        std::mt19937_64 rng(opt.seed.value_or(0));
        std::vector<LinearOrder> orders;
        for (std::uint64_t a = 0; a < opt.attempts; ++a) {
            orders.clear();
            for (int j = 0; j < opt.d; ++j)
                orders.push_back(LinearOrder::from_sequence(random_permutation(rng, n)));
            ++out.checked;
            if ((out.witness = cand.test(orders))) break;
        }
    }

    if (out.witness) {
        // never hand out an unverified witness
        const SimplicialComplex sigma = supremum_section(*out.witness);
        const bool good = opt.exact ? sigma == target.complex
                                    : contains_complex(target.complex, *out.witness);
        if (!good) throw std::logic_error("search produced a witness that fails verification");
    }
    return out;
}

}  // namespace supsec
