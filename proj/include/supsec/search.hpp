#pragma once

#include "supsec/core.hpp"
#include "supsec/io.hpp"

namespace supsec {

struct SearchOptions {
    int d = 1;                          // number of orders to search over
    int extra = 0;                      // auxiliary elements z0..z{extra-1}
    std::optional<std::uint64_t> seed;  // forces sampling mode when set
    bool exact = false;                 // Σ(R) == target instead of ⊇
    std::uint64_t attempts = 100'000;   // sampling-mode budget
};

struct SearchResult {
    std::optional<Representation> witness;  // re-verified before being returned
    std::uint64_t checked = 0;              // candidate representations tested
    bool exhaustive = false;                // the whole space was enumerated
};

/// Looks for a representation with d orders over the target's vertices plus
/// the auxiliary elements whose supremum section contains (default) or
/// equals (exact) the target complex.
///
/// A representation is a *set* of orders as far as domination goes, so the
/// exhaustive mode enumerates non-decreasing d-tuples of permutations in
/// lexicographic order and reports the first hit, which makes the output
/// deterministic. Exhaustive mode runs when the ground set has at most 10
/// elements and no seed is given; otherwise seeded random tuples are drawn
/// until the attempt budget runs out. Candidates are pruned by testing the
/// target's facets for membership before any full-section comparison.
///
/// Throws std::invalid_argument for d < 1, extra < 0, an oversized ground
/// set, or a target vertex colliding with an auxiliary name.
SearchResult search_representation(const NamedComplex& target, const SearchOptions& opt);

}  // namespace supsec
