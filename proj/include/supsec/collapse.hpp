#pragma once

#include "supsec/core.hpp"

namespace supsec {

/// All (free face, unique containing facet) pairs of cx, in canonical order
/// of the free face. A free face is nonempty, non-maximal, and contained in
/// exactly one facet.
std::vector<CollapseStep> free_faces(const SimplicialComplex& cx);

/// Removes f and every face containing it. Throws std::domain_error when f
/// is not a free face of cx.
SimplicialComplex elementary_collapse(const SimplicialComplex& cx, Face f);

/// Result of turning a complete acyclic matching into explicit collapses.
/// The terminal pair ({v}, ∅) is never executed as a collapse; it records
/// the point the sequence ends at.
struct Extraction {
    CollapseSequence seq;
    MatchPair terminal;
};

/// Replays a matching as elementary collapses, most exposed pair first:
/// at each step the lexicographically smallest face that is currently free
/// with its matched partner as unique facet is collapsed. The matching is
/// re-verified first (std::invalid_argument if it is not a complete acyclic
/// matching); a stuck state afterwards throws std::logic_error, since
/// acyclicity rules it out.
Extraction extract_collapse_sequence(const SimplicialComplex& cx, const MorseMatching& m);

/// Replay failure: step index (0-based) and the offending face.
struct replay_error : std::runtime_error {
    replay_error(const std::string& msg, std::size_t step, Face face)
        : std::runtime_error(msg), step(step), face(face) {}
    std::size_t step;
    Face face;
};

/// Applies the steps in order, checking at each step that the free face is
/// genuinely free and that its unique facet is the recorded one.
SimplicialComplex replay(SimplicialComplex cx, const CollapseSequence& s);

enum class Collapsibility { Yes, No, Unknown };

struct OracleResult {
    Collapsibility status = Collapsibility::Unknown;
    CollapseSequence witness;  // replays to a point when status is Yes
    std::uint64_t states_visited = 0;
};

/// Exhaustive backtracking over free-face choices with memoization on the
/// facet list of visited dead ends. Greedy collapsing alone can dead-end, so
/// the search explores every branch before answering No. Unknown means the
/// state budget ran out first.
OracleResult is_collapsible_bruteforce(const SimplicialComplex& cx,
                                       std::uint64_t budget = 1'000'000);

}  // namespace supsec
