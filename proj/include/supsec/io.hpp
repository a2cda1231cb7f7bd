#pragma once

#include "supsec/core.hpp"

namespace supsec {

/// Line format: '#' lines and blank lines are ignored; every other line is a
/// whitespace-separated permutation of the ground set, minimum first. The
/// first such line defines the ground set (and is the first order); element
/// ids follow its token order. Errors carry 1-based line numbers.
Representation parse_representation(std::string_view text);

/// One line per order, minimum to maximum. parse ∘ print is the identity on
/// the named structure.
std::string print_representation(const Representation& r);

/// Members in id order, e.g. "{a,b}"; the empty face prints as "{}".
std::string face_to_string(Face f, std::span<const std::string> names);
std::string face_to_string(Face f, const Representation& r);

/// A complex whose vertex ids index a sorted name list.
struct NamedComplex {
    std::vector<std::string> names;    // sorted, unique
    SimplicialComplex complex;         // over ids 0..names.size()-1
};

/// JSON object {"vertices": [...], "facets": [[...], ...]} with sorted
/// vertices, per-facet sorted names, lexicographically sorted facet list,
/// pairwise-incomparable facets. All invariants are enforced, violations
/// throw parse_error. The complex is the closure of the facets.
NamedComplex parse_complex(std::string_view text);

/// Serializes in the same shape; with all_faces an extra "faces" array lists
/// every face ordered by (cardinality, then names).
std::string complex_to_json(const NamedComplex& nc, bool all_faces = false);
std::string complex_to_json(const SimplicialComplex& cx, const Representation& r,
                            bool all_faces = false);

/// DOT digraph of the Hasse diagram: unmatched arcs point upper -> lower,
/// matched arcs are reversed and emphasized.
std::string dot_export(const HasseDiagram& h, const MorseMatching& m, const Representation& r);

}  // namespace supsec
