#pragma once

#include "supsec/core.hpp"

namespace supsec {

/// True iff every member of f is <= x in the given order (vacuously true for
/// the empty face).
bool dominates_in_order(int x, Face f, const LinearOrder& order);

/// True iff x dominates f in at least one of the representation's orders.
bool dominates(int x, Face f, const Representation& r);

/// Membership test for the supremum section: every element of the ground set
/// must dominate f.
bool is_face(Face f, const Representation& r);

/// The supremum section Σ(R): all subsets of the ground set that every
/// element dominates. Enumeration only visits subsets of cardinality <= d;
/// any face member must be the face's maximum in some order, so larger
/// subsets can never qualify.
SimplicialComplex supremum_section(const Representation& r);

/// The representation on the first d-1 orders. Throws std::domain_error for
/// a 1-representation.
Representation drop_last_order(const Representation& r);

/// True iff every face of cx lies in Σ(R). Throws std::invalid_argument when
/// cx uses a vertex outside the ground set.
bool contains_complex(const SimplicialComplex& cx, const Representation& r);

}  // namespace supsec
