#pragma once

#include "supsec/core.hpp"

namespace supsec {

enum class LayerSide { A, B };

/// A face of the layer Σ(R) \ Σ(R') tagged with its ψ value. Side A means
/// ψ(F) ∉ F, side B means ψ(F) ∈ F.
struct LayerClassification {
    Face face;
    int psi;
    LayerSide side;
    bool operator==(const LayerClassification&) const = default;
};

/// ψ(F): the <_d-minimum of { x : x <_i max_i(F) for every i < d }. Defined
/// exactly for faces of Σ(R) that are not faces of Σ(R'); anything else
/// throws std::domain_error. Requires d >= 2.
int psi(Face f, const Representation& r);

/// Tags every face of Σ(R) \ Σ(R') with its ψ value and A/B side. Requires
/// d >= 2.
std::vector<LayerClassification> classify_layer(const Representation& r);

/// The layer's complete matching: one pair (F ∪ {ψ(F)}, F) per A-side face.
/// Requires d >= 2. Coverage and covering-pair failures throw
/// std::logic_error; they cannot occur unless the implementation is wrong.
MorseMatching layer_matching(const Representation& r);

/// Complete acyclic matching of the whole face poset of Σ(R): the base pair
/// ({m1}, ∅) of the 1-order prefix plus one layer matching per further order.
MorseMatching build_matching(const Representation& r);

/// Independent verdicts on a claimed matching. Acyclicity is decided two
/// ways: cycle detection on the Hasse digraph with matched arcs reversed,
/// and the chain characterization on matched arcs (no cyclic sequence
/// m_1..m_k with every (u(m_{i+1}), d(m_i)) a Hasse arc). For a genuine
/// matching the two verdicts always agree.
struct MatchingReport {
    bool pairs_are_arcs = false;
    bool disjoint = false;
    bool complete = false;
    bool acyclic_reversal = false;
    bool acyclic_chain = false;
    std::string detail;  // first failure, empty when ok()

    bool matching() const { return pairs_are_arcs && disjoint; }
    bool acyclic() const { return acyclic_reversal && acyclic_chain; }
    bool checkers_agree() const { return acyclic_reversal == acyclic_chain; }
    bool ok() const { return matching() && complete && acyclic(); }
};

MatchingReport verify_matching(const HasseDiagram& h, const MorseMatching& m);

}  // namespace supsec
