#include "supsec/collapse.hpp"

#include "supsec/morse.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace supsec {

namespace {

// Free-face test against a precomputed facet list. Returns the unique
// containing facet when f is free.
std::optional<Face> unique_facet(Face f, const std::vector<Face>& facets) {
    if (f.empty()) return std::nullopt;
    int count = 0;
    Face container{};
    for (Face g : facets) {
        if (f == g) return std::nullopt;  // maximal
        if (f.strict_subset_of(g)) {
            if (++count > 1) return std::nullopt;
            container = g;
        }
    }
    if (count != 1) return std::nullopt;
    return container;
}

SimplicialComplex remove_up_set(const SimplicialComplex& cx, Face f) {
    std::vector<Face> rest;
    rest.reserve(cx.size());
    for (Face g : cx.faces())
        if (!f.subset_of(g)) rest.push_back(g);
    return SimplicialComplex::from_faces(std::move(rest));
}

}  // namespace

std::vector<CollapseStep> free_faces(const SimplicialComplex& cx) {
    const std::vector<Face> fcts = cx.facets();
    std::vector<CollapseStep> out;
    for (Face f : cx.faces()) {
        if (auto g = unique_facet(f, fcts)) out.push_back({f, *g});
    }
    return out;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& cx, Face f) {
    auto g = unique_facet(f, cx.facets());
    if (!g) throw std::domain_error("face is not a free face");
    return remove_up_set(cx, f);
}

Extraction extract_collapse_sequence(const SimplicialComplex& cx, const MorseMatching& m) {
    MatchingReport rep = verify_matching(hasse_diagram(cx), m);
    if (!rep.ok())
        throw std::invalid_argument("not a complete acyclic matching: " + rep.detail);

    const std::span<const Face> faces = cx.faces();
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(faces.size() * 2);
    for (std::size_t i = 0; i < faces.size(); ++i)
        index.emplace(faces[i].bits, static_cast<int>(i));

    // strict-superset counts drive the eligibility test: a matched pair
    // (G, F) collapses exactly when G is the only face left above F
    std::vector<int> sup_count(faces.size(), 0);
    std::vector<char> alive(faces.size(), 1);
    for (std::size_t i = 0; i < faces.size(); ++i)
        for (std::size_t j = 0; j < faces.size(); ++j)
            if (i != j && faces[i].strict_subset_of(faces[j])) ++sup_count[i];

    std::optional<MatchPair> terminal;
    std::vector<MatchPair> remaining;
    for (const MatchPair& p : m.pairs) {
        if (p.lower.empty())
            terminal = p;
        else
            remaining.push_back(p);
    }
    if (!terminal) throw std::logic_error("complete matching is missing the pair of ∅");

    auto drop = [&](Face f) {
        alive[static_cast<std::size_t>(index.at(f.bits))] = 0;
        for (std::size_t i = 0; i < faces.size(); ++i)
            if (alive[i] && faces[i].strict_subset_of(f)) --sup_count[i];
    };

    Extraction out;
    out.terminal = *terminal;
    out.seq.steps.reserve(remaining.size());
    while (!remaining.empty()) {
        std::size_t best = remaining.size();
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (sup_count[static_cast<std::size_t>(index.at(remaining[i].lower.bits))] != 1)
                continue;
            if (best == remaining.size() ||
                face_less(remaining[i].lower, remaining[best].lower))
                best = i;
        }
        if (best == remaining.size())
            throw std::logic_error("extraction is stuck; matching was not acyclic");
        MatchPair p = remaining[best];
        out.seq.steps.push_back({p.lower, p.upper});
        drop(p.lower);
        drop(p.upper);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

SimplicialComplex replay(SimplicialComplex cx, const CollapseSequence& s) {
    for (std::size_t k = 0; k < s.steps.size(); ++k) {
        const CollapseStep& step = s.steps[k];
        auto g = unique_facet(step.free, cx.facets());
        if (!g)
            throw replay_error("step " + std::to_string(k) + ": face is not free", k, step.free);
        if (*g != step.facet)
            throw replay_error("step " + std::to_string(k) + ": facet differs from the recorded one",
                               k, step.free);
        cx = remove_up_set(cx, step.free);
    }
    return cx;
}

namespace {

struct FacetKeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t w : v) {
            h ^= w;
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

enum class Probe { Found, Exhausted, Budget };

struct OracleState {
    std::uint64_t budget;
    std::uint64_t visited = 0;
    std::unordered_set<std::vector<std::uint64_t>, FacetKeyHash> dead;
    std::vector<CollapseStep> path;
};

Probe probe(const SimplicialComplex& cx, OracleState& st) {
    if (cx.is_point()) return Probe::Found;
    if (st.visited >= st.budget) return Probe::Budget;
    ++st.visited;

    std::vector<std::uint64_t> key;
    for (Face f : cx.facets()) key.push_back(f.bits);
    if (st.dead.contains(key)) return Probe::Exhausted;

    for (const CollapseStep& step : free_faces(cx)) {
        st.path.push_back(step);
        Probe r = probe(remove_up_set(cx, step.free), st);
        if (r == Probe::Found) return r;
        st.path.pop_back();
        if (r == Probe::Budget) return r;  // inconclusive: do not memoize
    }
    st.dead.insert(std::move(key));
    return Probe::Exhausted;
}

}  // namespace

OracleResult is_collapsible_bruteforce(const SimplicialComplex& cx, std::uint64_t budget) {
    if (cx.empty()) throw std::invalid_argument("oracle needs a nonempty complex");
    OracleState st;
    st.budget = budget;
    OracleResult out;
    switch (probe(cx, st)) {
        case Probe::Found:
            out.status = Collapsibility::Yes;
            out.witness.steps = std::move(st.path);
            break;
        case Probe::Exhausted:
            out.status = Collapsibility::No;
            break;
        case Probe::Budget:
            out.status = Collapsibility::Unknown;
            break;
    }
    out.states_visited = st.visited;
    return out;
}

}  // namespace supsec
