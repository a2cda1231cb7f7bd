#include "supsec/invariants.hpp"

#include "supsec/collapse.hpp"
#include "supsec/morse.hpp"
#include "supsec/supremum.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace supsec {

namespace {

std::string face_ids(Face f) {
    std::string s = "{";
    bool first = true;
    for (int v : f.members()) {
        if (!first) s += ',';
        first = false;
        s += std::to_string(v);
    }
    return s + "}";
}

CheckResult run(std::string name, const std::function<std::string()>& body) {
    try {
        std::string detail = body();
        return {std::move(name), !detail.starts_with("FAIL:"), std::move(detail)};
    } catch (const std::exception& e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

std::string fail(const std::string& why) { return "FAIL: " + why; }

}  // namespace

std::vector<CheckResult> run_invariant_suite(const Representation& r) {
    std::vector<CheckResult> out;
    const SimplicialComplex sigma = supremum_section(r);

    out.push_back(run("downward_closure", [&] {
        for (Face f : sigma.faces())
            for (int v : f.members())
                if (!sigma.contains(f.without(v)))
                    return fail("face " + face_ids(f) + " present without " +
                                face_ids(f.without(v)));
        return std::string{};
    }));

    out.push_back(run("face_size_bound", [&] {
        for (Face f : sigma.faces())
            if (f.size() > r.d())
                return fail("face " + face_ids(f) + " exceeds " + std::to_string(r.d()) +
                            " elements");
        return std::string{};
    }));

    out.push_back(run("prefix_subcomplex", [&] {
        if (r.d() == 1) return std::string("vacuous: single order");
        for (int k = 1; k < r.d(); ++k) {
            const SimplicialComplex sub = supremum_section(r.prefix(k));
            const SimplicialComplex sup = supremum_section(r.prefix(k + 1));
            for (Face f : sub.faces())
                if (!sup.contains(f))
                    return fail("prefix " + std::to_string(k) + " face " + face_ids(f) +
                                " missing from prefix " + std::to_string(k + 1));
        }
        return std::string{};
    }));

    out.push_back(run("psi_pairing", [&] {
        if (r.d() == 1) return std::string("vacuous: single order");
        for (int k = 2; k <= r.d(); ++k) {
            const Representation rk = r.prefix(k);
            const LinearOrder& last = rk.order(k - 1);
            for (const LayerClassification& c : classify_layer(rk)) {
                if (c.side == LayerSide::A) {
                    const Face g = c.face.with(c.psi);
                    if (psi(g, rk) != c.psi)
                        return fail("psi not preserved by adding it, face " + face_ids(c.face));
                    if (!c.face.empty()) {
                        const int top =
                            last.sequence()[static_cast<std::size_t>(last.max_rank(c.face))];
                        if (!last.less(top, c.psi))
                            return fail("psi does not exceed the last-order maximum of " +
                                        face_ids(c.face));
                    }
                } else {
                    const Face f = c.face.without(c.psi);
                    if (psi(f, rk) != c.psi)
                        return fail("psi not preserved by removing it, face " + face_ids(c.face));
                }
            }
        }
        return std::string{};
    }));

    out.push_back(run("layer_bijection", [&] {
        if (r.d() == 1) return std::string("vacuous: single order");
        for (int k = 2; k <= r.d(); ++k) {
            const Representation rk = r.prefix(k);
            std::unordered_set<std::uint64_t> b_side, images;
            std::size_t a_count = 0;
            for (const LayerClassification& c : classify_layer(rk)) {
                if (c.side == LayerSide::B) {
                    b_side.insert(c.face.bits);
                } else {
                    ++a_count;
                    if (!images.insert(c.face.with(c.psi).bits).second)
                        return fail("two A-side faces share an image at prefix " +
                                    std::to_string(k));
                }
            }
            if (a_count != b_side.size() || images != b_side)
                return fail("A -> B map is not onto at prefix " + std::to_string(k));
        }
        return std::string{};
    }));

    out.push_back(run("layer_confinement", [&] {
        if (r.d() == 1) return std::string("vacuous: single order");
        for (int k = 2; k <= r.d(); ++k) {
            const Representation rk = r.prefix(k);
            const SimplicialComplex sub = supremum_section(r.prefix(k - 1));
            for (const MatchPair& p : layer_matching(rk).pairs)
                if (sub.contains(p.upper) || sub.contains(p.lower))
                    return fail("pair (" + face_ids(p.upper) + ", " + face_ids(p.lower) +
                                ") leaks into prefix " + std::to_string(k - 1));
            // arcs never climb out of the sub-section
            for (const HasseArc& a : hasse_diagram(supremum_section(rk)).arcs)
                if (sub.contains(a.upper) && !sub.contains(a.lower))
                    return fail("arc from " + face_ids(a.upper) + " leaves prefix " +
                                std::to_string(k - 1));
        }
        return std::string{};
    }));

    const MorseMatching matching = [&] {
        try {
            return build_matching(r);
        } catch (...) {
            return MorseMatching{};
        }
    }();
    const HasseDiagram hasse = hasse_diagram(sigma);

    out.push_back(run("matching_verdicts", [&] {
        const MatchingReport rep = verify_matching(hasse, matching);
        if (!rep.checkers_agree())
            return fail("acyclicity checkers disagree: reversal=" +
                        std::to_string(rep.acyclic_reversal) +
                        " chain=" + std::to_string(rep.acyclic_chain));
        if (!rep.ok()) return fail(rep.detail);
        if (matching.pairs.size() * 2 != sigma.size())
            return fail("pair count " + std::to_string(matching.pairs.size()) +
                        " does not cover " + std::to_string(sigma.size()) + " faces");
        return std::string{};
    }));

    out.push_back(run("extraction_replay", [&] {
        const Extraction ex = extract_collapse_sequence(sigma, matching);
        if (ex.seq.steps.size() + 1 != matching.pairs.size())
            return fail("step count " + std::to_string(ex.seq.steps.size()) +
                        " does not match pair count");
        const SimplicialComplex end = replay(sigma, ex.seq);
        if (!end.is_point() || !end.contains(ex.terminal.upper))
            return fail("replay does not end at the terminal point");
        return std::string{};
    }));

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.passed; });
}

}  // namespace supsec
