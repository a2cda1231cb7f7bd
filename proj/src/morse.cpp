#include "supsec/morse.hpp"

#include "supsec/supremum.hpp"

#include <algorithm>
#include <unordered_set>

namespace supsec {

namespace {

// Candidate set of psi over the k-order prefix:
//   { x : x <_i max_i(f) for every i in 0..k-2 }
// Empty exactly when f is a face of the (k-1)-prefix section, which is what
// makes psi well-defined on the layer. Returns the <_k-minimum candidate.
std::optional<int> psi_over_prefix(Face f, const Representation& r, int k) {
    std::uint64_t candidates = r.full().bits;
    for (int i = 0; i < k - 1; ++i) {
        const LinearOrder& o = r.order(i);
        candidates &= ~o.ge_rank_mask(o.max_rank(f)).bits;
    }
    if (candidates == 0) return std::nullopt;
    const LinearOrder& last = r.order(k - 1);
    int best = -1;
    for (std::uint64_t m = candidates; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (best < 0 || last.less(v, best)) best = v;
    }
    return best;
}

struct PairKeyHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        std::uint64_t x = p.first * 0x9e3779b97f4a7c15ULL ^ p.second;
        x ^= x >> 32;
        x *= 0xd6e8feb86659fd93ULL;
        x ^= x >> 32;
        return static_cast<std::size_t>(x);
    }
};

using ArcSet = std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, PairKeyHash>;

bool digraph_acyclic(const std::vector<std::vector<int>>& adj) {
    enum : unsigned char { kWhite, kGrey, kBlack };
    std::vector<unsigned char> color(adj.size(), kWhite);
    // explicit stack: (node, index of next child to visit)
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < static_cast<int>(adj.size()); ++s) {
        if (color[static_cast<std::size_t>(s)] != kWhite) continue;
        color[static_cast<std::size_t>(s)] = kGrey;
        stack.push_back({s, 0});
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& out = adj[static_cast<std::size_t>(v)];
            if (next < out.size()) {
                int w = out[next++];
                if (color[static_cast<std::size_t>(w)] == kGrey) return false;
                if (color[static_cast<std::size_t>(w)] == kWhite) {
                    color[static_cast<std::size_t>(w)] = kGrey;
                    stack.push_back({w, 0});
                }
            } else {
                color[static_cast<std::size_t>(v)] = kBlack;
                stack.pop_back();
            }
        }
    }
    return true;
}

// Layer pairs between the sections of the k-prefix and the (k-1)-prefix.
// prefix must be the k-order prefix representation.
std::vector<MatchPair> layer_pairs(const SimplicialComplex& cur, const SimplicialComplex& prev,
                                   const Representation& prefix) {
    const int k = prefix.d();
    std::vector<Face> layer;
    for (Face f : cur.faces())
        if (!prev.contains(f)) layer.push_back(f);

    std::vector<MatchPair> pairs;
    std::unordered_set<std::uint64_t> covered;
    for (Face f : layer) {
        auto p = psi_over_prefix(f, prefix, k);
        if (!p) throw std::logic_error("psi undefined on a layer face");
        if (!f.contains(*p)) pairs.push_back({f.with(*p), f});
    }
    for (const MatchPair& pr : pairs) {
        if (pr.upper.size() != pr.lower.size() + 1 || !pr.lower.subset_of(pr.upper))
            throw std::logic_error("layer matching produced a non-covering pair");
        if (!cur.contains(pr.upper) || prev.contains(pr.upper))
            throw std::logic_error("layer matching left the layer");
        if (!covered.insert(pr.upper.bits).second || !covered.insert(pr.lower.bits).second)
            throw std::logic_error("layer matching covers a face twice");
    }
    if (covered.size() != layer.size())
        throw std::logic_error("layer matching does not cover the layer");
    return pairs;
}

void sort_pairs(std::vector<MatchPair>& pairs) {
    std::sort(pairs.begin(), pairs.end(), [](const MatchPair& a, const MatchPair& b) {
        if (a.lower != b.lower) return face_less(a.lower, b.lower);
        return face_less(a.upper, b.upper);
    });
}

}  // namespace

int psi(Face f, const Representation& r) {
    if (r.d() < 2) throw std::domain_error("psi requires at least two orders");
    if (!f.subset_of(r.full()))
        throw std::invalid_argument("face uses a vertex outside the ground set");
    if (!is_face(f, r)) throw std::domain_error("psi precondition: face not in the section");
    auto p = psi_over_prefix(f, r, r.d());
    if (!p)
        throw std::domain_error("psi precondition: face already in the section one order down");
    return *p;
}

std::vector<LayerClassification> classify_layer(const Representation& r) {
    if (r.d() < 2) throw std::domain_error("classify_layer requires at least two orders");
    SimplicialComplex cur = supremum_section(r);
    SimplicialComplex prev = supremum_section(drop_last_order(r));
    std::vector<LayerClassification> out;
    for (Face f : cur.faces()) {
        if (prev.contains(f)) continue;
        auto p = psi_over_prefix(f, r, r.d());
        if (!p) throw std::logic_error("psi undefined on a layer face");
        out.push_back({f, *p, f.contains(*p) ? LayerSide::B : LayerSide::A});
    }
    return out;
}

MorseMatching layer_matching(const Representation& r) {
    if (r.d() < 2) throw std::domain_error("layer_matching requires at least two orders");
    SimplicialComplex cur = supremum_section(r);
    SimplicialComplex prev = supremum_section(drop_last_order(r));
    MorseMatching m;
    m.pairs = layer_pairs(cur, prev, r);
    sort_pairs(m.pairs);
    return m;
}

MorseMatching build_matching(const Representation& r) {
    const int d = r.d();
    std::vector<SimplicialComplex> sections;
    sections.reserve(static_cast<std::size_t>(d));
    for (int k = 1; k <= d; ++k) sections.push_back(supremum_section(r.prefix(k)));

    // base case: the 1-order section is {∅, {m1}}
    const Face m1 = Face{}.with(r.order(0).minimum());
    if (!(sections[0].size() == 2 && sections[0].contains(Face{}) && sections[0].contains(m1)))
        throw std::logic_error("1-order section is not {∅, {m1}}");

    MorseMatching m;
    m.pairs.push_back({m1, Face{}});
    for (int k = 2; k <= d; ++k) {
        auto layer = layer_pairs(sections[static_cast<std::size_t>(k - 1)],
                                 sections[static_cast<std::size_t>(k - 2)], r.prefix(k));
        m.pairs.insert(m.pairs.end(), layer.begin(), layer.end());
    }
    sort_pairs(m.pairs);
    return m;
}

MatchingReport verify_matching(const HasseDiagram& h, const MorseMatching& m) {
    MatchingReport rep;
    auto fail = [&rep](const std::string& why) {
        if (rep.detail.empty()) rep.detail = why;
    };

    ArcSet arcs;
    arcs.reserve(h.arcs.size() * 2);
    for (const HasseArc& a : h.arcs) arcs.insert({a.upper.bits, a.lower.bits});

    rep.pairs_are_arcs = true;
    for (const MatchPair& p : m.pairs) {
        if (!arcs.contains({p.upper.bits, p.lower.bits})) {
            rep.pairs_are_arcs = false;
            fail("pair is not a Hasse arc");
            break;
        }
    }

    rep.disjoint = true;
    std::unordered_set<std::uint64_t> touched;
    for (const MatchPair& p : m.pairs) {
        if (!touched.insert(p.upper.bits).second || !touched.insert(p.lower.bits).second) {
            rep.disjoint = false;
            fail("a face appears in two pairs");
            break;
        }
    }

    rep.complete = touched.size() == h.nodes.size();
    for (Face f : h.nodes) {
        if (!rep.complete) break;
        if (!touched.contains(f.bits)) rep.complete = false;
    }
    if (!rep.complete) fail("matching does not cover every face");

    // (c1) cycle detection on the Hasse digraph with matched arcs reversed
    std::unordered_map<std::uint64_t, int> index;
    index.reserve(h.nodes.size() * 2);
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
        index.emplace(h.nodes[i].bits, static_cast<int>(i));
    ArcSet matched;
    for (const MatchPair& p : m.pairs) matched.insert({p.upper.bits, p.lower.bits});
    std::vector<std::vector<int>> adj(h.nodes.size());
    for (const HasseArc& a : h.arcs) {
        auto ui = index.find(a.upper.bits);
        auto li = index.find(a.lower.bits);
        if (ui == index.end() || li == index.end()) continue;
        if (matched.contains({a.upper.bits, a.lower.bits}))
            adj[static_cast<std::size_t>(li->second)].push_back(ui->second);
        else
            adj[static_cast<std::size_t>(ui->second)].push_back(li->second);
    }
    rep.acyclic_reversal = digraph_acyclic(adj);
    if (!rep.acyclic_reversal) fail("reversing the matched arcs creates a cycle");

    // (c2) chain characterization: arc m -> m' when (u(m'), d(m)) is a Hasse
    // arc; a directed cycle among matched arcs is exactly a bad sequence
    const std::size_t np = m.pairs.size();
    std::vector<std::vector<int>> chain(np);
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
            if (i == j) continue;
            if (arcs.contains({m.pairs[j].upper.bits, m.pairs[i].lower.bits}))
                chain[i].push_back(static_cast<int>(j));
        }
    }
    rep.acyclic_chain = digraph_acyclic(chain);
    if (!rep.acyclic_chain) fail("a cyclic sequence of matched arcs exists");

    return rep;
}

}  // namespace supsec
