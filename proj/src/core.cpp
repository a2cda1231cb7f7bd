#include "supsec/core.hpp"

#include <algorithm>
#include <cctype>

namespace supsec {

std::vector<int> Face::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = bits; m; m &= m - 1)
        out.push_back(std::countr_zero(m));
    return out;
}

LinearOrder LinearOrder::from_ranks(std::vector<int> ranks) {
    const int n = static_cast<int>(ranks.size());
    if (n < 1 || n > kMaxGroundSize)
        throw std::invalid_argument("order size must be in 1.." + std::to_string(kMaxGroundSize));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int r : ranks) {
        if (r < 0 || r >= n || seen[static_cast<std::size_t>(r)])
            throw std::invalid_argument("ranks must be a bijection onto 0..n-1");
        seen[static_cast<std::size_t>(r)] = 1;
    }
    return LinearOrder(std::move(ranks));
}

LinearOrder LinearOrder::from_sequence(std::span<const int> min_to_max) {
    const int n = static_cast<int>(min_to_max.size());
    if (n < 1 || n > kMaxGroundSize)
        throw std::invalid_argument("order size must be in 1.." + std::to_string(kMaxGroundSize));
    std::vector<int> ranks(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        int v = min_to_max[static_cast<std::size_t>(r)];
        if (v < 0 || v >= n || ranks[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("sequence must be a permutation of 0..n-1");
        ranks[static_cast<std::size_t>(v)] = r;
    }
    return LinearOrder(std::move(ranks));
}

LinearOrder::LinearOrder(std::vector<int> ranks) : rank_(std::move(ranks)) {
    const std::size_t n = rank_.size();
    ge_mask_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
        // element v contributes to every threshold k <= rank(v)
        for (int k = 0; k <= rank_[v]; ++k)
            ge_mask_[static_cast<std::size_t>(k)] |= std::uint64_t{1} << v;
    }
}

Face LinearOrder::ge_rank_mask(int k) const {
    k = std::clamp(k, 0, size());
    return {ge_mask_[static_cast<std::size_t>(k)]};
}

int LinearOrder::minimum() const {
    for (int v = 0; v < size(); ++v)
        if (rank_[static_cast<std::size_t>(v)] == 0) return v;
    throw std::logic_error("order has no minimum");  // unreachable: rank is a bijection
}

std::vector<int> LinearOrder::sequence() const {
    std::vector<int> seq(rank_.size());
    for (int v = 0; v < size(); ++v)
        seq[static_cast<std::size_t>(rank_[static_cast<std::size_t>(v)])] = v;
    return seq;
}

int LinearOrder::max_rank(Face f) const {
    int best = -1;
    for (std::uint64_t m = f.bits; m; m &= m - 1)
        best = std::max(best, rank_[static_cast<std::size_t>(std::countr_zero(m))]);
    return best;
}

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (std::isspace(c)) return false;
    return true;
}

}  // namespace

Representation::Representation(std::vector<std::string> names, std::vector<LinearOrder> orders)
    : names_(std::move(names)), orders_(std::move(orders)) {
    const int n = static_cast<int>(names_.size());
    if (n < 1) throw std::invalid_argument("ground set must be nonempty");
    if (n > kMaxGroundSize)
        throw std::invalid_argument("ground set exceeds " + std::to_string(kMaxGroundSize) +
                                    " elements");
    if (orders_.empty()) throw std::invalid_argument("a representation needs at least one order");
    for (int v = 0; v < n; ++v) {
        const std::string& name = names_[static_cast<std::size_t>(v)];
        if (!valid_token(name))
            throw std::invalid_argument("element names must be nonempty tokens without whitespace");
        if (!ids_.emplace(name, v).second)
            throw std::invalid_argument("duplicate element name '" + name + "'");
    }
    for (const LinearOrder& o : orders_)
        if (o.size() != n)
            throw std::invalid_argument("every order must rank exactly the ground set");
}

std::optional<int> Representation::id_of(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

Representation Representation::prefix(int k) const {
    if (k < 1 || k > d()) throw std::invalid_argument("prefix length out of range");
    return Representation(names_, std::vector<LinearOrder>(orders_.begin(), orders_.begin() + k));
}

Face Representation::full() const {
    if (n() == kMaxGroundSize) return {~std::uint64_t{0}};
    return {(std::uint64_t{1} << n()) - 1};
}

Face canonical_face(std::span<const std::string> tokens, const Representation& r) {
    Face f;
    for (const std::string& t : tokens) {
        auto id = r.id_of(t);
        if (!id) throw parse_error("unknown element '" + t + "'");
        f = f.with(*id);
    }
    return f;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(), FaceLess{});
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex cx;
    cx.faces_ = std::move(faces);
    for (Face f : cx.faces_)
        for (std::uint64_t m = f.bits; m; m &= m - 1)
            if (!cx.contains(f.without(std::countr_zero(m))))
                throw std::invalid_argument("face family is not downward closed");
    return cx;
}

SimplicialComplex SimplicialComplex::closure_of(std::span<const Face> generators) {
    std::vector<Face> all;
    for (Face g : generators) {
        // enumerate all subsets of g
        std::uint64_t sub = g.bits;
        while (true) {
            all.push_back({sub});
            if (sub == 0) break;
            sub = (sub - 1) & g.bits;
        }
    }
    std::sort(all.begin(), all.end(), FaceLess{});
    all.erase(std::unique(all.begin(), all.end()), all.end());
    SimplicialComplex cx;
    cx.faces_ = std::move(all);
    return cx;
}

bool SimplicialComplex::contains(Face f) const {
    return std::binary_search(faces_.begin(), faces_.end(), f, FaceLess{});
}

std::vector<Face> SimplicialComplex::facets() const {
    std::vector<Face> out;
    for (Face f : faces_) {
        bool maximal = true;
        for (Face g : faces_) {
            if (f.strict_subset_of(g)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(f);
    }
    return out;
}

bool SimplicialComplex::is_point() const {
    return faces_.size() == 2 && faces_[0].empty() && faces_[1].size() == 1;
}

HasseDiagram hasse_diagram(const SimplicialComplex& cx) {
    HasseDiagram h;
    h.nodes.assign(cx.faces().begin(), cx.faces().end());
    for (Face f : h.nodes)
        for (std::uint64_t m = f.bits; m; m &= m - 1)
            h.arcs.push_back({f, f.without(std::countr_zero(m))});
    std::sort(h.arcs.begin(), h.arcs.end(), [](const HasseArc& a, const HasseArc& b) {
        if (a.upper != b.upper) return face_less(a.upper, b.upper);
        return face_less(a.lower, b.lower);
    });
    return h;
}

}  // namespace supsec
