#include "supsec/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace supsec {

namespace {

struct Line {
    int number;  // 1-based
    std::vector<std::string> tokens;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        ++number;
        std::istringstream ss{std::string(line)};
        std::vector<std::string> tokens;
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (!tokens.empty() && tokens.front()[0] != '#') out.push_back({number, std::move(tokens)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

}  // namespace

Representation parse_representation(std::string_view text) {
    const std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw parse_error("no permutation lines");

    const std::vector<std::string>& names = lines.front().tokens;
    if (names.size() > static_cast<std::size_t>(kMaxGroundSize))
        throw parse_error("more than " + std::to_string(kMaxGroundSize) + " elements",
                          lines.front().number);
    std::unordered_map<std::string, int> ids;
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!ids.emplace(names[i], static_cast<int>(i)).second)
            throw parse_error("repeated token '" + names[i] + "'", lines.front().number);

    std::vector<LinearOrder> orders;
    orders.reserve(lines.size());
    for (const Line& line : lines) {
        if (line.tokens.size() != names.size())
            throw parse_error("expected " + std::to_string(names.size()) + " tokens, got " +
                                  std::to_string(line.tokens.size()),
                              line.number);
        std::vector<int> seq;
        std::vector<char> seen(names.size(), 0);
        seq.reserve(names.size());
        for (const std::string& t : line.tokens) {
            auto it = ids.find(t);
            if (it == ids.end()) throw parse_error("unknown token '" + t + "'", line.number);
            if (seen[static_cast<std::size_t>(it->second)])
                throw parse_error("repeated token '" + t + "'", line.number);
            seen[static_cast<std::size_t>(it->second)] = 1;
            seq.push_back(it->second);
        }
        orders.push_back(LinearOrder::from_sequence(seq));
    }
    return Representation(names, std::move(orders));
}

std::string print_representation(const Representation& r) {
    std::string out;
    for (const LinearOrder& o : r.orders()) {
        bool first = true;
        for (int v : o.sequence()) {
            if (!first) out += ' ';
            first = false;
            out += r.name(v);
        }
        out += '\n';
    }
    return out;
}

std::string face_to_string(Face f, std::span<const std::string> names) {
    std::string s = "{";
    bool first = true;
    for (int v : f.members()) {
        if (!first) s += ',';
        first = false;
        s += names[static_cast<std::size_t>(v)];
    }
    return s + "}";
}

std::string face_to_string(Face f, const Representation& r) {
    return face_to_string(f, r.names());
}

namespace {

using nlohmann::json;

std::vector<std::string> face_names(Face f, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (int v : f.members()) out.push_back(names[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

json render(const std::vector<std::string>& sorted_names, const SimplicialComplex& cx,
            bool all_faces) {
    std::vector<std::vector<std::string>> facets;
    for (Face f : cx.facets()) facets.push_back(face_names(f, sorted_names));
    std::sort(facets.begin(), facets.end());
    json out;
    out["vertices"] = sorted_names;
    out["facets"] = facets;
    if (all_faces) {
        std::vector<std::vector<std::string>> faces;
        for (Face f : cx.faces()) faces.push_back(face_names(f, sorted_names));
        std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        out["faces"] = faces;
    }
    return out;
}

}  // namespace

NamedComplex parse_complex(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw parse_error("expected an object with \"vertices\" and \"facets\"");

    NamedComplex nc;
    if (!j["vertices"].is_array()) throw parse_error("\"vertices\" must be an array");
    for (const json& v : j["vertices"]) {
        if (!v.is_string()) throw parse_error("vertex names must be strings");
        nc.names.push_back(v.get<std::string>());
    }
    if (nc.names.size() > static_cast<std::size_t>(kMaxGroundSize))
        throw parse_error("more than " + std::to_string(kMaxGroundSize) + " vertices");
    for (std::size_t i = 1; i < nc.names.size(); ++i)
        if (nc.names[i - 1] >= nc.names[i])
            throw parse_error("vertices must be sorted and unique");

    std::unordered_map<std::string, int> ids;
    for (std::size_t i = 0; i < nc.names.size(); ++i) ids.emplace(nc.names[i], static_cast<int>(i));

    if (!j["facets"].is_array()) throw parse_error("\"facets\" must be an array");
    std::vector<Face> facets;
    std::vector<std::vector<std::string>> lists;
    for (const json& jf : j["facets"]) {
        if (!jf.is_array()) throw parse_error("each facet must be an array of names");
        std::vector<std::string> list;
        Face f;
        for (const json& v : jf) {
            if (!v.is_string()) throw parse_error("vertex names must be strings");
            const std::string name = v.get<std::string>();
            auto it = ids.find(name);
            if (it == ids.end()) throw parse_error("facet uses unknown vertex '" + name + "'");
            f = f.with(it->second);
            list.push_back(name);
        }
        for (std::size_t i = 1; i < list.size(); ++i)
            if (list[i - 1] >= list[i]) throw parse_error("facet names must be sorted and unique");
        if (!lists.empty() && lists.back() > list)
            throw parse_error("facets must be sorted lexicographically");
        lists.push_back(std::move(list));
        facets.push_back(f);
    }
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t k = 0; k < facets.size(); ++k)
            if (i != k && facets[i].subset_of(facets[k]))
                throw parse_error("facets must be pairwise incomparable");

    nc.complex = SimplicialComplex::closure_of(facets);
    return nc;
}

std::string complex_to_json(const NamedComplex& nc, bool all_faces) {
    return render(nc.names, nc.complex, all_faces).dump(2) + "\n";
}

std::string complex_to_json(const SimplicialComplex& cx, const Representation& r, bool all_faces) {
    // ComplexFile wants sorted vertices; remap faces from declaration ids
    std::vector<std::string> sorted_names = r.names();
    std::sort(sorted_names.begin(), sorted_names.end());
    std::vector<int> new_id(sorted_names.size());
    for (std::size_t i = 0; i < sorted_names.size(); ++i)
        new_id[static_cast<std::size_t>(*r.id_of(sorted_names[i]))] = static_cast<int>(i);
    std::vector<Face> remapped;
    remapped.reserve(cx.size());
    for (Face f : cx.faces()) {
        Face g;
        for (int v : f.members()) g = g.with(new_id[static_cast<std::size_t>(v)]);
        remapped.push_back(g);
    }
    return render(sorted_names, SimplicialComplex::from_faces(std::move(remapped)), all_faces)
               .dump(2) +
           "\n";
}

std::string dot_export(const HasseDiagram& h, const MorseMatching& m, const Representation& r) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> matched;
    matched.reserve(m.pairs.size());
    for (const MatchPair& p : m.pairs) matched.emplace_back(p.upper.bits, p.lower.bits);
    std::sort(matched.begin(), matched.end());

    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (Face f : h.nodes) out += "  \"" + face_to_string(f, r) + "\";\n";
    for (const HasseArc& a : h.arcs) {
        const std::string u = face_to_string(a.upper, r);
        const std::string l = face_to_string(a.lower, r);
        if (std::binary_search(matched.begin(), matched.end(),
                               std::make_pair(a.upper.bits, a.lower.bits)))
            out += "  \"" + l + "\" -> \"" + u + "\" [penwidth=2, color=crimson];\n";
        else
            out += "  \"" + u + "\" -> \"" + l + "\";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace supsec
