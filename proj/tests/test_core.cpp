#include "doctest.h"
#include "helpers.hpp"

using namespace supsec;
using th::F;

TEST_CASE("face bit operations") {
    Face f = F({0, 3, 5});
    CHECK(f.size() == 3);
    CHECK(f.contains(3));
    CHECK(!f.contains(1));
    CHECK(f.without(3) == F({0, 5}));
    CHECK(f.with(1) == F({0, 1, 3, 5}));
    CHECK(F({0, 3}).subset_of(f));
    CHECK(F({0, 3}).strict_subset_of(f));
    CHECK(!f.strict_subset_of(f));
    CHECK(f.subset_of(f));
    CHECK(f.unite(F({1})) == F({0, 1, 3, 5}));
    CHECK(Face{}.empty());
    CHECK(f.members() == std::vector<int>{0, 3, 5});
}

TEST_CASE("face encoding round-trips exhaustively on 16 elements") {
    for (std::uint64_t m = 0; m < (1u << 16); ++m) {
        Face f{m};
        Face back;
        for (int v : f.members()) back = back.with(v);
        REQUIRE(back == f);
    }
}

TEST_CASE("canonical face order: cardinality first, then bits") {
    CHECK(face_less(Face{}, F({0})));
    CHECK(face_less(F({5}), F({0, 1})));
    CHECK(face_less(F({0, 1}), F({0, 2})));
    CHECK(face_less(F({2}), F({3})));
    CHECK(!face_less(F({0, 2}), F({0, 2})));
}

TEST_CASE("linear order basics and validation") {
    LinearOrder o = LinearOrder::from_sequence(std::vector<int>{2, 0, 1});
    CHECK(o.size() == 3);
    CHECK(o.rank(2) == 0);
    CHECK(o.rank(0) == 1);
    CHECK(o.minimum() == 2);
    CHECK(o.less(2, 1));
    CHECK(!o.less(1, 0));
    CHECK(o.sequence() == std::vector<int>{2, 0, 1});
    CHECK(o == LinearOrder::from_ranks({1, 2, 0}));

    CHECK(o.max_rank(Face{}) == -1);
    CHECK(o.max_rank(F({2})) == 0);
    CHECK(o.max_rank(F({0, 2})) == 1);
    CHECK(o.max_rank(F({0, 1, 2})) == 2);

    CHECK(o.ge_rank_mask(0) == F({0, 1, 2}));
    CHECK(o.ge_rank_mask(1) == F({0, 1}));
    CHECK(o.ge_rank_mask(3) == Face{});
    CHECK(o.ge_rank_mask(-5) == F({0, 1, 2}));  // clamped
    CHECK(o.ge_rank_mask(99) == Face{});

    CHECK_THROWS_AS(LinearOrder::from_ranks({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder::from_ranks({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder::from_sequence(std::vector<int>{0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(LinearOrder::from_sequence(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("representation construction and validation") {
    const Representation r = th::worked_example();
    CHECK(r.n() == 5);
    CHECK(r.d() == 3);
    CHECK(r.name(0) == "a");
    CHECK(r.id_of("e") == 4);
    CHECK(!r.id_of("x").has_value());
    CHECK(r.full() == F({0, 1, 2, 3, 4}));

    const Representation p = r.prefix(2);
    CHECK(p.d() == 2);
    CHECK(p.n() == 5);
    CHECK(p.order(0) == r.order(0));
    CHECK(p.order(1) == r.order(1));

    auto seq = [](std::vector<int> s) { return LinearOrder::from_sequence(s); };
    CHECK_THROWS_AS(Representation({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Representation({"a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Representation({"a", "a"}, {seq({0, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(Representation({"a", "b"}, {seq({0})}), std::invalid_argument);

    std::vector<std::string> big;
    std::vector<int> ids;
    for (int i = 0; i < 65; ++i) {
        big.push_back("v" + std::to_string(i));
        ids.push_back(i);
    }
    CHECK_THROWS_AS(Representation(big, {seq(ids)}), std::invalid_argument);

    // 64 elements is the cap and must work, including the full-set mask
    big.pop_back();
    ids.pop_back();
    const Representation cap(big, {seq(ids)});
    CHECK(cap.full().size() == 64);
}

TEST_CASE("canonical_face resolves tokens as a set") {
    const Representation r = th::worked_example();
    CHECK(canonical_face(std::vector<std::string>{}, r) == Face{});
    CHECK(canonical_face(std::vector<std::string>{"b", "a"}, r) == F({0, 1}));
    CHECK(canonical_face(std::vector<std::string>{"a", "a"}, r) == F({0}));
    CHECK_THROWS_AS(canonical_face(std::vector<std::string>{"a", "x"}, r), parse_error);
}

TEST_CASE("simplicial complex validation and queries") {
    CHECK_THROWS_AS(SimplicialComplex::from_faces({F({}), F({0, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(SimplicialComplex::from_faces({F({0})}), std::invalid_argument);

    const SimplicialComplex edge = th::edge_complex();
    CHECK(edge.size() == 4);
    CHECK(edge.contains(F({0, 1})));
    CHECK(edge.contains(Face{}));
    CHECK(!edge.contains(F({2})));
    CHECK(edge.facets() == std::vector<Face>{F({0, 1})});

    // duplicates in input collapse
    CHECK(SimplicialComplex::from_faces({F({}), F({0}), F({0})}) == th::point_complex());

    CHECK(th::point_complex().is_point());
    CHECK(!edge.is_point());
    CHECK(!SimplicialComplex::from_faces({F({})}).is_point());
    CHECK(!SimplicialComplex::from_faces({F({}), F({0}), F({1})}).is_point());
    CHECK(!SimplicialComplex{}.is_point());

    const SimplicialComplex tri = th::hollow_triangle();
    CHECK(tri.facets() == std::vector<Face>{F({0, 1}), F({0, 2}), F({1, 2})});

    const SimplicialComplex closed = SimplicialComplex::closure_of(
        std::vector<Face>{F({0, 1, 2}), F({2, 3, 4})});
    CHECK(closed.size() == 14);
    CHECK(closed.contains(F({2, 4})));
    CHECK(!closed.contains(F({0, 3})));
}

TEST_CASE("hasse diagram has one arc per face member, exhaustive on 3 elements") {
    int downsets = 0;
    for (unsigned fam = 0; fam < 256; ++fam) {
        bool closed = true;
        for (unsigned s = 0; s < 8 && closed; ++s) {
            if (!(fam >> s & 1u)) continue;
            for (int v = 0; v < 3 && closed; ++v)
                if (s >> v & 1u) closed = (fam >> (s & ~(1u << v))) & 1u;
        }
        if (!closed) continue;
        ++downsets;
        std::vector<Face> faces;
        std::size_t want_arcs = 0;
        for (unsigned s = 0; s < 8; ++s) {
            if (!(fam >> s & 1u)) continue;
            faces.push_back(Face{s});
            want_arcs += static_cast<std::size_t>(Face{s}.size());
        }
        const HasseDiagram h = hasse_diagram(SimplicialComplex::from_faces(faces));
        REQUIRE(h.nodes.size() == faces.size());
        REQUIRE(h.arcs.size() == want_arcs);
        for (const HasseArc& a : h.arcs) {
            REQUIRE(a.lower.strict_subset_of(a.upper));
            REQUIRE(a.upper.size() == a.lower.size() + 1);
        }
    }
    CHECK(downsets == 20);  // Dedekind number M(3)
}

TEST_CASE("hasse arcs are sorted canonically") {
    const HasseDiagram h = hasse_diagram(th::hollow_triangle());
    for (std::size_t i = 1; i < h.arcs.size(); ++i) {
        const bool ordered =
            face_less(h.arcs[i - 1].upper, h.arcs[i].upper) ||
            (h.arcs[i - 1].upper == h.arcs[i].upper &&
             face_less(h.arcs[i - 1].lower, h.arcs[i].lower));
        REQUIRE(ordered);
    }
}
