// End-to-end checks of the command-line binary. SUPSEC_BIN must point at it;
// ctest sets it from the build tree.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "supsec/io.hpp"
#include "supsec/supremum.hpp"

static int checks = 0;

#define REQUIRE(cond)                                                              \
    do {                                                                           \
        if (!(cond)) {                                                             \
            std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond); \
            std::exit(1);                                                          \
        }                                                                          \
        ++checks;                                                                  \
    } while (0)

namespace {

struct Run {
    int code;
    std::string out;
};

std::string g_bin;

Run run(const std::string& args) {
    const std::string cmd = "'" + g_bin + "' " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        std::perror("popen");
        std::exit(2);
    }
    std::string out;
    char buf[4096];
    std::size_t k;
    while ((k = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace

int main() {
    const char* bin = std::getenv("SUPSEC_BIN");
    if (!bin) {
        std::fprintf(stderr, "SUPSEC_BIN not set\n");
        return 2;
    }
    g_bin = bin;

    char tmpl[] = "/tmp/supsec_cli_XXXXXX";
    if (!mkdtemp(tmpl)) {
        std::perror("mkdtemp");
        return 2;
    }
    const std::string dir = tmpl;

    const std::string rep = dir + "/worked.rep";
    write_file(rep, "a b e d c\nc b a d e\ne d c b a\n");
    const std::string one = dir + "/one.rep";
    write_file(one, "a b c\n");
    const std::string bad = dir + "/bad.rep";
    write_file(bad, "a b c\na a c\n");
    const std::string two_tri = dir + "/two.cx";
    write_file(two_tri,
               R"({"vertices": ["a","b","c","d","e"], "facets": [["a","b","c"], ["c","d","e"]]})");
    const std::string hollow = dir + "/hollow.cx";
    write_file(hollow,
               R"({"vertices": ["a","b","c"], "facets": [["a","b"], ["a","c"], ["b","c"]]})");
    const std::string edge = dir + "/edge.cx";
    write_file(edge, R"({"vertices": ["a","b"], "facets": [["a","b"]]})");

    // --- sigma ------------------------------------------------------------
    {
        const Run r = run("sigma " + rep);
        REQUIRE(r.code == 0);
        const std::string want =
            "{\n"
            "  \"facets\": [\n    [\n      \"a\",\n      \"b\"\n    ],\n"
            "    [\n      \"b\",\n      \"c\",\n      \"d\"\n    ],\n"
            "    [\n      \"b\",\n      \"d\",\n      \"e\"\n    ]\n  ],\n"
            "  \"vertices\": [\n    \"a\",\n    \"b\",\n    \"c\",\n    \"d\",\n    \"e\"\n  ]\n"
            "}\n";
        REQUIRE(r.out == want);

        // byte-identical to the library rendering
        const supsec::Representation pr =
            supsec::parse_representation("a b e d c\nc b a d e\ne d c b a\n");
        REQUIRE(r.out == supsec::complex_to_json(supsec::supremum_section(pr), pr));

        const Run all = run("sigma --all-faces " + rep);
        REQUIRE(all.code == 0);
        REQUIRE(all.out.find("\"faces\"") != std::string::npos);

        const Run base = run("sigma " + one);
        REQUIRE(base.code == 0);
        REQUIRE(base.out ==
                "{\n"
                "  \"facets\": [\n    [\n      \"a\"\n    ]\n  ],\n"
                "  \"vertices\": [\n    \"a\",\n    \"b\",\n    \"c\"\n  ]\n"
                "}\n");
    }

    // --- parse and usage errors -> exit 2 -----------------------------------
    REQUIRE(run("sigma " + bad).code == 2);
    REQUIRE(run("sigma " + dir + "/missing.rep").code == 2);
    REQUIRE(run("sigma").code == 2);
    REQUIRE(run("frobnicate").code == 2);
    REQUIRE(run("").code == 2);
    REQUIRE(run("--help").code == 0);
    REQUIRE(run("oracle " + bad).code == 2);  // complex parser rejects it too

    // --- matching -----------------------------------------------------------
    {
        const Run r = run("matching " + rep);
        REQUIRE(r.code == 0);
        REQUIRE(r.out ==
                "{a} <- {}\n{a,b} <- {b}\n{b,e} <- {e}\n{b,d} <- {d}\n{b,c} <- {c}\n"
                "{b,e,d} <- {e,d}\n{b,d,c} <- {d,c}\n");

        const std::string dot = dir + "/hasse.dot";
        REQUIRE(run("matching --dot " + dot + " " + rep).code == 0);
        std::ifstream in(dot);
        REQUIRE(in.good());
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        REQUIRE(text.rfind("digraph", 0) == 0);
        std::size_t arrows = 0;
        for (std::size_t p = text.find(" -> "); p != std::string::npos;
             p = text.find(" -> ", p + 1))
            ++arrows;
        REQUIRE(arrows == 23);

        REQUIRE(run("matching --dot /nonexistent-dir/x.dot " + rep).code == 1);

        const Run point = run("matching " + one);
        REQUIRE(point.code == 0);
        REQUIRE(point.out == "{a} <- {}\n");
    }

    // --- collapse -------------------------------------------------------------
    {
        const Run r = run("collapse " + rep);
        REQUIRE(r.code == 0);
        REQUIRE(r.out ==
                "1: {e,d} -> {b,e,d}\n2: {e} -> {b,e}\n3: {d,c} -> {b,d,c}\n4: {d} -> {b,d}\n"
                "5: {c} -> {b,c}\n6: {b} -> {a,b}\nterminal: {a} <- {}\n");

        const Run p = run("collapse " + one);
        REQUIRE(p.code == 0);
        REQUIRE(p.out == "terminal: {a} <- {}\n");
    }

    // --- verify -----------------------------------------------------------------
    {
        const Run r = run("verify " + rep);
        REQUIRE(r.code == 0);
        std::size_t passes = 0;
        for (std::size_t p = r.out.find("[PASS]"); p != std::string::npos;
             p = r.out.find("[PASS]", p + 1))
            ++passes;
        REQUIRE(passes == 8);
        REQUIRE(r.out.find("[FAIL]") == std::string::npos);

        const Run degenerate = run("verify " + one);
        REQUIRE(degenerate.code == 0);
        REQUIRE(degenerate.out.find("vacuous") != std::string::npos);
        REQUIRE(run("verify " + bad).code == 2);
    }

    // --- oracle ---------------------------------------------------------------
    {
        const Run yes = run("oracle " + two_tri);
        REQUIRE(yes.code == 0);
        REQUIRE(yes.out.find("status: Yes\n") == 0);
        REQUIRE(yes.out.find("states visited:") != std::string::npos);
        REQUIRE(yes.out.find(" -> ") != std::string::npos);  // witness steps

        const Run no = run("oracle " + hollow);
        REQUIRE(no.code == 0);
        REQUIRE(no.out.find("status: No\n") == 0);

        const Run unknown = run("oracle --budget 0 " + two_tri);
        REQUIRE(unknown.code == 0);
        REQUIRE(unknown.out.find("status: Unknown\n") == 0);
    }

    // --- search ------------------------------------------------------------------
    {
        const Run found = run("search --d 2 " + edge);
        REQUIRE(found.code == 0);
        const supsec::Representation w = supsec::parse_representation(found.out);
        REQUIRE(w.d() == 2);
        REQUIRE(supsec::is_face(supsec::canonical_face(std::vector<std::string>{"a", "b"}, w), w));

        const Run exact = run("search --d 3 --exact " + two_tri);
        REQUIRE(exact.code == 0);
        REQUIRE(exact.out == "a b c d e\na c b e d\nd e c b a\n");

        const Run not_found = run("search --d 1 " + edge);
        REQUIRE(not_found.code == 3);
        REQUIRE(not_found.out == "not found\n");

        REQUIRE(run("search " + edge).code == 2);  // --d is required
    }

    // --- random --------------------------------------------------------------------
    {
        const Run a = run("random --n 5 --d 3 --seed 42");
        const Run b = run("random --n 5 --d 3 --seed 42");
        REQUIRE(a.code == 0);
        REQUIRE(a.out == b.out);
        const supsec::Representation w = supsec::parse_representation(a.out);
        REQUIRE(w.n() == 5);
        REQUIRE(w.d() == 3);

        REQUIRE(run("random --n 1 --d 1 --seed 7").out == "e0\n");
        REQUIRE(run("random --n 0 --d 1").code == 2);
        REQUIRE(run("random --d 1").code == 2);

        // generated representations sail through the full pipeline
        const std::string gen = dir + "/gen.rep";
        write_file(gen, a.out);
        REQUIRE(run("verify " + gen).code == 0);
        REQUIRE(run("collapse " + gen).code == 0);
    }

    std::printf("cli_tests: %d checks passed\n", checks);
    return 0;
}
