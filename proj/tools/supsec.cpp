#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "supsec/collapse.hpp"
#include "supsec/gen.hpp"
#include "supsec/invariants.hpp"
#include "supsec/io.hpp"
#include "supsec/morse.hpp"
#include "supsec/search.hpp"
#include "supsec/supremum.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw supsec::parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace supsec;

    CLI::App app{"supremum sections of d-representations: sections, matchings, collapses"};
    app.require_subcommand(1);

    std::string rep_path, cx_path, dot_path;
    bool all_faces = false, exact = false;
    std::uint64_t budget = 1'000'000;
    std::uint64_t seed = 0;
    int n = 1, d = 1, extra = 0;

    CLI::App* sigma_cmd = app.add_subcommand("sigma", "print the supremum section as JSON");
    sigma_cmd->add_option("rep-file", rep_path, "representation file")->required();
    sigma_cmd->add_flag("--all-faces", all_faces, "list every face, not just facets");

    CLI::App* matching_cmd =
        app.add_subcommand("matching", "build and verify the complete acyclic matching");
    matching_cmd->add_option("rep-file", rep_path, "representation file")->required();
    matching_cmd->add_option("--dot", dot_path, "write the Hasse diagram as DOT");

    CLI::App* collapse_cmd =
        app.add_subcommand("collapse", "extract and replay the collapse sequence");
    collapse_cmd->add_option("rep-file", rep_path, "representation file")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full invariant report");
    verify_cmd->add_option("rep-file", rep_path, "representation file")->required();

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force collapsibility of a complex file");
    oracle_cmd->add_option("complex-file", cx_path, "complex file (JSON)")->required();
    oracle_cmd->add_option("--budget", budget, "state budget before answering Unknown");

    CLI::App* search_cmd =
        app.add_subcommand("search", "find a representation whose section fits a complex");
    search_cmd->add_option("complex-file", cx_path, "complex file (JSON)")->required();
    search_cmd->add_option("--d", d, "number of orders")->required()->check(CLI::PositiveNumber);
    search_cmd->add_option("--extra", extra, "auxiliary elements z0..")
        ->check(CLI::NonNegativeNumber);
    CLI::Option* seed_opt =
        search_cmd->add_option("--seed", seed, "sample random tuples with this seed");
    search_cmd->add_flag("--exact", exact, "require equality instead of containment");

    CLI::App* random_cmd = app.add_subcommand("random", "emit a seeded random representation");
    random_cmd->add_option("--n", n, "ground set size")
        ->required()
        ->check(CLI::Range(1, kMaxGroundSize));
    random_cmd->add_option("--d", d, "number of orders")->required()->check(CLI::PositiveNumber);
    random_cmd->add_option("--seed", seed, "generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (sigma_cmd->parsed()) {
            const Representation r = parse_representation(slurp(rep_path));
            std::cout << complex_to_json(supremum_section(r), r, all_faces);
            return 0;
        }

        if (matching_cmd->parsed()) {
            const Representation r = parse_representation(slurp(rep_path));
            const SimplicialComplex sigma = supremum_section(r);
            const HasseDiagram hasse = hasse_diagram(sigma);
            const MorseMatching m = build_matching(r);
            const MatchingReport rep = verify_matching(hasse, m);
            if (!rep.ok()) {
                std::cerr << "matching verification failed: " << rep.detail << '\n';
                return 1;
            }
            for (const MatchPair& p : m.pairs)
                std::cout << face_to_string(p.upper, r) << " <- " << face_to_string(p.lower, r)
                          << '\n';
            if (!dot_path.empty()) {
                std::ofstream out(dot_path, std::ios::binary);
                if (!out) {
                    std::cerr << "cannot write '" << dot_path << "'\n";
                    return 1;
                }
                out << dot_export(hasse, m, r);
            }
            return 0;
        }

        if (collapse_cmd->parsed()) {
            const Representation r = parse_representation(slurp(rep_path));
            const SimplicialComplex sigma = supremum_section(r);
            std::string stage = "matching construction";
            try {
                const MorseMatching m = build_matching(r);
                stage = "extraction";
                const Extraction ex = extract_collapse_sequence(sigma, m);
                stage = "replay";
                const SimplicialComplex end = replay(sigma, ex.seq);
                if (!end.is_point()) {
                    std::cerr << "replay did not reach a point\n";
                    return 1;
                }
                for (std::size_t i = 0; i < ex.seq.steps.size(); ++i)
                    std::cout << i + 1 << ": " << face_to_string(ex.seq.steps[i].free, r) << " -> "
                              << face_to_string(ex.seq.steps[i].facet, r) << '\n';
                std::cout << "terminal: " << face_to_string(ex.terminal.upper, r) << " <- "
                          << face_to_string(ex.terminal.lower, r) << '\n';
                return 0;
            } catch (const std::exception& e) {
                std::cerr << "collapse failed during " << stage << ": " << e.what() << '\n';
                return 1;
            }
        }

        if (verify_cmd->parsed()) {
            const Representation r = parse_representation(slurp(rep_path));
            bool ok = true;
            for (const CheckResult& c : run_invariant_suite(r)) {
                ok = ok && c.passed;
                std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
                std::cout << '\n';
            }
            return ok ? 0 : 1;
        }

        if (oracle_cmd->parsed()) {
            const NamedComplex nc = parse_complex(slurp(cx_path));
            const OracleResult res = is_collapsible_bruteforce(nc.complex, budget);
            switch (res.status) {
                case Collapsibility::Yes: std::cout << "status: Yes\n"; break;
                case Collapsibility::No: std::cout << "status: No\n"; break;
                case Collapsibility::Unknown: std::cout << "status: Unknown\n"; break;
            }
            std::cout << "states visited: " << res.states_visited << '\n';
            if (res.status == Collapsibility::Yes)
                for (std::size_t i = 0; i < res.witness.steps.size(); ++i)
                    std::cout << i + 1 << ": " << face_to_string(res.witness.steps[i].free, nc.names)
                              << " -> " << face_to_string(res.witness.steps[i].facet, nc.names)
                              << '\n';
            return 0;
        }

        if (search_cmd->parsed()) {
            const NamedComplex nc = parse_complex(slurp(cx_path));
            SearchOptions opts;
            opts.d = d;
            opts.extra = extra;
            opts.exact = exact;
            if (seed_opt->count()) opts.seed = seed;
            const SearchResult res = search_representation(nc, opts);
            if (!res.witness) {
                std::cout << "not found\n";
                return 3;
            }
            std::cout << print_representation(*res.witness);
            return 0;
        }

        if (random_cmd->parsed()) {
            std::cout << print_representation(random_representation(n, d, seed));
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " (line " << e.line << ")";
        std::cerr << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;  // unreachable: require_subcommand(1)
}
