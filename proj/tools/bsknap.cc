#include <bsknap/error.hh>
#include <bsknap/instance_file.hh>
#include <bsknap/knapsack.hh>
#include <bsknap/oracle.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    using namespace bsknap;
    using json = nlohmann::ordered_json;

    enum Exit
    {
        ok = 0,
        parse_failure = 2,
        verification_failure = 3,
        resource_limit = 4,
    };

    struct Settings
    {
        std::string file;
        bool witness = false;
        bool verify = true;
        std::optional<std::uint64_t> oracle_bound;
        std::string dot_dir;
        bool stats = false;
        bool json_report = false;
        unsigned max_tracks = default_max_tracks;
    };

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot read '" + path + "'", 0);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto triple(const GroupElement & g) -> json
    {
        return json::array({g.t_exponent, g.coefficient.numerator.str(), g.coefficient.exponent});
    }

    auto dot_name(std::size_t index, const std::string & stage) -> std::string
    {
        auto n = std::to_string(index);
        return "stage_" + std::string(n.size() < 2 ? 2 - n.size() : 0, '0') + n + "_" + stage + ".dot";
    }

    auto run(const Settings & s) -> int
    {
        auto instance = parse_instance(read_file(s.file));

        SolveOptions options;
        options.max_tracks = s.max_tracks;
        std::size_t dot_index = 0;
        if (! s.dot_dir.empty()) {
            std::filesystem::create_directories(s.dot_dir);
            options.observer = [&](const std::string & stage, const Automaton & a,
                                   const std::vector<std::string> & tracks) {
                auto name = dot_name(dot_index++, stage);
                std::ofstream out(std::filesystem::path(s.dot_dir) / name);
                out << to_dot(a, stage, tracks);
            };
        }

        auto start = std::chrono::steady_clock::now();
        auto result = solve(instance, options);
        auto wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

        const bool sat = result.decision == Decision::Sat;
        bool verified = result.verified;
        if (sat && s.verify)
            verified = verify_witness(instance, result.exponents);

        std::optional<OracleOutcome> oracle;
        if (s.oracle_bound)
            oracle = brute_force(instance, *s.oracle_bound);
        const bool disagree = oracle && oracle->found && ! sat;

        std::cout << (sat ? "SAT" : "UNSAT") << '\n';

        if (s.json_report) {
            json report;
            report["decision"] = sat ? "SAT" : "UNSAT";
            report["q"] = instance.q;
            report["generators"] = json::array();
            for (const auto & g : instance.generators)
                report["generators"].push_back(triple(g));
            report["target"] = triple(instance.target);
            if (sat) {
                report["witness"] = result.exponents;
                report["chain"] = json::array();
                for (const auto & h : result.chain)
                    report["chain"].push_back({{"diagonal", h.diagonal.str()}, {"corner", h.corner.str()}});
            }
            else {
                report["witness"] = nullptr;
                report["chain"] = nullptr;
            }
            report["verified"] = sat && verified;
            report["stages"] = json::array();
            for (const auto & st : result.stages)
                report["stages"].push_back({{"stage", st.stage}, {"states", st.states},
                    {"transitions", st.transitions}, {"tracks", st.tracks}});
            if (oracle) {
                report["oracle"] = {{"bound", oracle->searched_bound},
                    {"found", oracle->found ? json(*oracle->found) : json(nullptr)}, {"agrees", ! disagree}};
            }
            report["wall_time_ms"] = wall_ms;
            std::cout << report.dump(2) << '\n';
        }
        else {
            if (s.witness && sat) {
                for (std::size_t i = 0; i < result.exponents.size(); ++i)
                    std::cout << "x" << i + 1 << " = " << result.exponents[i] << '\n';
                for (std::size_t i = 0; i < result.chain.size(); ++i)
                    std::cout << "h" << i << " = (" << result.chain[i].diagonal.str() << ", "
                              << result.chain[i].corner.str() << "; 0, 1)\n";
            }
            if (s.stats) {
                for (const auto & st : result.stages)
                    std::cout << "stage " << st.stage << ": " << st.states << " states, " << st.transitions
                              << " transitions, " << st.tracks << " tracks\n";
                std::cout << "wall time: " << wall_ms << " ms\n";
            }
            if (oracle) {
                std::cout << "oracle (bound " << oracle->searched_bound << "): ";
                if (oracle->found) {
                    std::cout << "found";
                    for (auto x : *oracle->found)
                        std::cout << ' ' << x;
                    std::cout << '\n';
                }
                else
                    std::cout << "none\n";
            }
        }

        if (sat && s.verify && ! verified) {
            std::cerr << "error: witness failed verification\n";
            return verification_failure;
        }
        if (disagree) {
            std::cerr << "error: oracle found a solution but the solver answered UNSAT\n";
            return verification_failure;
        }
        return ok;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Knapsack solver for Baumslag-Solitar groups BS(1,q)"};
    app.set_version_flag("--version", "bsknap 0.1.0");
    Settings s;

    // `solve` is the only command and the default one.
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i)
        args.emplace_back(argv[i]);
    if (! args.empty() && args.back() == "solve")
        args.pop_back();

    app.add_option("file", s.file, "instance file")->required();
    app.add_flag("--witness", s.witness, "print exponents and the h-chain");
    app.add_flag("--verify,!--no-verify", s.verify, "re-check the witness with group arithmetic (default on)");
    app.add_option("--oracle-bound", s.oracle_bound, "also run the bounded brute-force search and compare");
    app.add_option("--emit-dot", s.dot_dir, "write every pipeline automaton as DOT into this directory");
    app.add_flag("--stats", s.stats, "print automaton sizes per stage and wall time");
    app.add_flag("--json", s.json_report, "print a JSON report after the decision line");
    app.add_option("--max-tracks", s.max_tracks, "track cap for intermediate automata")
        ->check(CLI::Range(1u, 60u));

    try {
        app.parse(args);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e);
    }

    try {
        return run(s);
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse_failure;
    }
    catch (const ResourceLimit & e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return resource_limit;
    }
    catch (const InternalError & e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return verification_failure;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
