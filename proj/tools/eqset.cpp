// eqset: decide linear Diophantine systems over the naturals, run EDT0L
// queries, and encode word equations as polynomial systems.
//
// Exit codes are uniform across subcommands: 0 for a positive decision,
// 1 for a negative one, 2 for malformed input.

#include "eqset/bridge.hpp"
#include "eqset/endo.hpp"
#include "eqset/io.hpp"
#include "eqset/lindio.hpp"
#include "eqset/poly.hpp"
#include "eqset/wordeq.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using eqset::Int;
using eqset::IntVec;
using nlohmann::json;

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw eqset::io::ParseError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw eqset::io::ParseError("input is not valid JSON");
    return j;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw eqset::io::ParseError("cannot write file '" + path + "'");
    out << content;
}

std::string render_vec(const IntVec& v) { return v.to_string(); }

int run_lindio(const std::string& input, std::optional<long long> bound,
               const std::string& format, const std::string& dot_path) {
    eqset::LinearSystem system = eqset::io::linear_system_from_json(parse_json(read_input(input)));
    eqset::lindio::NormalizedSystem normalized = eqset::lindio::normalize_system(system);
    eqset::lindio::AffineAutomaton automaton =
        eqset::lindio::build_solution_automaton(normalized.system);

    eqset::lindio::SolutionSetReport report;
    report.solvable = eqset::lindio::is_solvable(automaton);
    report.infinite = eqset::lindio::is_infinite(automaton, normalized.system);
    if (report.solvable)
        if (auto w = eqset::lindio::min_norm_solution(automaton))
            report.witness = normalized.project(*w);

    std::vector<IntVec> solutions;
    if (bound) {
        for (const auto& x : eqset::lindio::enumerate_solutions(automaton, Int(*bound)))
            solutions.push_back(normalized.project(x));
        std::sort(solutions.begin(), solutions.end());
        solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
    }

    if (!dot_path.empty()) write_file(dot_path, eqset::io::affine_automaton_to_dot(automaton));

    if (format == "dot") {
        std::cout << eqset::io::affine_automaton_to_dot(automaton);
        return report.solvable ? exit_yes : exit_no;
    }
    if (format == "json") {
        json out;
        out["solvable"] = report.solvable;
        out["infinite"] = report.infinite;
        out["witness"] = report.witness ? eqset::io::vec_to_json(*report.witness) : json(nullptr);
        if (bound) {
            out["bound"] = *bound;
            out["solutions"] = json::array();
            for (const auto& x : solutions) out["solutions"].push_back(eqset::io::vec_to_json(x));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "solvable: " << (report.solvable ? "true" : "false") << "\n";
        std::cout << "infinite: " << (report.infinite ? "true" : "false") << "\n";
        if (report.witness) std::cout << "witness: " << render_vec(*report.witness) << "\n";
        if (bound) {
            std::cout << "solutions (coordinates <= " << *bound << "): " << solutions.size()
                      << "\n";
            for (const auto& x : solutions) std::cout << "  " << render_vec(x) << "\n";
        }
    }
    return report.solvable ? exit_yes : exit_no;
}

int run_wordeq_solve(const std::string& equation, long long cap, const std::string& format) {
    eqset::wordeq::WordEquation eq = eqset::wordeq::parse_equation(equation);
    auto solutions = eqset::wordeq::brute_force_wordeq(eq, static_cast<std::size_t>(cap));
    if (format == "json") {
        json out;
        out["cap"] = cap;
        out["solutions"] = json::array();
        for (const auto& sub : solutions) {
            json one;
            for (const auto& [var, image] : sub.images) one[std::string(1, var)] = image;
            out["solutions"].push_back(std::move(one));
        }
        if (solutions.empty())
            out["caveat"] = "no solution with images up to the cap; not a proof of unsolvability";
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& sub : solutions) {
            std::string line;
            for (const auto& [var, image] : sub.images) {
                if (!line.empty()) line += " ";
                line += std::string(1, var) + "=" + image;
            }
            std::cout << (line.empty() ? "(empty substitution)" : line) << "\n";
        }
        if (solutions.empty())
            std::cout << "no solution with images up to length " << cap
                      << " (not a proof of unsolvability)\n";
    }
    return solutions.empty() ? exit_no : exit_yes;
}

int run_wordeq_encode(const std::string& equation, bool single, const std::string& format) {
    eqset::wordeq::WordEquation eq = eqset::wordeq::parse_equation(equation);
    eqset::wordeq::PolynomialSystem ps = eqset::wordeq::encode_equation(eq);
    if (single) ps = eqset::wordeq::to_single_equation(ps);
    if (format == "json")
        std::cout << eqset::io::poly_system_to_json(ps).dump(2) << "\n";
    else
        std::cout << ps.to_text();
    return exit_yes;
}

int run_wordeq_check(const std::string& equation, bool single, const std::string& assign_path) {
    eqset::wordeq::WordEquation eq = eqset::wordeq::parse_equation(equation);
    eqset::wordeq::PolynomialSystem ps = eqset::wordeq::encode_equation(eq);
    if (single) ps = eqset::wordeq::to_single_equation(ps);
    auto assignment = eqset::io::assignment_from_json(parse_json(read_input(assign_path)));
    bool ok;
    try {
        ok = eqset::wordeq::eval_poly_system(ps, assignment);
    } catch (const std::invalid_argument& e) {
        throw eqset::io::ParseError(e.what());
    }
    std::cout << "satisfied: " << (ok ? "true" : "false") << "\n";
    return ok ? exit_yes : exit_no;
}

int run_edt0l(const std::string& action, const std::string& input, long long cap,
              long long depth_cap, const std::string& format, const std::string& dot_path) {
    eqset::endo::EDT0LSystem sys = eqset::io::edt0l_from_json(parse_json(read_input(input)));
    if (!dot_path.empty())
        write_file(dot_path, eqset::io::endo_automaton_to_dot(sys.automaton.trimmed()));
    if (format == "dot") {
        std::cout << eqset::io::endo_automaton_to_dot(sys.automaton.trimmed());
        return exit_yes;
    }

    if (action == "empty") {
        bool empty = eqset::endo::edt0l_is_empty(sys);
        if (format == "json")
            std::cout << json({{"empty", empty}}).dump(2) << "\n";
        else
            std::cout << "empty: " << (empty ? "true" : "false") << "\n";
        return empty ? exit_yes : exit_no;
    }
    if (action == "infinite") {
        bool infinite = eqset::endo::edt0l_is_language_infinite(sys);
        if (format == "json")
            std::cout << json({{"infinite", infinite}}).dump(2) << "\n";
        else
            std::cout << "infinite: " << (infinite ? "true" : "false") << "\n";
        return infinite ? exit_yes : exit_no;
    }

    eqset::endo::EnumerationResult result;
    try {
        result = eqset::endo::edt0l_enumerate(sys, static_cast<std::size_t>(cap),
                                              static_cast<std::size_t>(depth_cap));
    } catch (const std::runtime_error& e) {
        throw eqset::io::ParseError(e.what());
    }

    if (action == "enumerate") {
        if (format == "json") {
            json out;
            out["cap"] = cap;
            out["truncated"] = result.truncated;
            out["words"] = json::array();
            for (const auto& w : result.words) out["words"].push_back(w);
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& w : result.words) std::cout << w << "\n";
            if (result.truncated) std::cout << "truncated: true\n";
        }
        return result.words.empty() ? exit_no : exit_yes;
    }

    // tuples
    char marker = sys.automaton.alphabet().marker().value_or('#');
    if (format == "json") {
        json out;
        out["cap"] = cap;
        out["truncated"] = result.truncated;
        out["tuples"] = json::array();
        for (const auto& w : result.words) {
            json t = json::array();
            for (const auto& field : eqset::endo::split_tuple(w, marker)) t.push_back(field);
            out["tuples"].push_back(std::move(t));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& w : result.words) {
            auto fields = eqset::endo::split_tuple(w, marker);
            std::string line;
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (i) line += "\t";
                line += fields[i];
            }
            std::cout << line << "\n";
        }
        if (result.truncated) std::cout << "truncated: true\n";
    }
    return result.words.empty() ? exit_no : exit_yes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solution sets of linear Diophantine systems over the naturals, "
                 "EDT0L language queries, and word-equation encodings"};
    app.require_subcommand(1);

    // lindio
    auto* lindio = app.add_subcommand("lindio", "Decide A x = c over the naturals");
    std::string lin_input = "-";
    std::optional<long long> lin_bound;
    std::string lin_format = "text", lin_dot;
    lindio->add_option("input", lin_input, "JSON file with {\"A\": [[..]], \"c\": [..]} ('-' for stdin)");
    lindio->add_option("--bound", lin_bound, "also enumerate solutions with coordinates <= bound")
        ->check(CLI::NonNegativeNumber);
    lindio->add_option("--format", lin_format, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    lindio->add_option("--emit-dot", lin_dot, "write the trimmed automaton as DOT");

    // wordeq
    auto* wordeq = app.add_subcommand("wordeq", "Word equations over constants a-z, variables A-Z");
    wordeq->require_subcommand(1);
    std::string weq_equation;
    long long weq_cap = 3;
    bool weq_single = false;
    std::string weq_format = "text", weq_assign;

    auto* weq_solve = wordeq->add_subcommand("solve", "brute-force solutions up to an image length cap");
    weq_solve->add_option("equation", weq_equation, "e.g. \"abX=Yba\"")->required();
    weq_solve->add_option("--cap", weq_cap, "max image length per variable")
        ->check(CLI::NonNegativeNumber);
    weq_solve->add_option("--format", weq_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* weq_encode = wordeq->add_subcommand("encode", "emit the polynomial system of the equation");
    weq_encode->add_option("equation", weq_equation, "e.g. \"abX=Yba\"")->required();
    weq_encode->add_flag("--single", weq_single, "fold into a single equation via four squares");
    weq_encode->add_option("--format", weq_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* weq_check = wordeq->add_subcommand("check", "evaluate an assignment against the encoding");
    weq_check->add_option("equation", weq_equation, "e.g. \"abX=Yba\"")->required();
    weq_check->add_option("--assign", weq_assign, "JSON file {unknown: integer}")->required();
    weq_check->add_flag("--single", weq_single, "check against the single-equation form");

    // edt0l
    auto* edt0l = app.add_subcommand("edt0l", "Queries on an EDT0L system (JSON)");
    edt0l->require_subcommand(1);
    std::string edt_input = "-", edt_format = "text", edt_dot;
    long long edt_cap = 32, edt_depth = 16;
    std::string edt_action;
    for (const char* name : {"enumerate", "empty", "infinite", "tuples"}) {
        auto* sub = edt0l->add_subcommand(name);
        sub->add_option("input", edt_input, "EDT0L system JSON ('-' for stdin)");
        sub->add_option("--cap", edt_cap, "max word length to enumerate")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--depth-cap", edt_depth, "path length cap used when labels erase")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", edt_format, "text, json, or dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--emit-dot", edt_dot, "write the trimmed automaton as DOT");
        sub->callback([&edt_action, name] { edt_action = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_error;  // 0 covers --help and --version
    }

    try {
        if (lindio->parsed()) return run_lindio(lin_input, lin_bound, lin_format, lin_dot);
        if (wordeq->parsed()) {
            if (weq_solve->parsed()) return run_wordeq_solve(weq_equation, weq_cap, weq_format);
            if (weq_encode->parsed()) return run_wordeq_encode(weq_equation, weq_single, weq_format);
            return run_wordeq_check(weq_equation, weq_single, weq_assign);
        }
        return run_edt0l(edt_action, edt_input, edt_cap, edt_depth, edt_format, edt_dot);
    } catch (const eqset::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
}
