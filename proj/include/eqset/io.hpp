#pragma once

// JSON and DOT serialization for the CLI.  Integers that do not fit the
// 53-bit safe range of lossy JSON readers are written as decimal strings;
// both forms are accepted on input.

#include "eqset/endo.hpp"
#include "eqset/ints.hpp"
#include "eqset/lindio.hpp"
#include "eqset/poly.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace eqset::io {

using nlohmann::json;

/// Malformed or schema-violating input; the message carries the JSON path.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const Int json_safe_max = (Int(1) << 53) - 1;

inline json int_to_json(const Int& v) {
    if (v <= json_safe_max && v >= -json_safe_max)
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline Int int_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const bool ok = !s.empty() && (s.size() > 1 || s[0] != '-') &&
                        s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos;
        if (!ok) throw ParseError(path + ": '" + s + "' is not a decimal integer");
        return Int(s);
    }
    throw ParseError(path + ": expected an integer or a decimal string");
}

inline json vec_to_json(const IntVec& v) {
    json out = json::array();
    for (const auto& e : v.entries()) out.push_back(int_to_json(e));
    return out;
}

/// Input schema: { "A": [[...], ...], "c": [...] } with a square non-empty A.
inline LinearSystem linear_system_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("input: expected an object with \"A\" and \"c\"");
    if (!j.contains("A") || !j["A"].is_array()) throw ParseError("A: expected an array of rows");
    if (!j.contains("c") || !j["c"].is_array()) throw ParseError("c: expected an array");

    const auto& rows = j["A"];
    const std::size_t n = rows.size();
    if (n == 0) throw ParseError("A: a system needs at least one row");
    std::vector<Int> entries;
    for (std::size_t r = 0; r < n; ++r) {
        if (!rows[r].is_array() || rows[r].size() != n)
            throw ParseError("A[" + std::to_string(r) + "]: expected a row of length " +
                             std::to_string(n) + " (square matrix)");
        for (std::size_t c = 0; c < n; ++c)
            entries.push_back(int_from_json(rows[r][c], "A[" + std::to_string(r) + "][" +
                                                            std::to_string(c) + "]"));
    }
    if (j["c"].size() != n)
        throw ParseError("c: expected length " + std::to_string(n));
    std::vector<Int> target;
    for (std::size_t i = 0; i < n; ++i)
        target.push_back(int_from_json(j["c"][i], "c[" + std::to_string(i) + "]"));
    return LinearSystem(IntMatrix(n, n, std::move(entries)), IntVec(std::move(target)));
}

namespace detail {

inline char single_char(const json& j, const std::string& path) {
    if (!j.is_string() || j.get<std::string>().size() != 1)
        throw ParseError(path + ": expected a single-character string");
    return j.get<std::string>()[0];
}

}  // namespace detail

/// Input schema:
/// { "alphabet": [symbols], "marker": symbol, "states": [ids], "initial": id,
///   "finals": [ids], "arcs": [{ "from": id, "to": id, "map": {symbol: word} }],
///   "seed": word, "tuple_arity": k }
/// The marker must be listed in the alphabet; map entries omitted from an arc
/// default to the identity; seed defaults to the marker.
inline endo::EDT0LSystem edt0l_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("input: expected an EDT0L system object");
    for (const char* key : {"alphabet", "states", "initial", "finals", "arcs"})
        if (!j.contains(key)) throw ParseError(std::string(key) + ": missing");

    if (!j.contains("marker")) throw ParseError("marker: missing");
    const char marker = detail::single_char(j["marker"], "marker");

    if (!j["alphabet"].is_array()) throw ParseError("alphabet: expected an array");
    Alphabet alphabet;
    bool marker_listed = false;
    for (std::size_t i = 0; i < j["alphabet"].size(); ++i) {
        char c = detail::single_char(j["alphabet"][i], "alphabet[" + std::to_string(i) + "]");
        if (alphabet.has(c) || (marker_listed && c == marker))
            throw ParseError("alphabet[" + std::to_string(i) + "]: duplicate symbol");
        if (c == marker) {
            alphabet.set_marker(c);
            marker_listed = true;
        } else {
            alphabet.add_constant(c);
        }
    }
    if (!marker_listed) throw ParseError("marker: must be listed in the alphabet");

    if (!j["states"].is_array() || j["states"].empty())
        throw ParseError("states: expected a non-empty array");
    std::vector<std::string> states;
    for (std::size_t i = 0; i < j["states"].size(); ++i) {
        if (!j["states"][i].is_string())
            throw ParseError("states[" + std::to_string(i) + "]: expected a string id");
        states.push_back(j["states"][i].get<std::string>());
    }

    if (!j["initial"].is_string()) throw ParseError("initial: expected a state id");
    if (!j["finals"].is_array()) throw ParseError("finals: expected an array");
    std::vector<std::string> finals;
    for (std::size_t i = 0; i < j["finals"].size(); ++i) {
        if (!j["finals"][i].is_string())
            throw ParseError("finals[" + std::to_string(i) + "]: expected a state id");
        finals.push_back(j["finals"][i].get<std::string>());
    }

    if (!j["arcs"].is_array()) throw ParseError("arcs: expected an array");
    std::vector<std::tuple<std::string, endo::Endomorphism, std::string>> arcs;
    for (std::size_t i = 0; i < j["arcs"].size(); ++i) {
        const auto& a = j["arcs"][i];
        const std::string path = "arcs[" + std::to_string(i) + "]";
        if (!a.is_object() || !a.contains("from") || !a.contains("to") || !a.contains("map"))
            throw ParseError(path + ": expected {from, to, map}");
        if (!a["from"].is_string()) throw ParseError(path + ".from: expected a state id");
        if (!a["to"].is_string()) throw ParseError(path + ".to: expected a state id");
        if (!a["map"].is_object()) throw ParseError(path + ".map: expected {symbol: word}");
        std::map<char, Word> images;
        for (const auto& [key, value] : a["map"].items()) {
            if (key.size() != 1 || !alphabet.has(key[0]))
                throw ParseError(path + ".map." + key + ": unknown symbol");
            if (!value.is_string())
                throw ParseError(path + ".map." + key + ": expected an image word");
            Word image = value.get<std::string>();
            if (!word_over(alphabet, image))
                throw ParseError(path + ".map." + key + ": image uses symbols outside the alphabet");
            if (image.size() > 2)
                throw ParseError(path + ".map." + key + ": arc images must have length <= 2");
            images.emplace(key[0], std::move(image));
        }
        arcs.emplace_back(a["from"].get<std::string>(),
                          endo::Endomorphism(alphabet, std::move(images)),
                          a["to"].get<std::string>());
    }

    Word seed(1, marker);
    if (j.contains("seed")) {
        if (!j["seed"].is_string()) throw ParseError("seed: expected a word");
        seed = j["seed"].get<std::string>();
        if (!word_over(alphabet, seed))
            throw ParseError("seed: uses symbols outside the alphabet");
    }
    std::optional<std::size_t> arity;
    if (j.contains("tuple_arity")) {
        if (!j["tuple_arity"].is_number_unsigned() || j["tuple_arity"].get<std::size_t>() == 0)
            throw ParseError("tuple_arity: expected a positive integer");
        arity = j["tuple_arity"].get<std::size_t>();
    }

    try {
        endo::EndoAutomaton aut(alphabet, std::move(states), j["initial"].get<std::string>(),
                                std::move(finals), std::move(arcs));
        return {std::move(aut), std::move(seed), arity};
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("automaton: ") + e.what());
    }
}

inline json poly_system_to_json(const wordeq::PolynomialSystem& ps) {
    json out;
    out["unknowns"] = ps.unknowns;
    out["equations"] = json::array();
    for (const auto& eq : ps.equations) {
        json terms = json::array();
        for (const auto& t : eq.terms())
            terms.push_back({{"coeff", int_to_json(t.coeff)}, {"vars", t.vars}});
        out["equations"].push_back(std::move(terms));
    }
    out["nonneg"] = ps.nonneg;
    return out;
}

/// Assignment schema: { "X1": 1, "X2": "0", ... }
inline std::map<std::string, Int> assignment_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("assignment: expected an object of unknown -> integer");
    std::map<std::string, Int> out;
    for (const auto& [key, value] : j.items()) out.emplace(key, int_from_json(value, key));
    return out;
}

inline std::string quote_dot(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += "\"";
    return out;
}

/// States render as their vectors, arcs as "2x" or "+1_{i,j}".
inline std::string affine_automaton_to_dot(const lindio::AffineAutomaton& aut) {
    std::string out = "digraph solution_automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    if (aut.empty()) {
        out += "  empty [shape=plaintext, label=\"(empty)\"];\n}\n";
        return out;
    }
    for (std::size_t i = 0; i < aut.states().size(); ++i) {
        const std::string name = aut.states()[i].to_string();
        out += "  " + quote_dot(name);
        if (i == *aut.final_state()) out += " [shape=doublecircle]";
        out += ";\n";
    }
    out += "  __start [shape=point, label=\"\"];\n";
    out += "  __start -> " + quote_dot(aut.states()[*aut.initial()].to_string()) + ";\n";
    for (const auto& arc : aut.arcs())
        out += "  " + quote_dot(aut.states()[arc.src].to_string()) + " -> " +
               quote_dot(aut.states()[arc.dst].to_string()) + " [label=" +
               quote_dot(arc.map.label()) + "];\n";
    out += "}\n";
    return out;
}

inline std::string endo_label(const endo::Endomorphism& h) {
    std::string out;
    for (const auto& [sym, image] : h.images()) {
        if (image == Word(1, sym)) continue;
        if (!out.empty()) out += " ";
        out += std::string(1, sym) + "->" + (image.empty() ? "~" : image);
    }
    return out.empty() ? "id" : out;
}

inline std::string endo_automaton_to_dot(const endo::EndoAutomaton& aut) {
    std::string out = "digraph endo_automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
    if (!aut.initial()) {
        out += "  empty [shape=plaintext, label=\"(empty)\"];\n}\n";
        return out;
    }
    for (std::size_t i = 0; i < aut.state_ids().size(); ++i) {
        out += "  " + quote_dot(aut.state_ids()[i]);
        if (aut.is_final(i)) out += " [shape=doublecircle]";
        out += ";\n";
    }
    out += "  __start [shape=point, label=\"\"];\n";
    out += "  __start -> " + quote_dot(aut.state_ids()[*aut.initial()]) + ";\n";
    for (const auto& arc : aut.arcs())
        out += "  " + quote_dot(aut.state_ids()[arc.src]) + " -> " +
               quote_dot(aut.state_ids()[arc.dst]) + " [label=" + quote_dot(endo_label(arc.label)) +
               "];\n";
    out += "}\n";
    return out;
}

}  // namespace eqset::io
