#pragma once

// Bridge between the linear solver and the EDT0L engine for effectively
// unary systems: a natural number x becomes the word "#" followed by x
// copies of 'a', the doubling arc becomes a -> aa, and the increment arc
// becomes # -> #a.  Enumerated words then carry exactly the solution values
// of the source automaton as their 'a'-counts.

#include "eqset/endo.hpp"
#include "eqset/lindio.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace eqset {

/// Requires every state of the (trimmed) automaton to vary only in its first
/// coordinate and every add arc to touch only index 1; padding dummies pinned
/// to zero satisfy this automatically.
inline endo::EDT0LSystem to_unary_edt0l(const lindio::AffineAutomaton& aut) {
    Alphabet alphabet;
    alphabet.add_constant('a');
    alphabet.set_marker('#');

    for (const auto& state : aut.states())
        for (std::size_t i = 1; i < state.dim(); ++i)
            if (state[i] != 0)
                throw std::invalid_argument("to_unary_edt0l: automaton is not effectively unary");
    for (const auto& arc : aut.arcs())
        if (!arc.map.is_doubling() && arc.map.add_set() != std::vector<std::size_t>{0})
            throw std::invalid_argument("to_unary_edt0l: add arc touches a non-unary coordinate");

    if (aut.empty()) {
        // No accepting path: a single non-final state keeps the language empty.
        endo::EndoAutomaton empty_aut(alphabet, {"0"}, "0", {}, {});
        return {std::move(empty_aut), "#", std::nullopt};
    }

    auto id_of = [&](std::size_t idx) { return aut.states()[idx][0].str(); };
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < aut.states().size(); ++i) ids.push_back(id_of(i));

    endo::Endomorphism doubling(alphabet, {{'a', "aa"}});
    endo::Endomorphism increment(alphabet, {{'#', "#a"}});
    std::vector<std::tuple<std::string, endo::Endomorphism, std::string>> arcs;
    for (const auto& arc : aut.arcs())
        arcs.emplace_back(id_of(arc.src), arc.map.is_doubling() ? doubling : increment,
                          id_of(arc.dst));

    endo::EndoAutomaton out(alphabet, std::move(ids), id_of(*aut.initial()),
                            {id_of(*aut.final_state())}, std::move(arcs));
    return {std::move(out), "#", std::nullopt};
}

/// 'a'-counts of enumerated words: the value set the bridge preserves.
inline std::set<Int> unary_values(const std::set<Word>& words) {
    std::set<Int> out;
    for (const auto& w : words)
        out.insert(Int(std::count(w.begin(), w.end(), 'a')));
    return out;
}

}  // namespace eqset
