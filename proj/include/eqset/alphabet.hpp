#pragma once

// Symbol inventory for word equations and endomorphism automata.
// Symbols are single characters, interned in insertion order so every
// enumeration derived from an alphabet is reproducible.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqset {

/// Words are plain strings; validity against an alphabet is checked at
/// operation boundaries rather than carried by a wrapper type.
using Word = std::string;

class Alphabet {
public:
    void add_constant(char c) {
        require_fresh(c);
        constants_.push_back(c);
    }

    void add_variable(char c) {
        require_fresh(c);
        variables_.push_back(c);
    }

    void set_marker(char c) {
        require_fresh(c);
        marker_ = c;
    }

    bool is_constant(char c) const { return contains(constants_, c); }
    bool is_variable(char c) const { return contains(variables_, c); }
    bool is_marker(char c) const { return marker_ && *marker_ == c; }

    bool has(char c) const {
        return is_constant(c) || is_variable(c) || is_marker(c);
    }

    const std::vector<char>& constants() const { return constants_; }
    const std::vector<char>& variables() const { return variables_; }
    std::optional<char> marker() const { return marker_; }

    /// Full symbol universe: constants, then variables, then the marker.
    std::vector<char> symbols() const {
        std::vector<char> all = constants_;
        all.insert(all.end(), variables_.begin(), variables_.end());
        if (marker_) all.push_back(*marker_);
        return all;
    }

    bool operator==(const Alphabet& other) const = default;

private:
    static bool contains(const std::vector<char>& v, char c) {
        return std::find(v.begin(), v.end(), c) != v.end();
    }

    void require_fresh(char c) {
        if (has(c))
            throw std::invalid_argument(std::string("Alphabet: duplicate symbol '") + c + "'");
    }

    std::vector<char> constants_;
    std::vector<char> variables_;
    std::optional<char> marker_;
};

inline bool word_over(const Alphabet& alphabet, std::string_view w) {
    return std::all_of(w.begin(), w.end(), [&](char c) { return alphabet.has(c); });
}

inline void require_word_over(const Alphabet& alphabet, std::string_view w) {
    for (char c : w)
        if (!alphabet.has(c))
            throw std::invalid_argument(std::string("word contains unknown symbol '") + c + "'");
}

}  // namespace eqset
