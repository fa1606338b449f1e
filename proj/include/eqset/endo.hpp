#pragma once

// Rational sets of endomorphisms: NFAs whose arcs carry alphabet
// endomorphisms.  Accepted label compositions applied to a seed word give an
// EDT0L language; the queries here decide emptiness and composition
// infiniteness and enumerate the language up to a length cap.

#include "eqset/alphabet.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace eqset::endo {

/// Total map from each symbol of the alphabet to a word over it, extended
/// homomorphically.  Arc labels must keep images at length <= 2; composed
/// endomorphisms may map to anything.
class Endomorphism {
public:
    Endomorphism(Alphabet alphabet, std::map<char, Word> images)
        : alphabet_(std::move(alphabet)), images_(std::move(images)) {
        for (const auto& [sym, image] : images_) {
            if (!alphabet_.has(sym))
                throw std::invalid_argument(std::string("Endomorphism: unknown symbol '") + sym + "'");
            require_word_over(alphabet_, image);
        }
        // Totality: symbols without an explicit image map to themselves.
        for (char sym : alphabet_.symbols())
            images_.try_emplace(sym, Word(1, sym));
    }

    static Endomorphism identity(Alphabet alphabet) {
        return Endomorphism(std::move(alphabet), {});
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<char, Word>& images() const { return images_; }

    const Word& image(char sym) const {
        auto it = images_.find(sym);
        if (it == images_.end())
            throw std::invalid_argument(std::string("Endomorphism: unknown symbol '") + sym + "'");
        return it->second;
    }

    Word apply(std::string_view w) const {
        Word out;
        for (char sym : w) out += image(sym);
        return out;
    }

    bool arc_admissible() const {
        return std::all_of(images_.begin(), images_.end(),
                           [](const auto& kv) { return kv.second.size() <= 2; });
    }

    bool erasing() const {
        return std::any_of(images_.begin(), images_.end(),
                           [](const auto& kv) { return kv.second.empty(); });
    }

    bool is_identity() const {
        return std::all_of(images_.begin(), images_.end(),
                           [](const auto& kv) { return kv.second == Word(1, kv.first); });
    }

    bool operator==(const Endomorphism& other) const = default;
    bool operator<(const Endomorphism& other) const { return images_ < other.images_; }

private:
    Alphabet alphabet_;
    std::map<char, Word> images_;
};

/// f after g: (f o g)(sym) = f(g(sym)).
inline Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
    if (!(f.alphabet() == g.alphabet()))
        throw std::invalid_argument("compose: alphabet mismatch");
    std::map<char, Word> images;
    for (const auto& [sym, image] : g.images()) images.emplace(sym, f.apply(image));
    return Endomorphism(f.alphabet(), std::move(images));
}

struct EndoArc {
    std::size_t src;
    Endomorphism label;
    std::size_t dst;
};

/// NFA over endomorphisms.  State identifiers are strings and all iteration
/// follows their sorted order, so outputs are stable across runs.
class EndoAutomaton {
public:
    EndoAutomaton(Alphabet alphabet, std::vector<std::string> state_ids,
                  const std::string& initial, std::vector<std::string> finals,
                  std::vector<std::tuple<std::string, Endomorphism, std::string>> arcs)
        : alphabet_(std::move(alphabet)) {
        std::sort(state_ids.begin(), state_ids.end());
        if (std::adjacent_find(state_ids.begin(), state_ids.end()) != state_ids.end())
            throw std::invalid_argument("EndoAutomaton: duplicate state id");
        ids_ = std::move(state_ids);
        initial_ = index_of(initial);
        std::sort(finals.begin(), finals.end());
        finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
        for (const auto& f : finals) finals_.push_back(index_of(f));
        for (auto& [from, label, to] : arcs) {
            if (!(label.alphabet() == alphabet_))
                throw std::invalid_argument("EndoAutomaton: arc label over a different alphabet");
            if (!label.arc_admissible())
                throw std::invalid_argument("EndoAutomaton: arc label image longer than 2");
            arcs_.push_back({index_of(from), std::move(label), index_of(to)});
        }
        sort_arcs();
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::string>& state_ids() const { return ids_; }
    std::optional<std::size_t> initial() const { return initial_; }
    const std::vector<std::size_t>& finals() const { return finals_; }
    const std::vector<EndoArc>& arcs() const { return arcs_; }
    bool empty_states() const { return ids_.empty(); }

    bool is_final(std::size_t state) const {
        return std::binary_search(finals_.begin(), finals_.end(), state);
    }

    /// Restriction to states on some initial -> final path.  May drop the
    /// initial state entirely (empty language).
    EndoAutomaton trimmed() const {
        std::vector<char> fwd(ids_.size(), 0), bwd(ids_.size(), 0);
        if (initial_) {
            std::queue<std::size_t> q;
            q.push(*initial_);
            fwd[*initial_] = 1;
            while (!q.empty()) {
                std::size_t p = q.front();
                q.pop();
                for (const auto& a : arcs_)
                    if (a.src == p && !fwd[a.dst]) {
                        fwd[a.dst] = 1;
                        q.push(a.dst);
                    }
            }
        }
        {
            std::queue<std::size_t> q;
            for (std::size_t f : finals_) {
                bwd[f] = 1;
                q.push(f);
            }
            while (!q.empty()) {
                std::size_t p = q.front();
                q.pop();
                for (const auto& a : arcs_)
                    if (a.dst == p && !bwd[a.src]) {
                        bwd[a.src] = 1;
                        q.push(a.src);
                    }
            }
        }

        EndoAutomaton out(alphabet_);
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (fwd[i] && bwd[i]) out.ids_.push_back(ids_[i]);
        auto live = [&](std::size_t i) { return fwd[i] && bwd[i]; };
        if (initial_ && live(*initial_)) out.initial_ = out.index_of(ids_[*initial_]);
        for (std::size_t f : finals_)
            if (live(f)) out.finals_.push_back(out.index_of(ids_[f]));
        std::sort(out.finals_.begin(), out.finals_.end());
        for (const auto& a : arcs_)
            if (live(a.src) && live(a.dst))
                out.arcs_.push_back({out.index_of(ids_[a.src]), a.label, out.index_of(ids_[a.dst])});
        out.sort_arcs();
        return out;
    }

    bool has_cycle() const {
        // Kahn peeling: anything not removed lies on a directed cycle.
        std::vector<std::size_t> indeg(ids_.size(), 0);
        for (const auto& a : arcs_) ++indeg[a.dst];
        std::queue<std::size_t> q;
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (indeg[i] == 0) q.push(i);
        std::size_t removed = 0;
        while (!q.empty()) {
            std::size_t p = q.front();
            q.pop();
            ++removed;
            for (const auto& a : arcs_)
                if (a.src == p && --indeg[a.dst] == 0) q.push(a.dst);
        }
        return removed < ids_.size();
    }

private:
    explicit EndoAutomaton(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    std::size_t index_of(const std::string& id) const {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id)
            throw std::invalid_argument("EndoAutomaton: unknown state id '" + id + "'");
        return static_cast<std::size_t>(it - ids_.begin());
    }

    void sort_arcs() {
        std::sort(arcs_.begin(), arcs_.end(), [](const EndoArc& x, const EndoArc& y) {
            return std::tie(x.src, x.dst, x.label) < std::tie(y.src, y.dst, y.label);
        });
    }

    Alphabet alphabet_;
    std::vector<std::string> ids_;  // sorted
    std::optional<std::size_t> initial_;
    std::vector<std::size_t> finals_;  // sorted
    std::vector<EndoArc> arcs_;        // sorted by (src, dst, label)
};

struct EDT0LSystem {
    EndoAutomaton automaton;
    Word seed;
    std::optional<std::size_t> tuple_arity;  // expected marker count + 1 in every value
};

inline bool edt0l_is_empty(const EDT0LSystem& sys) {
    if (!sys.automaton.initial()) return true;
    // Plain reachability; the empty path accepts when the initial state is final.
    std::vector<char> seen(sys.automaton.state_ids().size(), 0);
    std::queue<std::size_t> q;
    q.push(*sys.automaton.initial());
    seen[*sys.automaton.initial()] = 1;
    while (!q.empty()) {
        std::size_t p = q.front();
        q.pop();
        if (sys.automaton.is_final(p)) return false;
        for (const auto& a : sys.automaton.arcs())
            if (a.src == p && !seen[a.dst]) {
                seen[a.dst] = 1;
                q.push(a.dst);
            }
    }
    return true;
}

/// True iff the trimmed automaton accepts infinitely many compositions
/// (contains a directed cycle).  This is a statement about L(A); distinct
/// compositions may still collapse to the same value word on arbitrary
/// user-supplied automata.
inline bool edt0l_is_language_infinite(const EDT0LSystem& sys) {
    return sys.automaton.trimmed().has_cycle();
}

struct EnumerationResult {
    std::set<Word> words;
    bool truncated = false;  // only ever set when erasing labels force a depth cap
};

/// { h(seed) : h accepted, |h(seed)| <= length_cap }.  Traversing an arc
/// applies its label to the current word (first arc innermost).  With
/// non-erasing labels word length is monotone, so pruning at the cap is exact;
/// an erasing label anywhere switches to a depth-capped exploration instead
/// and reports whether anything was cut off.
inline EnumerationResult edt0l_enumerate(const EDT0LSystem& sys, std::size_t length_cap,
                                         std::size_t depth_cap = 16) {
    EnumerationResult result;
    EndoAutomaton aut = sys.automaton.trimmed();
    if (!aut.initial()) return result;
    require_word_over(aut.alphabet(), sys.seed);

    const bool erasing = std::any_of(aut.arcs().begin(), aut.arcs().end(),
                                     [](const EndoArc& a) { return a.label.erasing(); });

    std::vector<std::vector<std::size_t>> adj(aut.state_ids().size());
    for (std::size_t i = 0; i < aut.arcs().size(); ++i) adj[aut.arcs()[i].src].push_back(i);

    auto record = [&](std::size_t state, const Word& w) {
        if (!aut.is_final(state) || w.size() > length_cap) return;
        if (sys.tuple_arity) {
            std::size_t markers = 0;
            if (auto m = aut.alphabet().marker())
                markers = static_cast<std::size_t>(std::count(w.begin(), w.end(), *m));
            if (markers + 1 != *sys.tuple_arity)
                throw std::runtime_error("edt0l_enumerate: value '" + w + "' violates tuple arity " +
                                         std::to_string(*sys.tuple_arity));
        }
        result.words.insert(w);
    };

    std::set<std::pair<std::size_t, Word>> visited;
    std::queue<std::tuple<std::size_t, Word, std::size_t>> frontier;  // state, word, depth
    frontier.emplace(*aut.initial(), sys.seed, 0);
    visited.emplace(*aut.initial(), sys.seed);
    while (!frontier.empty()) {
        auto [state, word, depth] = std::move(frontier.front());
        frontier.pop();
        record(state, word);
        for (std::size_t ai : adj[state]) {
            const EndoArc& arc = aut.arcs()[ai];
            Word next = arc.label.apply(word);
            if (!erasing && next.size() > length_cap) continue;
            if (erasing && depth >= depth_cap) {
                // Only report a cut when the capped step would have reached a
                // genuinely new configuration.
                if (!visited.count({arc.dst, next})) result.truncated = true;
                continue;
            }
            if (!visited.emplace(arc.dst, next).second) continue;
            frontier.emplace(arc.dst, std::move(next), depth + 1);
        }
    }
    return result;
}

/// Splits at every marker occurrence, preserving empty fields.
inline std::vector<Word> split_tuple(std::string_view w, char marker) {
    std::vector<Word> fields{Word()};
    for (char c : w) {
        if (c == marker)
            fields.emplace_back();
        else
            fields.back() += c;
    }
    return fields;
}

}  // namespace eqset::endo
