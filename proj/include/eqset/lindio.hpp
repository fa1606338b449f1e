#pragma once

// Decides A x = c over the naturals and represents the full solution set as
// a finite automaton over affine maps.
//
// The automaton's states are integer vectors b with |b|_1 <= 2|A|_1; an arc
// either adds the column sum of a non-empty index set I (label x -> x + 1_I)
// or doubles (label x -> 2x).  Read along a path from the zero vector to c,
// the composed labels applied to 0 produce exactly the nonnegative solutions:
// the doubling arcs emit the binary digits of a solution most significant
// first, and the add arcs fix the low bits.  Per-arc semantics guarantee that
// if A x = p holds at the source then A h(x) = q holds at the target, so any
// accepted composition is a solution; conversely, halving a solution bit by
// bit walks the same graph backwards and never leaves the norm ball.
//
// Systems must be normalized (|c|_1 <= |A|_1) before construction; dummies
// added by normalize_system are pinned to zero by their fresh rows.

#include "eqset/ints.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace eqset::lindio {

/// Arc label: x -> 2x (scale 2, empty add set) or x -> x + 1_I (scale 1,
/// non-empty I).  The identity never labels an arc.
class AffineMap {
public:
    static AffineMap doubling(std::size_t dim) { return AffineMap(2, {}, dim); }

    static AffineMap adder(std::vector<std::size_t> add_set, std::size_t dim) {
        if (add_set.empty())
            throw std::invalid_argument("AffineMap: add set must be non-empty");
        std::sort(add_set.begin(), add_set.end());
        if (std::adjacent_find(add_set.begin(), add_set.end()) != add_set.end())
            throw std::invalid_argument("AffineMap: add set has duplicates");
        if (add_set.back() >= dim)
            throw std::invalid_argument("AffineMap: add index out of range");
        return AffineMap(1, std::move(add_set), dim);
    }

    int scale() const { return scale_; }
    bool is_doubling() const { return scale_ == 2; }
    const std::vector<std::size_t>& add_set() const { return add_set_; }
    std::size_t dim() const { return dim_; }

    IntVec apply(const IntVec& x) const {
        if (x.dim() != dim_)
            throw std::invalid_argument("AffineMap: dimension mismatch");
        if (is_doubling()) return Int(2) * x;
        IntVec out = x;
        for (std::size_t i : add_set_) out[i] += 1;
        return out;
    }

    /// "2x" or "+1_{i,j}" with 1-based indices.
    std::string label() const {
        if (is_doubling()) return "2x";
        std::string out = "+1_{";
        for (std::size_t k = 0; k < add_set_.size(); ++k) {
            if (k) out += ",";
            out += std::to_string(add_set_[k] + 1);
        }
        out += "}";
        return out;
    }

    bool operator==(const AffineMap& other) const = default;
    bool operator<(const AffineMap& other) const {
        return std::tie(scale_, add_set_) < std::tie(other.scale_, other.add_set_);
    }

private:
    AffineMap(int scale, std::vector<std::size_t> add_set, std::size_t dim)
        : scale_(scale), add_set_(std::move(add_set)), dim_(dim) {}

    int scale_;
    std::vector<std::size_t> add_set_;  // sorted, 0-based
    std::size_t dim_;
};

struct Arc {
    std::size_t src;
    AffineMap map;
    std::size_t dst;
};

/// Trimmed solution automaton: every state lies on some path from the zero
/// vector to the target c.  Empty (no initial state) exactly when the system
/// is unsolvable.
class AffineAutomaton {
public:
    AffineAutomaton(LinearSystem system, Int norm_bound, std::vector<IntVec> states,
                    std::vector<Arc> arcs, std::optional<std::size_t> initial,
                    std::optional<std::size_t> final_state)
        : system_(std::move(system)),
          norm_bound_(std::move(norm_bound)),
          states_(std::move(states)),
          arcs_(std::move(arcs)),
          initial_(initial),
          final_(final_state) {}

    std::size_t dim() const { return system_.dim(); }
    const LinearSystem& system() const { return system_; }
    const Int& norm_bound() const { return norm_bound_; }
    const std::vector<IntVec>& states() const { return states_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    std::optional<std::size_t> initial() const { return initial_; }
    std::optional<std::size_t> final_state() const { return final_; }
    bool empty() const { return !initial_.has_value(); }

private:
    LinearSystem system_;  // the normalized system the automaton was built from
    Int norm_bound_;
    std::vector<IntVec> states_;  // sorted lexicographically
    std::vector<Arc> arcs_;       // sorted by (src, label, dst)
    std::optional<std::size_t> initial_;
    std::optional<std::size_t> final_;
};

struct NormalizedSystem {
    LinearSystem system;
    std::size_t original_dim;  // solutions project to the first original_dim coordinates

    IntVec project(const IntVec& x) const {
        std::vector<Int> out(x.entries().begin(), x.entries().begin() + original_dim);
        return IntVec(std::move(out));
    }
};

/// Pads A x = c with dummy variables, each pinned to zero by a fresh row with
/// a single 1, until |c|_1 <= |A|_1.  Projecting the padded solution set to
/// the original coordinates recovers the original solution set.
inline NormalizedSystem normalize_system(const LinearSystem& s) {
    Int deficit = norm1(s.c()) - norm1(s.a());
    if (deficit <= 0) return {s, s.dim()};
    if (deficit > 4096)
        throw std::invalid_argument(
            "normalize_system: |c|_1 exceeds |A|_1 by more than desk scale allows");

    const std::size_t extra = static_cast<std::size_t>(deficit);
    const std::size_t n = s.dim();
    const std::size_t m = n + extra;
    std::vector<Int> a(m * m, Int(0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r * m + c] = s.a().at(r, c);
    for (std::size_t k = 0; k < extra; ++k) a[(n + k) * m + (n + k)] = 1;

    std::vector<Int> c(m, Int(0));
    for (std::size_t i = 0; i < n; ++i) c[i] = s.c()[i];

    return {LinearSystem(IntMatrix(m, m, std::move(a)), IntVec(std::move(c))), n};
}

namespace detail {

// Subset arcs are enumerated exhaustively, so the dimension after padding is
// capped; anything larger is out of desk scale for this construction.
inline constexpr std::size_t max_dim = 16;

struct RawArc {
    std::uint32_t src;
    std::uint32_t mask;  // 0 = doubling, else bitmask of the add set
    std::uint32_t dst;
};

inline std::vector<std::size_t> mask_to_indices(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

}  // namespace detail

/// Builds the trimmed automaton for a normalized system: exactly the states
/// reachable from 0 and co-reachable to c inside the ball |b|_1 <= 2|A|_1.
inline AffineAutomaton build_solution_automaton(const LinearSystem& s) {
    if (!s.is_normalized())
        throw std::invalid_argument(
            "build_solution_automaton: system must be normalized (|c|_1 <= |A|_1)");
    const std::size_t n = s.dim();
    if (n > detail::max_dim)
        throw std::invalid_argument("build_solution_automaton: dimension exceeds desk-scale cap");

    const Int bound = Int(2) * norm1(s.a());
    const std::uint32_t subsets = (1u << n);

    // Column sums for every index set, built incrementally from the lowest bit.
    std::vector<IntVec> col_sum;
    col_sum.reserve(subsets);
    col_sum.push_back(IntVec::zero(n));
    for (std::uint32_t m = 1; m < subsets; ++m) {
        std::uint32_t low = m & (m - 1);
        std::size_t bit = 0;
        for (std::uint32_t t = m ^ low; t > 1; t >>= 1) ++bit;
        IntVec v = col_sum[low];
        for (std::size_t r = 0; r < n; ++r) v[r] += s.a().at(r, bit);
        col_sum.push_back(std::move(v));
    }

    // Coordinates whose row has a uniform sign can never cross back over the
    // target, so states past it are provably not co-reachable.  This keeps the
    // exploration small when padding adds many pinned dummy rows.
    std::vector<int> row_sign(n, 0);  // +1 all-nonneg, -1 all-nonpos, 0 mixed
    for (std::size_t r = 0; r < n; ++r) {
        bool nonneg = true, nonpos = true;
        for (std::size_t c = 0; c < n; ++c) {
            if (s.a().at(r, c) < 0) nonneg = false;
            if (s.a().at(r, c) > 0) nonpos = false;
        }
        row_sign[r] = nonneg ? 1 : (nonpos ? -1 : 0);
    }
    auto co_reach_possible = [&](const IntVec& b) {
        for (std::size_t r = 0; r < n; ++r) {
            if (row_sign[r] > 0 && b[r] > s.c()[r]) return false;
            if (row_sign[r] < 0 && b[r] < s.c()[r]) return false;
        }
        return true;
    };

    std::vector<IntVec> states;
    std::unordered_map<IntVec, std::uint32_t, IntVecHash> index;
    std::vector<detail::RawArc> raw_arcs;
    std::queue<std::uint32_t> frontier;

    auto intern = [&](const IntVec& v) -> std::optional<std::uint32_t> {
        if (norm1(v) > bound || !co_reach_possible(v)) return std::nullopt;
        auto it = index.find(v);
        if (it != index.end()) return it->second;
        std::uint32_t id = static_cast<std::uint32_t>(states.size());
        states.push_back(v);
        index.emplace(v, id);
        frontier.push(id);
        return id;
    };

    intern(IntVec::zero(n));  // always admissible: |0| = 0 and c passes its own check
    while (!frontier.empty()) {
        std::uint32_t src = frontier.front();
        frontier.pop();
        IntVec b = states[src];
        if (auto dst = intern(Int(2) * b)) raw_arcs.push_back({src, 0, *dst});
        for (std::uint32_t m = 1; m < subsets; ++m)
            if (auto dst = intern(b + col_sum[m])) raw_arcs.push_back({src, m, *dst});
    }

    // Trim: keep states co-reachable to c (everything explored is reachable
    // from 0 already).  Any arc between kept states lies on an accepting path.
    std::vector<char> keep(states.size(), 0);
    auto final_it = index.find(s.c());
    if (final_it != index.end()) {
        std::vector<std::vector<std::uint32_t>> rev(states.size());
        for (const auto& a : raw_arcs) rev[a.dst].push_back(a.src);
        std::queue<std::uint32_t> back;
        back.push(final_it->second);
        keep[final_it->second] = 1;
        while (!back.empty()) {
            std::uint32_t q = back.front();
            back.pop();
            for (std::uint32_t p : rev[q])
                if (!keep[p]) {
                    keep[p] = 1;
                    back.push(p);
                }
        }
    }

    std::vector<IntVec> kept;
    for (std::size_t i = 0; i < states.size(); ++i)
        if (keep[i]) kept.push_back(states[i]);
    std::sort(kept.begin(), kept.end());
    std::unordered_map<IntVec, std::size_t, IntVecHash> new_index;
    for (std::size_t i = 0; i < kept.size(); ++i) new_index.emplace(kept[i], i);

    std::vector<Arc> arcs;
    for (const auto& a : raw_arcs) {
        if (!keep[a.src] || !keep[a.dst]) continue;
        AffineMap map = a.mask == 0 ? AffineMap::doubling(n)
                                    : AffineMap::adder(detail::mask_to_indices(a.mask), n);
        arcs.push_back({new_index.at(states[a.src]), std::move(map), new_index.at(states[a.dst])});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
        return std::tie(x.src, x.map, x.dst) < std::tie(y.src, y.map, y.dst);
    });

    std::optional<std::size_t> initial, final_state;
    if (auto it = new_index.find(IntVec::zero(n)); it != new_index.end()) initial = it->second;
    if (auto it = new_index.find(s.c()); it != new_index.end()) final_state = it->second;
    // kept is exactly the 0 -> c path states, so initial and final are either
    // both present or both absent.
    return AffineAutomaton(s, bound, std::move(kept), std::move(arcs), initial, final_state);
}

/// The trimmed automaton is non-empty iff c is reachable from 0; the empty
/// path covers c = 0.
inline bool is_solvable(const AffineAutomaton& aut) { return !aut.empty(); }

namespace detail {

inline std::vector<std::vector<std::size_t>> adjacency(const AffineAutomaton& aut) {
    std::vector<std::vector<std::size_t>> adj(aut.states().size());
    for (std::size_t i = 0; i < aut.arcs().size(); ++i)
        adj[aut.arcs()[i].src].push_back(i);
    return adj;
}

}  // namespace detail

/// All solutions with every coordinate <= coord_bound, in lexicographic
/// order.  Explores (state, partial value) pairs; pruning on a coordinate
/// exceeding the bound is sound because both arc families are monotone
/// non-decreasing on nonnegative vectors.
inline std::vector<IntVec> enumerate_solutions(const AffineAutomaton& aut,
                                               const Int& coord_bound) {
    std::set<IntVec> found;
    if (aut.empty() || coord_bound < 0) return {};
    const auto adj = detail::adjacency(aut);

    auto within = [&](const IntVec& v) {
        for (const auto& e : v.entries())
            if (e > coord_bound) return false;
        return true;
    };

    // A value determines its state (the state is A times the value), so the
    // visited set needs only the value.
    std::unordered_set<IntVec, IntVecHash> visited;
    std::queue<std::pair<std::size_t, IntVec>> frontier;
    IntVec zero = IntVec::zero(aut.dim());
    if (within(zero)) {
        visited.insert(zero);
        frontier.emplace(*aut.initial(), zero);
    }
    while (!frontier.empty()) {
        auto [state, value] = std::move(frontier.front());
        frontier.pop();
        if (state == *aut.final_state()) found.insert(value);
        for (std::size_t ai : adj[state]) {
            const Arc& arc = aut.arcs()[ai];
            IntVec next = arc.map.apply(value);
            if (!within(next) || visited.count(next)) continue;
            visited.insert(next);
            frontier.emplace(arc.dst, next);
        }
    }
    return {found.begin(), found.end()};
}

/// Minimal-1-norm solution, if any: uniform-cost search over (state, value)
/// pairs ordered by |value|_1, then value, then state.  Arc labels never
/// decrease the norm of a nonnegative vector, so the first final hit is
/// minimal.
inline std::optional<IntVec> min_norm_solution(const AffineAutomaton& aut) {
    if (aut.empty()) return std::nullopt;
    const auto adj = detail::adjacency(aut);

    using Item = std::tuple<Int, IntVec, std::size_t>;
    auto cmp = [](const Item& a, const Item& b) { return a > b; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
    std::unordered_set<IntVec, IntVecHash> visited;

    IntVec zero = IntVec::zero(aut.dim());
    heap.emplace(Int(0), zero, *aut.initial());
    visited.insert(zero);
    while (!heap.empty()) {
        auto [nrm, value, state] = heap.top();
        heap.pop();
        if (state == *aut.final_state()) return value;
        for (std::size_t ai : adj[state]) {
            const Arc& arc = aut.arcs()[ai];
            IntVec next = arc.map.apply(value);
            if (visited.count(next)) continue;
            visited.insert(next);
            heap.emplace(norm1(next), std::move(next), arc.dst);
        }
    }
    return std::nullopt;  // unreachable for a trimmed non-empty automaton
}

/// Solvable with infinitely many solutions iff the homogeneous system
/// A y = 0 admits a nonzero natural solution, i.e. the trimmed automaton for
/// (A, 0) keeps at least one add arc (a doubling-only path only produces 0).
inline bool is_infinite(const AffineAutomaton& aut_for_c, const LinearSystem& s) {
    if (s.dim() != aut_for_c.dim() || !(s == aut_for_c.system()))
        throw std::invalid_argument("is_infinite: automaton was not built from this system");
    if (!is_solvable(aut_for_c)) return false;
    LinearSystem homogeneous(s.a(), IntVec::zero(s.dim()));
    AffineAutomaton zero_aut = build_solution_automaton(homogeneous);
    return std::any_of(zero_aut.arcs().begin(), zero_aut.arcs().end(),
                       [](const Arc& a) { return !a.map.is_doubling(); });
}

/// Exhaustive scan of [0..coord_bound]^n; the independent oracle the
/// automaton route is checked against.
inline std::vector<IntVec> brute_force_solutions(const LinearSystem& s,
                                                 const Int& coord_bound) {
    std::vector<IntVec> out;
    if (coord_bound < 0) return out;
    IntVec x = IntVec::zero(s.dim());
    while (true) {
        if (matvec(s.a(), x) == s.c()) out.push_back(x);
        std::size_t i = 0;
        for (; i < s.dim(); ++i) {
            if (x[i] < coord_bound) {
                x[i] += 1;
                for (std::size_t j = 0; j < i; ++j) x[j] = 0;
                break;
            }
        }
        if (i == s.dim()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct SolutionSetReport {
    bool solvable = false;
    bool infinite = false;
    std::optional<IntVec> witness;  // minimal-1-norm solution, original coordinates
};

/// One-stop decision for an arbitrary square system: normalize, build, query.
inline SolutionSetReport analyze(const LinearSystem& s) {
    NormalizedSystem norm = normalize_system(s);
    AffineAutomaton aut = build_solution_automaton(norm.system);
    SolutionSetReport report;
    report.solvable = is_solvable(aut);
    report.infinite = is_infinite(aut, norm.system);
    if (report.solvable)
        if (auto w = min_norm_solution(aut)) report.witness = norm.project(*w);
    return report;
}

}  // namespace eqset::lindio
