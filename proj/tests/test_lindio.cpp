#include "eqset/lindio.hpp"

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace eqset;
using namespace eqset::lindio;
using eqtest::mat;
using eqtest::sys;
using eqtest::vec;

namespace {

/// Per-arc semantic equation: q = p + A 1_I for add arcs, q = 2p for doubling.
bool arcs_sound(const AffineAutomaton& aut) {
    for (const auto& arc : aut.arcs()) {
        const IntVec& p = aut.states()[arc.src];
        const IntVec& q = aut.states()[arc.dst];
        if (arc.map.is_doubling()) {
            if (!(Int(2) * p == q)) return false;
        } else {
            if (!(p + column_indicator_sum(aut.system().a(), arc.map.add_set()) == q)) return false;
        }
    }
    return true;
}

/// Depth-first path sampler: collects up to `limit` accepting paths (as value
/// vectors composed first-arc-innermost) with at most max_len arcs.
void sample_accepting_values(const AffineAutomaton& aut, std::size_t limit, std::size_t max_len,
                             std::vector<IntVec>& out) {
    if (aut.empty()) return;
    std::vector<std::vector<std::size_t>> adj(aut.states().size());
    for (std::size_t i = 0; i < aut.arcs().size(); ++i) adj[aut.arcs()[i].src].push_back(i);
    auto dfs = [&](auto&& self, std::size_t state, const IntVec& value, std::size_t depth) -> void {
        if (out.size() >= limit) return;
        if (state == *aut.final_state()) out.push_back(value);
        if (depth == max_len) return;
        for (std::size_t ai : adj[state]) {
            const Arc& arc = aut.arcs()[ai];
            self(self, arc.dst, arc.map.apply(value), depth + 1);
            if (out.size() >= limit) return;
        }
    };
    dfs(dfs, *aut.initial(), IntVec::zero(aut.dim()), 0);
}

}  // namespace

TEST_CASE("normalize_system leaves satisfied systems alone") {
    auto s = sys(2, {1, 1, 0, 0}, {2, 0});
    auto norm = normalize_system(s);
    CHECK(norm.system == s);
    CHECK(norm.original_dim == 2);
}

TEST_CASE("normalize_system pads with pinned dummies") {
    auto norm = normalize_system(sys(1, {2}, {3}));
    CHECK(norm.original_dim == 1);
    CHECK(norm.system.dim() == 2);
    CHECK(norm.system.a() == mat(2, {2, 0, 0, 1}));
    CHECK(norm.system.c() == vec({3, 0}));
    CHECK(norm.system.is_normalized());

    // Projected solution sets coincide with the original's over [0..10].
    auto original = brute_force_solutions(sys(1, {2}, {3}), 10);
    auto padded = brute_force_solutions(norm.system, 10);
    std::vector<IntVec> projected;
    for (const auto& x : padded) projected.push_back(norm.project(x));
    std::sort(projected.begin(), projected.end());
    CHECK(projected == original);
}

TEST_CASE("normalize_system keeps unsolvable systems unsolvable") {
    auto s = sys(1, {0}, {5});
    auto norm = normalize_system(s);
    CHECK(norm.system.is_normalized());
    CHECK(brute_force_solutions(s, 10).empty());
    CHECK(brute_force_solutions(norm.system, 10).empty());
    CHECK_FALSE(is_solvable(build_solution_automaton(norm.system)));
}

TEST_CASE("build rejects non-normalized systems") {
    CHECK_THROWS_AS(build_solution_automaton(sys(1, {2}, {3})), std::invalid_argument);
}

TEST_CASE("desk-scale guards reject oversized inputs") {
    CHECK_THROWS_AS(normalize_system(sys(1, {1}, {5000})), std::invalid_argument);
    auto big = LinearSystem(IntMatrix::identity(17), IntVec::zero(17));
    CHECK_THROWS_AS(build_solution_automaton(big), std::invalid_argument);
}

TEST_CASE("x = 2 is accepted through an add then a doubling") {
    // |c| exceeds |A|, so one dummy is padded on; the path lives in the
    // first coordinate: 0 -> 1 via +1_{1}, then 1 -> 2 via 2x, composed
    // innermost-first as 2*(0+1).
    auto norm = normalize_system(sys(1, {1}, {2}));
    auto aut = build_solution_automaton(norm.system);
    REQUIRE(is_solvable(aut));

    bool add_arc = false, double_arc = false;
    for (const auto& arc : aut.arcs()) {
        if (!arc.map.is_doubling() && arc.map.add_set() == std::vector<std::size_t>{0} &&
            aut.states()[arc.src] == vec({0, 0}) && aut.states()[arc.dst] == vec({1, 0}))
            add_arc = true;
        if (arc.map.is_doubling() && aut.states()[arc.src] == vec({1, 0}) &&
            aut.states()[arc.dst] == vec({2, 0}))
            double_arc = true;
    }
    CHECK(add_arc);
    CHECK(double_arc);

    std::vector<IntVec> projected;
    for (const auto& x : enumerate_solutions(aut, 10)) projected.push_back(norm.project(x));
    CHECK(projected == std::vector<IntVec>{vec({2})});
    CHECK(brute_force_solutions(sys(1, {1}, {2}), 10) == std::vector<IntVec>{vec({2})});
}

TEST_CASE("parity obstruction trims the automaton to nothing") {
    auto s = sys(1, {2}, {1});
    REQUIRE(s.is_normalized());
    auto aut = build_solution_automaton(s);
    CHECK(aut.empty());
    CHECK_FALSE(is_solvable(aut));
    CHECK(enumerate_solutions(aut, 100).empty());
}

TEST_CASE("two-variable system enumerates its three solutions") {
    auto s = sys(2, {1, 1, 0, 0}, {2, 0});
    auto aut = build_solution_automaton(s);
    std::vector<IntVec> expected{vec({0, 2}), vec({1, 1}), vec({2, 0})};
    CHECK(enumerate_solutions(aut, 4) == expected);
    CHECK(brute_force_solutions(s, 4) == expected);
}

TEST_CASE("c = 0 is solvable through the empty path") {
    auto aut = build_solution_automaton(sys(1, {1}, {0}));
    CHECK(is_solvable(aut));
    CHECK(min_norm_solution(aut) == vec({0}));
}

TEST_CASE("solvability of 3x = 12 survives normalization") {
    auto norm = normalize_system(sys(1, {3}, {12}));
    auto aut = build_solution_automaton(norm.system);
    CHECK(is_solvable(aut));
    auto witness = min_norm_solution(aut);
    REQUIRE(witness.has_value());
    CHECK(norm.project(*witness) == vec({4}));
}

TEST_CASE("is_infinite distinguishes the canonical cases") {
    auto homogeneous = sys(2, {1, -1, 0, 0}, {0, 0});
    CHECK(is_infinite(build_solution_automaton(homogeneous), homogeneous));

    auto invertible = sys(2, {1, 0, 0, 1}, {1, 1});
    CHECK_FALSE(is_infinite(build_solution_automaton(invertible), invertible));

    auto three_solutions = sys(2, {1, 1, 0, 0}, {2, 0});
    CHECK_FALSE(is_infinite(build_solution_automaton(three_solutions), three_solutions));
}

TEST_CASE("is_infinite rejects mismatched automaton and system") {
    auto s = sys(1, {1}, {0});
    auto aut = build_solution_automaton(s);
    CHECK_THROWS_AS(is_infinite(aut, sys(1, {2}, {0})), std::invalid_argument);
}

TEST_CASE("diagonal difference system enumerates the diagonal") {
    auto s = sys(2, {1, -1, 0, 0}, {0, 0});
    auto aut = build_solution_automaton(s);
    std::vector<IntVec> expected{vec({0, 0}), vec({1, 1}), vec({2, 2}), vec({3, 3})};
    CHECK(enumerate_solutions(aut, 3) == expected);
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_solutions(sys(2, {1, 1, 0, 0}, {2, 0}), 2) ==
          std::vector<IntVec>{vec({0, 2}), vec({1, 1}), vec({2, 0})});
    CHECK(brute_force_solutions(sys(2, {1, 1, 0, 0}, {0, 0}), 0) ==
          std::vector<IntVec>{vec({0, 0})});
    CHECK(brute_force_solutions(sys(1, {3}, {7}), 10).empty());
}

TEST_CASE("analyze aggregates the report with projected witness") {
    auto report = analyze(sys(1, {2}, {1}));
    CHECK_FALSE(report.solvable);
    CHECK_FALSE(report.infinite);
    CHECK_FALSE(report.witness.has_value());

    report = analyze(sys(1, {1}, {0}));
    CHECK(report.solvable);
    CHECK(report.witness == vec({0}));

    report = analyze(sys(1, {3}, {12}));
    CHECK(report.solvable);
    CHECK_FALSE(report.infinite);
    CHECK(report.witness == vec({4}));
}

TEST_CASE("randomized corpus: enumeration matches brute force and arcs are sound") {
    auto rng = eqtest::make_rng();
    auto corpus = eqtest::random_corpus(rng, 100);
    for (const auto& s : corpus) {
        auto norm = normalize_system(s);
        auto aut = build_solution_automaton(norm.system);

        CHECK(arcs_sound(aut));

        std::vector<IntVec> via_automaton;
        for (const auto& x : enumerate_solutions(aut, 8)) via_automaton.push_back(norm.project(x));
        std::sort(via_automaton.begin(), via_automaton.end());
        via_automaton.erase(std::unique(via_automaton.begin(), via_automaton.end()),
                            via_automaton.end());
        CHECK(via_automaton == brute_force_solutions(s, 8));

        // Solvability via the automaton implies a brute-force-checkable witness.
        if (is_solvable(aut)) {
            auto witness = min_norm_solution(aut);
            REQUIRE(witness.has_value());
            CHECK(matvec(norm.system.a(), *witness) == norm.system.c());
            for (const auto& e : witness->entries()) CHECK(e >= 0);
        }
    }
}

TEST_CASE("sampled accepting paths compose to solutions") {
    auto rng = eqtest::make_rng();
    auto corpus = eqtest::random_corpus(rng, 30);
    for (const auto& s : corpus) {
        auto norm = normalize_system(s);
        auto aut = build_solution_automaton(norm.system);
        std::vector<IntVec> values;
        sample_accepting_values(aut, 1000, 6, values);
        for (const auto& x : values) {
            CHECK(matvec(norm.system.a(), x) == norm.system.c());
            for (const auto& e : x.entries()) CHECK(e >= 0);
        }
    }
}

TEST_CASE("state count stays under the ball bound") {
    auto rng = eqtest::make_rng();
    auto corpus = eqtest::random_corpus(rng, 50);
    for (const auto& s : corpus) {
        auto norm = normalize_system(s);
        auto aut = build_solution_automaton(norm.system);
        Int bound = 1;
        Int side = Int(2) * norm1(norm.system.a()) + 1;
        for (std::size_t i = 0; i < norm.system.dim(); ++i) bound *= side;
        CHECK(Int(aut.states().size()) <= bound);
        for (const auto& b : aut.states()) CHECK(norm1(b) <= aut.norm_bound());
    }
}

TEST_CASE("is_infinite agrees with the bounded homogeneous oracle") {
    auto rng = eqtest::make_rng();
    auto corpus = eqtest::random_corpus(rng, 60);
    for (const auto& s : corpus) {
        auto norm = normalize_system(s);
        auto aut = build_solution_automaton(norm.system);
        bool infinite = is_infinite(aut, norm.system);

        bool solvable = is_solvable(aut);
        auto homogeneous = brute_force_solutions(LinearSystem(s.a(), IntVec::zero(s.dim())), 12);
        bool has_nonzero = std::any_of(homogeneous.begin(), homogeneous.end(), [&](const IntVec& y) {
            return !(y == IntVec::zero(s.dim()));
        });
        CHECK(infinite == (solvable && has_nonzero));
    }
}
