#pragma once

// Shared helpers for the test suites: deterministic RNG (overridable via
// EQSET_SEED), small builders, the randomized system corpus, and bounded
// search oracles that stay independent of the code paths they check.

#include "eqset/ints.hpp"
#include "eqset/poly.hpp"

#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace eqtest {

using eqset::Int;
using eqset::IntMatrix;
using eqset::IntVec;
using eqset::LinearSystem;

inline std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("EQSET_SEED")) return std::strtoull(s, nullptr, 10);
    return 0x45513053u;  // fixed default so runs are reproducible
}

inline std::mt19937_64 make_rng() { return std::mt19937_64(seed_from_env()); }

inline IntVec vec(std::vector<long long> v) {
    return IntVec(std::vector<Int>(v.begin(), v.end()));
}

inline IntMatrix mat(std::size_t n, std::vector<long long> rows_flat) {
    return IntMatrix(n, n, std::vector<Int>(rows_flat.begin(), rows_flat.end()));
}

inline LinearSystem sys(std::size_t n, std::vector<long long> a, std::vector<long long> c) {
    return LinearSystem(mat(n, std::move(a)), vec(std::move(c)));
}

/// Random square systems with n in {1,2,3} and entries in [-3,3].
inline std::vector<LinearSystem> random_corpus(std::mt19937_64& rng, std::size_t count) {
    std::uniform_int_distribution<int> dim_dist(1, 3);
    std::uniform_int_distribution<long long> entry(-3, 3);
    std::vector<LinearSystem> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t n = static_cast<std::size_t>(dim_dist(rng));
        std::vector<long long> a(n * n), c(n);
        for (auto& e : a) e = entry(rng);
        for (auto& e : c) e = entry(rng);
        out.push_back(sys(n, std::move(a), std::move(c)));
    }
    return out;
}

/// Exhaustive assignment search for a polynomial system: nonneg unknowns in
/// [0..bound], the rest in [-bound..bound].
inline bool bounded_poly_search(const eqset::wordeq::PolynomialSystem& ps, long long bound) {
    const std::size_t n = ps.unknowns.size();
    std::vector<long long> lo(n), hi(n, bound);
    for (std::size_t i = 0; i < n; ++i)
        lo[i] = std::find(ps.nonneg.begin(), ps.nonneg.end(), ps.unknowns[i]) != ps.nonneg.end()
                    ? 0
                    : -bound;
    std::vector<long long> x = lo;
    while (true) {
        std::map<std::string, Int> assignment;
        for (std::size_t i = 0; i < n; ++i) assignment[ps.unknowns[i]] = x[i];
        if (eqset::wordeq::eval_poly_system(ps, assignment)) return true;
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (x[i] < hi[i]) {
                ++x[i];
                for (std::size_t j = 0; j < i; ++j) x[j] = lo[j];
                break;
            }
        }
        if (i == n) return false;
    }
}

}  // namespace eqtest
