#pragma once

// Integer polynomial systems: the target of the word-equation encoding and
// the four-squares single-equation reduction.

#include "eqset/ints.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace eqset::wordeq {

/// coeff * var * var * ...; variable names sorted, any degree.
struct Monomial {
    Int coeff;
    std::vector<std::string> vars;

    std::size_t degree() const { return vars.size(); }
};

/// Canonical form: terms ordered by degree descending then variables
/// ascending, like terms merged, zero terms dropped.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(Int value) {
        Polynomial p;
        p.terms_.push_back({std::move(value), {}});
        p.normalize();
        return p;
    }

    static Polynomial variable(std::string name) {
        Polynomial p;
        p.terms_.push_back({Int(1), {std::move(name)}});
        return p;
    }

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t degree() const {
        return terms_.empty() ? 0 : terms_.front().degree();
    }

    Polynomial& operator+=(const Polynomial& other) {
        terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        Polynomial neg = b;
        for (auto& t : neg.terms_) t.coeff = -t.coeff;
        return a += neg;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Monomial m{ta.coeff * tb.coeff, ta.vars};
                m.vars.insert(m.vars.end(), tb.vars.begin(), tb.vars.end());
                std::sort(m.vars.begin(), m.vars.end());
                out.terms_.push_back(std::move(m));
            }
        out.normalize();
        return out;
    }

    Int evaluate(const std::map<std::string, Int>& assignment) const {
        Int total = 0;
        for (const auto& t : terms_) {
            Int value = t.coeff;
            for (const auto& v : t.vars) {
                auto it = assignment.find(v);
                if (it == assignment.end())
                    throw std::invalid_argument("Polynomial: unassigned unknown '" + v + "'");
                value *= it->second;
            }
            total += value;
        }
        return total;
    }

    Polynomial substitute(const std::string& name, const Polynomial& replacement) const {
        Polynomial out;
        for (const auto& t : terms_) {
            Polynomial term = Polynomial::constant(t.coeff);
            for (const auto& v : t.vars)
                term = term * (v == name ? replacement : Polynomial::variable(v));
            out += term;
        }
        return out;
    }

    std::set<std::string> variables() const {
        std::set<std::string> out;
        for (const auto& t : terms_) out.insert(t.vars.begin(), t.vars.end());
        return out;
    }

    /// Rendered like "X1*X4 - X2*X3 - 1"; the zero polynomial prints "0".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Monomial& t = terms_[i];
            const bool negative = t.coeff < 0;
            Int magnitude = negative ? Int(-t.coeff) : t.coeff;
            if (i == 0)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            std::string body;
            if (magnitude != 1 || t.vars.empty()) body = magnitude.str();
            for (const auto& v : t.vars) {
                if (!body.empty()) body += "*";
                body += v;
            }
            out += body;
        }
        return out;
    }

    bool operator==(const Polynomial& other) const = default;

private:
    void normalize() {
        std::map<std::vector<std::string>, Int> merged;
        for (auto& t : terms_) merged[std::move(t.vars)] += t.coeff;
        terms_.clear();
        for (auto& [vars, coeff] : merged)
            if (coeff != 0) terms_.push_back({std::move(coeff), vars});
        std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() > b.degree();
            return a.vars < b.vars;
        });
    }

    std::vector<Monomial> terms_;
};

/// Equations p = 0 over declared integer unknowns, plus a subset constrained
/// to be nonnegative.
struct PolynomialSystem {
    std::vector<std::string> unknowns;
    std::vector<Polynomial> equations;
    std::vector<std::string> nonneg;

    bool declares(const std::string& name) const {
        return std::find(unknowns.begin(), unknowns.end(), name) != unknowns.end();
    }

    /// One constraint per line: "<polynomial> = 0" then "<unknown> >= 0".
    std::string to_text() const {
        std::string out;
        for (const auto& eq : equations) out += eq.to_string() + " = 0\n";
        for (const auto& name : nonneg) out += name + " >= 0\n";
        return out;
    }
};

/// True iff every equation vanishes and every nonneg unknown is >= 0.
/// The assignment must cover every declared unknown.
inline bool eval_poly_system(const PolynomialSystem& ps,
                             const std::map<std::string, Int>& assignment) {
    for (const auto& name : ps.unknowns)
        if (!assignment.count(name))
            throw std::invalid_argument("eval_poly_system: missing unknown '" + name + "'");
    for (const auto& name : ps.nonneg)
        if (assignment.at(name) < 0) return false;
    return std::all_of(ps.equations.begin(), ps.equations.end(),
                       [&](const Polynomial& p) { return p.evaluate(assignment) == 0; });
}

inline Int isqrt_floor(const Int& m) {
    return boost::multiprecision::sqrt(m);
}

/// Lagrange decomposition m = s1^2 + s2^2 + s3^2 + s4^2 with
/// s1 >= s2 >= s3 >= s4 >= 0; returns the lexicographically largest such
/// tuple (descending search, first hit).
inline std::array<Int, 4> four_squares(const Int& m) {
    if (m < 0) throw std::invalid_argument("four_squares: negative input");
    for (Int s1 = isqrt_floor(m); s1 >= 0; --s1) {
        Int r1 = m - s1 * s1;
        for (Int s2 = (std::min)(s1, isqrt_floor(r1)); s2 >= 0; --s2) {
            Int r2 = r1 - s2 * s2;
            for (Int s3 = (std::min)(s2, isqrt_floor(r2)); s3 >= 0; --s3) {
                Int r3 = r2 - s3 * s3;
                Int s4 = isqrt_floor(r3);
                if (s4 <= s3 && s4 * s4 == r3) return {s1, s2, s3, s4};
            }
        }
    }
    throw std::logic_error("four_squares: unreachable");
}

/// Folds a system into one equation with no nonneg constraints: each
/// nonnegative unknown becomes a sum of four squares of fresh unknowns, and
/// the equations p_i = 0 merge into sum(p_i^2) = 0.  Satisfiable over the
/// integers iff the input is.
inline PolynomialSystem to_single_equation(const PolynomialSystem& ps) {
    PolynomialSystem out;
    std::vector<Polynomial> equations = ps.equations;

    std::set<std::string> taken(ps.unknowns.begin(), ps.unknowns.end());
    auto fresh = [&taken](const std::string& base) {
        std::string name = base;
        while (taken.count(name)) name += "_";
        taken.insert(name);
        return name;
    };

    for (const auto& name : ps.unknowns) {
        const bool constrained =
            std::find(ps.nonneg.begin(), ps.nonneg.end(), name) != ps.nonneg.end();
        if (!constrained) {
            out.unknowns.push_back(name);
            continue;
        }
        Polynomial sum_of_squares;
        for (int k = 1; k <= 4; ++k) {
            std::string s = fresh(name + "_s" + std::to_string(k));
            out.unknowns.push_back(s);
            Polynomial v = Polynomial::variable(s);
            sum_of_squares += v * v;
        }
        for (auto& eq : equations) eq = eq.substitute(name, sum_of_squares);
    }

    Polynomial combined;
    for (const auto& eq : equations) combined += eq * eq;
    out.equations.push_back(std::move(combined));
    return out;
}

}  // namespace eqset::wordeq
