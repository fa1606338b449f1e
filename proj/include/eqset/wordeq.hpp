#pragma once

// Word-equation front end: parsing, bounded brute-force solving, and the
// encoding into a polynomial Diophantine system through the 2x2 matrix
// monoid.  The two unipotent generators
//
//     a -> [[1,0],[1,1]]     b -> [[1,1],[0,1]]
//
// generate a free monoid, and they generate exactly the determinant-1
// matrices with natural entries, so words over {a,b} embed into matrices and
// back without loss.

#include "eqset/alphabet.hpp"
#include "eqset/ints.hpp"
#include "eqset/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace eqset::wordeq {

struct WordEquation {
    Alphabet alphabet;
    Word lhs;
    Word rhs;

    std::size_t length() const { return lhs.size() + rhs.size(); }
};

/// Concrete syntax "<word>=<word>": lowercase letters are constants,
/// uppercase letters are variables, symbols interned in order of first
/// appearance.  Either side may be empty.
inline WordEquation parse_equation(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos)
        throw std::invalid_argument("parse_equation: missing '='");
    if (text.find('=', eq + 1) != std::string_view::npos)
        throw std::invalid_argument("parse_equation: more than one '='");

    WordEquation out;
    out.lhs = Word(text.substr(0, eq));
    out.rhs = Word(text.substr(eq + 1));
    for (std::string_view side : {std::string_view(out.lhs), std::string_view(out.rhs)})
        for (char c : side) {
            if (out.alphabet.has(c)) continue;
            if (c >= 'a' && c <= 'z')
                out.alphabet.add_constant(c);
            else if (c >= 'A' && c <= 'Z')
                out.alphabet.add_variable(c);
            else
                throw std::invalid_argument(std::string("parse_equation: illegal character '") + c + "'");
        }
    return out;
}

/// Assigns a constant word to every variable.
struct Substitution {
    std::map<char, Word> images;

    bool operator==(const Substitution& other) const = default;
    bool operator<(const Substitution& other) const { return images < other.images; }
};

inline Word substitute(std::string_view w, const Alphabet& alphabet, const Substitution& sub) {
    Word out;
    for (char c : w) {
        if (alphabet.is_variable(c)) {
            auto it = sub.images.find(c);
            if (it == sub.images.end())
                throw std::invalid_argument(std::string("substitute: no image for variable '") + c + "'");
            out += it->second;
        } else {
            out += c;
        }
    }
    return out;
}

inline bool satisfies(const WordEquation& eq, const Substitution& sub) {
    return substitute(eq.lhs, eq.alphabet, sub) == substitute(eq.rhs, eq.alphabet, sub);
}

namespace detail {

/// Constant words of length <= cap in shortlex order.
inline std::vector<Word> words_up_to(const std::vector<char>& constants, std::size_t cap) {
    std::vector<Word> out{Word()};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= cap; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (char c : constants) out.push_back(out[i] + c);
        level_begin = level_end;
    }
    return out;
}

}  // namespace detail

/// Every solution whose variable images all have length <= len_cap,
/// exhaustively, in lexicographic order of the substitution maps.
inline std::vector<Substitution> brute_force_wordeq(const WordEquation& eq, std::size_t len_cap) {
    const auto& vars = eq.alphabet.variables();
    const auto candidates = detail::words_up_to(eq.alphabet.constants(), len_cap);

    std::vector<Substitution> found;
    Substitution current;
    auto recurse = [&](auto&& self, std::size_t vi) -> void {
        if (vi == vars.size()) {
            if (satisfies(eq, current)) found.push_back(current);
            return;
        }
        for (const auto& w : candidates) {
            current.images[vars[vi]] = w;
            self(self, vi + 1);
        }
        current.images.erase(vars[vi]);
    };
    recurse(recurse, 0);
    std::sort(found.begin(), found.end());
    return found;
}

/// 2x2 integer matrix, row major.
struct Mat2 {
    Int m11, m12, m21, m22;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Int det() const { return m11 * m22 - m12 * m21; }

    bool nonneg() const { return m11 >= 0 && m12 >= 0 && m21 >= 0 && m22 >= 0; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }

    bool operator==(const Mat2& other) const = default;
    bool operator<(const Mat2& other) const {
        return std::tie(m11, m12, m21, m22) < std::tie(other.m11, other.m12, other.m21, other.m22);
    }
};

inline Mat2 generator_matrix(char c) {
    if (c == 'a') return {1, 0, 1, 1};
    if (c == 'b') return {1, 1, 0, 1};
    throw std::invalid_argument(std::string("generator_matrix: symbol '") + c + "' is not in {a,b}");
}

/// Product of generator matrices in word order; injective on words over {a,b}.
inline Mat2 matrix_of_word(std::string_view w) {
    Mat2 m = Mat2::identity();
    for (char c : w) m = m * generator_matrix(c);
    return m;
}

/// Inverse of matrix_of_word on the monoid of nonnegative determinant-1
/// matrices: greedily peel the generator whose inverse keeps all entries
/// nonnegative.  Row sums strictly decrease, so this terminates.
inline Word decode_matrix(Mat2 m) {
    if (!m.nonneg())
        throw std::invalid_argument("decode_matrix: negative entry");
    if (m.det() != 1)
        throw std::invalid_argument("decode_matrix: determinant is not 1");
    Word out;
    while (!(m == Mat2::identity())) {
        if (m.m21 >= m.m11 && m.m22 >= m.m12) {
            out += 'a';  // peel [[1,0],[1,1]]: subtract row 1 from row 2
            m = {m.m11, m.m12, m.m21 - m.m11, m.m22 - m.m12};
        } else if (m.m11 >= m.m21 && m.m12 >= m.m22) {
            out += 'b';  // peel [[1,1],[0,1]]: subtract row 2 from row 1
            m = {m.m11 - m.m21, m.m12 - m.m22, m.m21, m.m22};
        } else {
            throw std::invalid_argument("decode_matrix: not in the generated monoid");
        }
    }
    return out;
}

namespace detail {

struct PolyMat2 {
    Polynomial e11, e12, e21, e22;

    static PolyMat2 of_const(const Mat2& m) {
        return {Polynomial::constant(m.m11), Polynomial::constant(m.m12),
                Polynomial::constant(m.m21), Polynomial::constant(m.m22)};
    }

    friend PolyMat2 operator*(const PolyMat2& a, const PolyMat2& b) {
        return {a.e11 * b.e11 + a.e12 * b.e21, a.e11 * b.e12 + a.e12 * b.e22,
                a.e21 * b.e11 + a.e22 * b.e21, a.e21 * b.e12 + a.e22 * b.e22};
    }
};

}  // namespace detail

/// Name of the k-th matrix entry unknown for a variable, k in 1..4.
inline std::string entry_unknown(char variable, int k) {
    return std::string(1, variable) + std::to_string(k);
}

/// Encodes the equation as a polynomial system over the variables' matrix
/// entries: the two sides as symbolic matrix products must agree entrywise,
/// each variable matrix has determinant 1, and every unknown is nonnegative.
/// Restricted to the binary constant alphabet {a,b}.
inline PolynomialSystem encode_equation(const WordEquation& eq) {
    for (char c : eq.alphabet.constants())
        if (c != 'a' && c != 'b')
            throw std::invalid_argument(
                std::string("encode_equation: unsupported constant '") + c + "' (alphabet must be within {a,b})");

    PolynomialSystem ps;
    for (char v : eq.alphabet.variables())
        for (int k = 1; k <= 4; ++k) ps.unknowns.push_back(entry_unknown(v, k));

    auto side_product = [&](const Word& side) {
        detail::PolyMat2 acc = detail::PolyMat2::of_const(Mat2::identity());
        for (char c : side) {
            detail::PolyMat2 factor =
                eq.alphabet.is_variable(c)
                    ? detail::PolyMat2{Polynomial::variable(entry_unknown(c, 1)),
                                       Polynomial::variable(entry_unknown(c, 2)),
                                       Polynomial::variable(entry_unknown(c, 3)),
                                       Polynomial::variable(entry_unknown(c, 4))}
                    : detail::PolyMat2::of_const(generator_matrix(c));
            acc = acc * factor;
        }
        return acc;
    };

    detail::PolyMat2 lhs = side_product(eq.lhs);
    detail::PolyMat2 rhs = side_product(eq.rhs);
    ps.equations.push_back(lhs.e11 - rhs.e11);
    ps.equations.push_back(lhs.e12 - rhs.e12);
    ps.equations.push_back(lhs.e21 - rhs.e21);
    ps.equations.push_back(lhs.e22 - rhs.e22);

    for (char v : eq.alphabet.variables()) {
        Polynomial det = Polynomial::variable(entry_unknown(v, 1)) * Polynomial::variable(entry_unknown(v, 4)) -
                         Polynomial::variable(entry_unknown(v, 2)) * Polynomial::variable(entry_unknown(v, 3));
        ps.equations.push_back(det - Polynomial::constant(1));
    }

    ps.nonneg = ps.unknowns;
    return ps;
}

/// Matrix-entry assignment induced by a substitution, the direction used to
/// check the encoding against brute-force word solutions.
inline std::map<std::string, Int> assignment_of_substitution(const WordEquation& eq,
                                                             const Substitution& sub) {
    std::map<std::string, Int> out;
    for (char v : eq.alphabet.variables()) {
        Mat2 m = matrix_of_word(sub.images.at(v));
        out[entry_unknown(v, 1)] = m.m11;
        out[entry_unknown(v, 2)] = m.m12;
        out[entry_unknown(v, 3)] = m.m21;
        out[entry_unknown(v, 4)] = m.m22;
    }
    return out;
}

}  // namespace eqset::wordeq
