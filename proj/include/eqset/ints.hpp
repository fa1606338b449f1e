#pragma once

// Exact integer vectors and matrices shared by the solver modules.
// Everything is arbitrary precision: solution coordinates grow like
// 2^(path length) under repeated doubling, so fixed-width arithmetic
// would silently corrupt enumeration.

#include <boost/functional/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqset {

using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

/// Dense integer vector with a fixed positive dimension.
class IntVec {
public:
    explicit IntVec(std::vector<Int> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw std::invalid_argument("IntVec: dimension must be positive");
    }

    IntVec(std::initializer_list<long long> values)
        : IntVec(std::vector<Int>(values.begin(), values.end())) {}

    static IntVec zero(std::size_t dim) {
        return IntVec(std::vector<Int>(dim, Int(0)));
    }

    std::size_t dim() const { return entries_.size(); }
    const Int& operator[](std::size_t i) const { return entries_[i]; }
    Int& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Int>& entries() const { return entries_; }

    bool operator==(const IntVec& other) const = default;

    /// Lexicographic order; used everywhere canonical state ordering matters.
    bool operator<(const IntVec& other) const {
        return entries_ < other.entries_;
    }

    IntVec& operator+=(const IntVec& other) {
        check_same_dim(other);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            entries_[i] += other.entries_[i];
        return *this;
    }

    friend IntVec operator+(IntVec lhs, const IntVec& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend IntVec operator*(const Int& scalar, IntVec v) {
        for (auto& e : v.entries_) e *= scalar;
        return v;
    }

    std::string to_string() const {
        std::string out = "(";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) out += ",";
            out += entries_[i].str();
        }
        out += ")";
        return out;
    }

private:
    void check_same_dim(const IntVec& other) const {
        if (other.dim() != dim())
            throw std::invalid_argument("IntVec: dimension mismatch");
    }

    std::vector<Int> entries_;
};

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const {
        std::size_t h = boost::hash<std::size_t>()(v.dim());
        for (const auto& e : v.entries()) boost::hash_combine(h, e);
        return h;
    }
};

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entry count does not match shape");
    }

    static IntMatrix identity(std::size_t n) {
        std::vector<Int> e(n * n, Int(0));
        for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
        return IntMatrix(n, n, std::move(e));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Int>& entries() const { return entries_; }

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/// 1-norm: sum of absolute values of the entries.
inline Int norm1(const IntVec& v) {
    Int sum = 0;
    for (const auto& e : v.entries()) sum += abs_int(e);
    return sum;
}

inline Int norm1(const IntMatrix& m) {
    Int sum = 0;
    for (const auto& e : m.entries()) sum += abs_int(e);
    return sum;
}

inline IntVec matvec(const IntMatrix& m, const IntVec& v) {
    if (m.cols() != v.dim())
        throw std::invalid_argument("matvec: shape mismatch");
    std::vector<Int> out(m.rows(), Int(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r] += m.at(r, c) * v[c];
    return IntVec(std::move(out));
}

/// Sum of the selected columns, i.e. the image of a 0/1 indicator vector.
inline IntVec column_indicator_sum(const IntMatrix& m, const std::vector<std::size_t>& cols) {
    std::vector<Int> out(m.rows(), Int(0));
    for (std::size_t c : cols) {
        if (c >= m.cols())
            throw std::invalid_argument("column_indicator_sum: column index out of range");
        for (std::size_t r = 0; r < m.rows(); ++r) out[r] += m.at(r, c);
    }
    return IntVec(std::move(out));
}

/// A square system A x = c, solved over the naturals.
class LinearSystem {
public:
    LinearSystem(IntMatrix a, IntVec c) : a_(std::move(a)), c_(std::move(c)) {
        if (a_.rows() != a_.cols())
            throw std::invalid_argument("LinearSystem: matrix must be square");
        if (a_.rows() != c_.dim())
            throw std::invalid_argument("LinearSystem: target dimension mismatch");
    }

    const IntMatrix& a() const { return a_; }
    const IntVec& c() const { return c_; }
    std::size_t dim() const { return c_.dim(); }

    /// |c|_1 <= |A|_1; the automaton construction requires this.
    bool is_normalized() const { return norm1(c_) <= norm1(a_); }

    bool operator==(const LinearSystem& other) const = default;

private:
    IntMatrix a_;
    IntVec c_;
};

}  // namespace eqset
