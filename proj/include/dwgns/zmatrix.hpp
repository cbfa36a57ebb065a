#pragma once

#include "dwgns/group.hpp"
#include "dwgns/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dwgns {

// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    void append_row(std::span<const Integer> values);

    IntMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;
    // Bareiss fraction-free elimination; square matrices only.
    Integer determinant() const;

    std::string to_string() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., d_i >= 0.
struct SnfDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

SnfDecomposition smith_normal_form(const IntMatrix& a);

// Verifies every SnfDecomposition invariant against the input; returns an
// empty string on success, otherwise a description of the first violation.
std::string snf_violation(const IntMatrix& a, const SnfDecomposition& snf);

// Number of x in G^cols with sum_j m[i][j] * x_j = t[i] for every row i.
Integer count_solutions(const IntMatrix& m, std::span<const GroupElement> t, const FiniteAbelianGroup& g);

// Default search-space limit for brute_force_count; DWGNS_MAX_ENUM overrides it.
std::uint64_t brute_force_limit();

// Same contract as count_solutions, by exhaustive enumeration of G^cols.
// Refuses with GuardError when |G|^cols exceeds `limit`.
Integer brute_force_count(const IntMatrix& m, std::span<const GroupElement> t, const FiniteAbelianGroup& g,
                          std::uint64_t limit = brute_force_limit());

}  // namespace dwgns
