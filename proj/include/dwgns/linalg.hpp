#pragma once

#include "dwgns/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace dwgns {

// Exact rational matrix with sparse rows. Only nonzero entries are stored,
// each row sorted by column.
class RationalMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;
    using Row = std::vector<Entry>;

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
    static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& dense);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    Rational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& value);
    const Row& row(std::size_t i) const { return rows_.at(i); }
    // `entries` must be sorted by column and free of zeros.
    void set_row(std::size_t i, Row entries);

    RationalMatrix transpose() const;
    RationalMatrix scaled(const Rational& factor) const;
    std::vector<std::vector<Rational>> dense() const;

    // Array of rows of "p/q" strings.
    nlohmann::json to_json() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

std::size_t rank(const RationalMatrix& a);

// Basis of {x : A x = 0}, one vector per free column.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& a);

// Some x with A x = b (free variables set to 0), or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace dwgns
