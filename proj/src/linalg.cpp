#include "dwgns/linalg.hpp"

#include "dwgns/errors.hpp"

#include <algorithm>
#include <map>

namespace dwgns {

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
    const std::size_t cols = dense.empty() ? 0 : dense.front().size();
    RationalMatrix m(dense.size(), cols);
    for (std::size_t i = 0; i < dense.size(); ++i) {
        if (dense[i].size() != cols) {
            throw DimensionError("ragged rational matrix");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (dense[i][j] != 0) {
                m.rows_[i].emplace_back(j, dense[i][j]);
            }
        }
    }
    return m;
}

std::size_t RationalMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) {
        n += r.size();
    }
    return n;
}

Rational RationalMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_.size() || j >= cols_) {
        throw DimensionError("matrix index out of range");
    }
    const Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
        return it->second;
    }
    return 0;
}

void RationalMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    if (i >= rows_.size() || j >= cols_) {
        throw DimensionError("matrix index out of range");
    }
    Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    const bool present = it != r.end() && it->first == j;
    if (value == 0) {
        if (present) {
            r.erase(it);
        }
    } else if (present) {
        it->second = value;
    } else {
        r.insert(it, Entry{j, value});
    }
}

void RationalMatrix::set_row(std::size_t i, Row entries) {
    if (i >= rows_.size()) {
        throw DimensionError("matrix row out of range");
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].first >= cols_ || entries[k].second == 0 ||
            (k > 0 && entries[k - 1].first >= entries[k].first)) {
            throw ContractError("set_row: entries must be sorted, in range and nonzero");
        }
    }
    rows_[i] = std::move(entries);
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& [j, v] : rows_[i]) {
            t.rows_[j].emplace_back(i, v);
        }
    }
    return t;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
    RationalMatrix s(rows_.size(), cols_);
    if (factor == 0) {
        return s;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& [j, v] : rows_[i]) {
            s.rows_[i].emplace_back(j, v * factor);
        }
    }
    return s;
}

std::vector<std::vector<Rational>> RationalMatrix::dense() const {
    std::vector<std::vector<Rational>> d(rows_.size(), std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& [j, v] : rows_[i]) {
            d[i][j] = v;
        }
    }
    return d;
}

nlohmann::json RationalMatrix::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        auto it = rows_[i].begin();
        for (std::size_t j = 0; j < cols_; ++j) {
            if (it != rows_[i].end() && it->first == j) {
                row.push_back(to_string(it->second));
                ++it;
            } else {
                row.push_back("0");
            }
        }
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

using Row = RationalMatrix::Row;

// row -= factor * other, both sorted by column.
void subtract_scaled(Row& row, const Row& other, const Rational& factor) {
    Row merged;
    merged.reserve(row.size() + other.size());
    auto a = row.begin();
    auto b = other.begin();
    while (a != row.end() || b != other.end()) {
        if (b == other.end() || (a != row.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == row.end() || b->first < a->first) {
            merged.emplace_back(b->first, -factor * b->second);
            ++b;
        } else {
            Rational v = a->second - factor * b->second;
            if (v != 0) {
                merged.emplace_back(a->first, std::move(v));
            }
            ++a;
            ++b;
        }
    }
    row = std::move(merged);
}

// Reduced row echelon form built one row at a time. Pivot rows are
// normalized to a leading 1 and only hold entries at or right of their lead.
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}

    // Returns false if the row reduced to 0 = rhs with rhs != 0.
    bool add(Row row, Rational rhs) {
        std::size_t p = 0;
        while (p < row.size()) {
            auto it = pivot_of_.find(row[p].first);
            if (it == pivot_of_.end()) {
                ++p;
                continue;
            }
            const Rational factor = row[p].second;
            subtract_scaled(row, rows_[it->second], factor);
            rhs -= factor * rhs_[it->second];
        }
        if (row.empty()) {
            return rhs == 0;
        }
        const Rational lead = row.front().second;
        for (auto& e : row) {
            e.second /= lead;
        }
        rhs /= lead;
        pivot_of_.emplace(row.front().first, rows_.size());
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    // Clears every pivot column outside its own row.
    void back_substitute() {
        for (auto pv = pivot_of_.rbegin(); pv != pivot_of_.rend(); ++pv) {
            const std::size_t col = pv->first;
            const std::size_t src = pv->second;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                if (r == src) {
                    continue;
                }
                Row& row = rows_[r];
                auto it = std::lower_bound(row.begin(), row.end(), col,
                                           [](const RationalMatrix::Entry& e, std::size_t c) { return e.first < c; });
                if (it == row.end() || it->first != col) {
                    continue;
                }
                const Rational factor = it->second;
                subtract_scaled(row, rows_[src], factor);
                rhs_[r] -= factor * rhs_[src];
            }
        }
    }

    const std::map<std::size_t, std::size_t>& pivots() const { return pivot_of_; }
    const Row& row(std::size_t r) const { return rows_[r]; }
    const Rational& rhs(std::size_t r) const { return rhs_[r]; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t cols_;
    std::vector<Row> rows_;
    std::vector<Rational> rhs_;
    std::map<std::size_t, std::size_t> pivot_of_;
};

}  // namespace

std::size_t rank(const RationalMatrix& a) {
    Echelon e(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        e.add(a.row(i), 0);
    }
    return e.rank();
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& a) {
    Echelon e(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        e.add(a.row(i), 0);
    }
    e.back_substitute();
    std::vector<bool> is_pivot(a.cols(), false);
    for (const auto& [col, r] : e.pivots()) {
        is_pivot[col] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<Rational> v(a.cols());
        v[f] = 1;
        for (const auto& [col, r] : e.pivots()) {
            const Row& row = e.row(r);
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const RationalMatrix::Entry& x, std::size_t c) { return x.first < c; });
            if (it != row.end() && it->first == f) {
                v[col] = -it->second;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (b.size() != a.rows()) {
        throw DimensionError("right-hand side length does not match row count");
    }
    Echelon e(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!e.add(a.row(i), b[i])) {
            return std::nullopt;
        }
    }
    e.back_substitute();
    std::vector<Rational> x(a.cols());
    for (const auto& [col, r] : e.pivots()) {
        x[col] = e.rhs(r);
    }
    return x;
}

}  // namespace dwgns
