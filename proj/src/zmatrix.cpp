#include "dwgns/zmatrix.hpp"

#include "dwgns/errors.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace dwgns {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw DimensionError("ragged matrix literal");
        }
        for (long v : r) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

void IntMatrix::append_row(std::span<const Integer> values) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = values.size();
    }
    if (values.size() != cols_) {
        throw DimensionError("row of length " + std::to_string(values.size()) + " appended to matrix with " +
                             std::to_string(cols_) + " columns");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if ((*this)(i, j) != (*this)(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = rows_;
    if (n == 0) {
        return 1;
    }
    IntMatrix a = *this;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : ",[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) {
                s += ',';
            }
            s += (*this)(i, j).get_str();
        }
        s += ']';
    }
    return s + "]";
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionError("matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                             std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    }
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(a, j), m(b, j));
    }
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::swap(m(i, a), m(i, b));
    }
}

// row[dst] += k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        m(dst, j) += k * m(src, j);
    }
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, dst) += k * m(i, src);
    }
}

// Smallest nonzero |entry| in the trailing submatrix, row-major tie-break.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& d, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) {
                continue;
            }
            Integer a = abs(d(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    }
    return best;
}

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t k = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < k; ++t) {
        bool exhausted = false;
        while (true) {
            auto pivot = find_pivot(d, t);
            if (!pivot) {
                exhausted = true;
                break;
            }
            swap_rows(d, t, pivot->first);
            swap_rows(u, t, pivot->first);
            swap_cols(d, t, pivot->second);
            swap_cols(v, t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < d.rows(); ++i) {
                if (d(i, t) == 0) {
                    continue;
                }
                Integer q = d(i, t) / d(t, t);
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
                clean = clean && d(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j) {
                if (d(t, j) == 0) {
                    continue;
                }
                Integer q = d(t, j) / d(t, t);
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                clean = clean && d(t, j) == 0;
            }
            if (!clean) {
                continue;
            }
            // Row and column t are clear; enforce the divisibility chain.
            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < d.rows() && !offender; ++i) {
                for (std::size_t j = t + 1; j < d.cols(); ++j) {
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        offender = i;
                        break;
                    }
                }
            }
            if (!offender) {
                break;
            }
            add_row(d, t, *offender, 1);
            add_row(u, t, *offender, 1);
        }
        if (exhausted) {
            break;
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < d.cols(); ++j) {
                d(t, j) = -d(t, j);
            }
            for (std::size_t j = 0; j < u.cols(); ++j) {
                u(t, j) = -u(t, j);
            }
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

std::string snf_violation(const IntMatrix& a, const SnfDecomposition& snf) {
    const auto& [u, d, v] = snf;
    if (u.rows() != a.rows() || u.cols() != a.rows() || v.rows() != a.cols() || v.cols() != a.cols() ||
        d.rows() != a.rows() || d.cols() != a.cols()) {
        return "factor shapes do not match the input";
    }
    if (u * a * v != d) {
        return "U*A*V != D";
    }
    if (abs(u.determinant()) != 1) {
        return "U is not unimodular";
    }
    if (abs(v.determinant()) != 1) {
        return "V is not unimodular";
    }
    const std::size_t k = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (i != j && d(i, j) != 0) {
                return "D is not diagonal";
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (d(i, i) < 0) {
            return "negative diagonal entry";
        }
        if (i + 1 < k) {
            const Integer& cur = d(i, i);
            const Integer& next = d(i + 1, i + 1);
            bool divides = cur == 0 ? next == 0 : mpz_divisible_p(next.get_mpz_t(), cur.get_mpz_t()) != 0;
            if (!divides) {
                return "divisibility chain broken at position " + std::to_string(i);
            }
        }
    }
    return {};
}

namespace {

void check_system(const IntMatrix& m, std::span<const GroupElement> t, const FiniteAbelianGroup& g) {
    if (t.size() != m.rows()) {
        throw DimensionError("system has " + std::to_string(m.rows()) + " rows but " + std::to_string(t.size()) +
                             " right-hand sides");
    }
    for (const auto& x : t) {
        if (!g.contains(x)) {
            throw DimensionError("right-hand side " + to_string(x) + " is not an element of " + g.to_string());
        }
    }
}

}  // namespace

Integer count_solutions(const IntMatrix& m, std::span<const GroupElement> t, const FiniteAbelianGroup& g) {
    check_system(m, t, g);
    const SnfDecomposition snf = smith_normal_form(m);
    const std::size_t k = std::min(m.rows(), m.cols());

    Integer total = 1;
    for (std::size_t f = 0; f < g.rank(); ++f) {
        const Integer d = static_cast<long>(g.cyclic_orders()[f]);
        // s = U t, taken mod d
        std::vector<Integer> s(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < m.rows(); ++j) {
                acc += snf.U(i, j) * static_cast<long>(t[j].residues[f]);
            }
            mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
            s[i] = acc;
        }
        for (std::size_t i = 0; i < k; ++i) {
            Integer gcd_value;
            mpz_gcd(gcd_value.get_mpz_t(), snf.D(i, i).get_mpz_t(), d.get_mpz_t());
            if (!mpz_divisible_p(s[i].get_mpz_t(), gcd_value.get_mpz_t())) {
                return 0;
            }
            total *= gcd_value;
        }
        for (std::size_t i = k; i < m.rows(); ++i) {
            if (s[i] != 0) {
                return 0;
            }
        }
        for (std::size_t j = k; j < m.cols(); ++j) {
            total *= d;
        }
    }
    return total;
}

std::uint64_t brute_force_limit() { return env_limit("DWGNS_MAX_ENUM", 10'000'000ULL); }

Integer brute_force_count(const IntMatrix& m, std::span<const GroupElement> t, const FiniteAbelianGroup& g,
                          std::uint64_t limit) {
    check_system(m, t, g);
    Integer space = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        space *= g.order();
    }
    if (space > Integer(static_cast<unsigned long>(limit))) {
        throw GuardError("brute-force search space |G|^" + std::to_string(m.cols()) + " = " + space.get_str() +
                         " exceeds the limit " + std::to_string(limit));
    }
    const auto& orders = g.cyclic_orders();
    const std::size_t rank = orders.size();
    // Coefficients reduced per cyclic factor.
    std::vector<std::int64_t> coef(m.rows() * m.cols() * rank);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            for (std::size_t f = 0; f < rank; ++f) {
                Integer r;
                mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), static_cast<unsigned long>(orders[f]));
                coef[(i * m.cols() + j) * rank + f] = r.get_si();
            }
        }
    }
    const auto elements = g.enumerate();
    const std::size_t n = elements.size();
    std::vector<std::size_t> idx(m.cols(), 0);
    Integer count = 0;
    const std::uint64_t total = space.get_ui();
    for (std::uint64_t step = 0; step < total; ++step) {
        bool ok = true;
        for (std::size_t i = 0; i < m.rows() && ok; ++i) {
            for (std::size_t f = 0; f < rank; ++f) {
                std::int64_t acc = 0;
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    acc = (acc + coef[(i * m.cols() + j) * rank + f] * elements[idx[j]].residues[f]) % orders[f];
                }
                if (acc != t[i].residues[f]) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            ++count;
        }
        for (std::size_t j = m.cols(); j-- > 0;) {
            if (++idx[j] < n) {
                break;
            }
            idx[j] = 0;
        }
    }
    return count;
}

}  // namespace dwgns
