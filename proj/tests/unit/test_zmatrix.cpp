#include "dwgns/errors.hpp"
#include "dwgns/zmatrix.hpp"

#include "../support/generators.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

using namespace dwgns;

namespace {

std::vector<GroupElement> rhs(const FiniteAbelianGroup& g, std::initializer_list<std::int64_t> values) {
    std::vector<GroupElement> out;
    for (auto v : values) {
        out.push_back(g.element({v}));
    }
    return out;
}

}  // namespace

TEST_CASE("smith_normal_form examples") {
    {
        const IntMatrix a{{2}};
        const auto snf = smith_normal_form(a);
        CHECK(snf.D == IntMatrix{{2}});
        CHECK(snf.U == IntMatrix{{1}});
        CHECK(snf.V == IntMatrix{{1}});
    }
    {
        const IntMatrix a{{0, 1}, {1, 0}};
        const auto snf = smith_normal_form(a);
        CHECK(snf.D == IntMatrix{{1, 0}, {0, 1}});
        CHECK(snf.U * a * snf.V == snf.D);
        CHECK(abs(snf.U.determinant()) == 1);
        CHECK(abs(snf.V.determinant()) == 1);
    }
    {
        const IntMatrix a(2, 3);
        const auto snf = smith_normal_form(a);
        CHECK(snf.D == IntMatrix(2, 3));
        CHECK(snf_violation(a, snf).empty());
    }
    {
        // Z/2 x Z/6 presented non-diagonally.
        const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
        const auto snf = smith_normal_form(a);
        CHECK(snf_violation(a, snf).empty());
        CHECK(snf.D(0, 0) == 2);
        CHECK(snf.D(1, 1) == 6);
        CHECK(snf.D(2, 2) == 12);
    }
    CHECK(smith_normal_form(IntMatrix()).D.rows() == 0);
}

TEST_CASE("smith_normal_form is deterministic and satisfies its invariants") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto rows = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
        const auto cols = static_cast<std::size_t>(gen::uniform(rng, 0, 5));
        const auto a = gen::matrix(rng, rows, cols, 9);
        const auto snf = smith_normal_form(a);
        INFO(a.to_string());
        CHECK(snf_violation(a, snf).empty());
        const auto again = smith_normal_form(a);
        CHECK(again.U == snf.U);
        CHECK(again.V == snf.V);
    }
}

TEST_CASE("snf_violation detects broken decompositions") {
    const IntMatrix a{{2, 0}, {0, 3}};
    auto snf = smith_normal_form(a);
    CHECK(snf_violation(a, snf).empty());
    auto bad = snf;
    bad.D = IntMatrix{{2, 0}, {0, 3}};
    CHECK(!snf_violation(a, bad).empty());
    bad = snf;
    bad.U = IntMatrix{{2, 0}, {0, 1}};
    CHECK(!snf_violation(a, bad).empty());
}

TEST_CASE("determinant") {
    CHECK(IntMatrix{{1, 2}, {3, 4}}.determinant() == -2);
    CHECK(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}.determinant() == -5);
    CHECK(IntMatrix().determinant() == 1);
    CHECK_THROWS_AS(IntMatrix(2, 3).determinant(), DimensionError);
}

TEST_CASE("count_solutions examples") {
    const auto z2 = parse_group("Z2");
    const auto z4 = parse_group("Z4");
    CHECK(count_solutions(IntMatrix(0, 1), {}, z2) == 2);
    CHECK(count_solutions(IntMatrix{{2}}, rhs(z4, {1}), z4) == 0);
    CHECK(count_solutions(IntMatrix{{2}}, rhs(z4, {2}), z4) == 2);
    const auto z3 = parse_group("Z3");
    CHECK(count_solutions(IntMatrix{{1, 0}, {0, 1}}, rhs(z3, {0, 0}), z3) == 1);
    const auto z5 = parse_group("Z5");
    CHECK(count_solutions(IntMatrix{{0}}, rhs(z5, {0}), z5) == 5);
    CHECK(count_solutions(IntMatrix{{0}}, rhs(z5, {3}), z5) == 0);
    CHECK_THROWS_AS(count_solutions(IntMatrix{{1}}, {}, z5), DimensionError);
}

TEST_CASE("brute_force_count examples and guard") {
    const auto z2 = parse_group("Z2");
    const auto z4 = parse_group("Z4");
    CHECK(brute_force_count(IntMatrix(0, 1), {}, z2) == 2);
    CHECK(brute_force_count(IntMatrix{{2}}, rhs(z4, {1}), z4) == 0);
    CHECK(brute_force_count(IntMatrix{{2}}, rhs(z4, {2}), z4) == 2);
    const auto z3 = parse_group("Z3");
    CHECK(brute_force_count(IntMatrix{{1, 0}, {0, 1}}, rhs(z3, {0, 0}), z3) == 1);
    const auto z5 = parse_group("Z5");
    CHECK(brute_force_count(IntMatrix{{0}}, rhs(z5, {0}), z5) == 5);
    CHECK_THROWS_AS(brute_force_count(IntMatrix(0, 3), {}, z5, 100), GuardError);
    CHECK(brute_force_count(IntMatrix(0, 3), {}, z5, 125) == 125);
}

TEST_CASE("count_solutions agrees with enumeration on random systems") {
    gen::Rng rng(2024);
    const std::vector<std::string> groups{"Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2xZ2", "Z2xZ4", "Z2xZ3"};
    for (int trial = 0; trial < 400; ++trial) {
        const auto g = gen::pick(rng, groups);
        const auto rows = static_cast<std::size_t>(gen::uniform(rng, 0, 3));
        const auto cols = static_cast<std::size_t>(gen::uniform(rng, 0, 3));
        const auto m = gen::matrix(rng, rows, cols, 4);
        std::vector<GroupElement> t;
        std::vector<std::vector<long>> oracle_rows;
        for (std::size_t i = 0; i < rows; ++i) {
            t.push_back(gen::element(rng, g));
            std::vector<long> r;
            for (std::size_t j = 0; j < cols; ++j) {
                r.push_back(m(i, j).get_si());
            }
            oracle_rows.push_back(r);
        }
        INFO(g.to_string() << " " << m.to_string());
        const Integer fast = count_solutions(m, t, g);
        CHECK(fast == brute_force_count(m, t, g));
        CHECK(fast == Integer(static_cast<unsigned long>(oracle::count_homomorphisms(g, cols, oracle_rows, t))));
    }
}

TEST_CASE("empty constraint list counts |G|^n") {
    for (const char* spec : {"Z1", "Z3", "Z2xZ4"}) {
        const auto g = parse_group(spec);
        for (std::size_t n = 0; n <= 4; ++n) {
            Integer expected = 1;
            for (std::size_t k = 0; k < n; ++k) {
                expected *= g.order();
            }
            CHECK(count_solutions(IntMatrix(0, n), {}, g) == expected);
        }
    }
}

TEST_CASE("count_solutions survives large coefficients") {
    const auto z6 = parse_group("Z6");
    IntMatrix m{{1}};
    m(0, 0) = Integer("123456789012345678901234567890");  // = 0 mod 6
    CHECK(count_solutions(m, rhs(z6, {0}), z6) == 6);
    CHECK(count_solutions(m, rhs(z6, {1}), z6) == 0);
    CHECK(brute_force_count(m, rhs(z6, {0}), z6) == 6);
}
