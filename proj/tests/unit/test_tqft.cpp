#include "dwgns/errors.hpp"
#include "dwgns/tqft.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace dwgns;

namespace {

BasisElement torus_element(const FiniteAbelianGroup& g, std::int64_t a, std::int64_t b) {
    return BasisElement{{Label{g.element({a}), g.element({b})}}, {}};
}

// Closed-form pattern: product of Kronecker deltas (without the 1/|G| factor).
bool pattern(const SurfaceObject& s, const BasisElement& b, const BasisElement& d, const FiniteAbelianGroup& g) {
    for (std::size_t k = 0; k < s.genus; ++k) {
        if (b.handles[k].a != d.handles[k].b || b.handles[k].b != d.handles[k].a) {
            return false;
        }
    }
    for (std::size_t j = 0; j < s.arcs.size(); ++j) {
        if (g.add(b.rings[j], d.rings[j]) != s.arcs[j].b) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("standard_closure shapes") {
    const auto g = parse_group("Z3");
    const SurfaceObject torus{1, {}};
    const auto c = standard_closure(torus, torus_element(g, 1, 2), torus_element(g, 2, 1), g);
    CHECK(c.linking() == IntMatrix{{0, 1}, {1, 0}});
    CHECK(invariant_s3(c, g) == Rational(1, 3));

    const SurfaceObject disk{0, {Label{g.element({2}), g.element({1})}}};
    const BasisElement b{{}, {g.element({0})}};
    const BasisElement d{{}, {g.element({1})}};
    const auto arc = standard_closure(disk, b, d, g);
    CHECK(arc.linking() == IntMatrix{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
    CHECK(arc.label(1) == Label{g.element({0}), g.element({2})});
    CHECK(arc.label(2) == Label{g.element({1}), g.element({2})});
    CHECK(invariant_s3(arc, g) == Rational(1, 3));

    const SurfaceObject sphere{0, {}};
    CHECK(invariant_s3(standard_closure(sphere, {}, {}, g), g) == Rational(1, 3));

    CHECK_THROWS_AS(standard_closure(torus, BasisElement{}, torus_element(g, 0, 0), g), DimensionError);
}

TEST_CASE("pairing_entry examples") {
    const auto g = parse_group("Z2");
    const SurfaceObject torus{1, {}};
    CHECK(pairing_entry(torus, torus_element(g, 1, 0), torus_element(g, 0, 1), g) == Rational(1, 2));
    CHECK(pairing_entry(torus, torus_element(g, 1, 0), torus_element(g, 1, 0), g) == 0);
    const SurfaceObject disk{0, {Label{g.zero(), g.element({1})}}};
    CHECK(pairing_entry(disk, BasisElement{{}, {g.element({0})}}, BasisElement{{}, {g.element({1})}}, g) ==
          Rational(1, 2));
}

TEST_CASE("pairing entries follow the delta pattern exhaustively") {
    struct Case {
        const char* group;
        std::size_t genus;
        std::size_t arcs;
    };
    for (const Case c : {Case{"Z2", 1, 0}, Case{"Z3", 1, 0}, Case{"Z2", 0, 2}, Case{"Z2", 1, 1}, Case{"Z2", 2, 0},
                         Case{"Z2xZ2", 0, 1}, Case{"Z3", 0, 1}}) {
        const auto g = parse_group(c.group);
        SurfaceObject s{c.genus, {}};
        for (std::size_t j = 0; j < c.arcs; ++j) {
            s.arcs.push_back(Label{g.element_at(j % g.order_u64()), g.element_at((j + 1) % g.order_u64())});
        }
        const auto elements = basis(s, g);
        const auto p = surface_pairing_matrix(s, g);
        const auto scaled = p.scaled(g.order());
        for (std::size_t i = 0; i < elements.size(); ++i) {
            CHECK(scaled.row(i).size() == 1);
            for (std::size_t k = 0; k < elements.size(); ++k) {
                const bool hit = pattern(s, elements[i], elements[k], g);
                CHECK(scaled.at(i, k) == (hit ? 1 : 0));
            }
        }
        CHECK(scaled.transpose().nonzeros() == elements.size());
        for (std::size_t k = 0; k < elements.size(); ++k) {
            CHECK(scaled.transpose().row(k).size() == 1);
        }
    }
}

TEST_CASE("space_dimension examples") {
    CHECK(space_dimension(SurfaceObject{1, {}}, parse_group("Z2")) == 4);
    const auto z2 = parse_group("Z2");
    CHECK(space_dimension(SurfaceObject{2, {Label{z2.zero(), z2.element({1})}}}, z2) == 32);
    const auto z1 = parse_group("Z1");
    for (std::size_t genus = 0; genus < 3; ++genus) {
        CHECK(space_dimension(SurfaceObject{genus, {Label{z1.zero(), z1.zero()}}}, z1) == 1);
    }
    CHECK(space_dimension(SurfaceObject{0, {}}, z2) == 1);
    CHECK_THROWS_AS(space_dimension(SurfaceObject{7, {}}, z2), GuardError);
}

TEST_CASE("large pairing matrix uses the threaded path") {
    const auto g = parse_group("Z3");
    const SurfaceObject s{1, {Label{g.element({1}), g.element({2})}}};
    const auto p = surface_pairing_matrix(s, g);
    CHECK(p.rows() == 27);
    const auto z2 = parse_group("Z2");
    const SurfaceObject big{3, {}};
    const auto q = surface_pairing_matrix(big, z2);
    CHECK(q.rows() == 64);
    CHECK(rank(q) == 64);
    const SurfaceObject bigger{2, {Label{z2.zero(), z2.zero()}, Label{z2.element({1}), z2.zero()}}};
    CHECK(space_dimension(bigger, z2) == 64);
    const SurfaceObject biggest{3, {Label{z2.zero(), z2.zero()}}};
    const auto r = surface_pairing_matrix(biggest, z2);
    CHECK(r.rows() == 128);
    CHECK(r.nonzeros() == 128);
}

TEST_CASE("coordinates recover basis coefficients") {
    const auto g = parse_group("Z2");
    const SurfaceObject torus{1, {}};
    const auto d10 = torus_element(g, 1, 0);
    const auto d01 = torus_element(g, 0, 1);

    const auto self = coordinates(torus, pair_values_of(torus, {{1, d10}}, g), g);
    for (const auto& [b, c] : self) {
        CHECK(c == (b == d10 ? 1 : 0));
    }

    const auto zero = coordinates(torus, {}, g);
    CHECK(zero.size() == 4);
    for (const auto& [b, c] : zero) {
        CHECK(c == 0);
    }

    const auto both = coordinates(torus, pair_values_of(torus, {{1, d10}, {1, d01}}, g), g);
    CHECK(both.at(d10) == 1);
    CHECK(both.at(d01) == 1);
    CHECK(both.at(torus_element(g, 0, 0)) == 0);

    const auto mixed = coordinates(torus, pair_values_of(torus, {{Rational(2, 3), d10}, {-5, d01}}, g), g);
    CHECK(mixed.at(d10) == Rational(2, 3));
    CHECK(mixed.at(d01) == -5);

    std::map<BasisElement, Rational> alien{{BasisElement{}, 1}};
    CHECK_THROWS_AS(coordinates(torus, alien, g), DimensionError);
}

TEST_CASE("transition amplitudes of identity cylinders") {
    const auto g = parse_group("Z2");
    const SurfaceObject torus{1, {}};
    const auto elements = basis(torus, g);
    for (const auto& b : elements) {
        for (const auto& d : elements) {
            const auto p = cylinder_presentation(torus, b, d, g);
            CHECK(transition_amplitude(p, g) == pairing_entry(torus, b, d, g));
            const auto closure = standard_closure(torus, b, d, g);
            CHECK(transition_amplitude(p, g) == oracle::link_value(closure, g));
        }
    }
    HomologyPresentation s3;
    CHECK(transition_amplitude(s3, g) == Rational(1, 2));

    // T^2 u T^2: the glued manifold is two copies of S^3.
    const auto b = elements[1];
    const auto d = elements[2];
    const auto two = closed_presentation(
        disjoint_union(standard_closure(torus, b, d, g), standard_closure(torus, d, b, g)), g);
    CHECK(two.manifold_components == 2);
    CHECK(transition_amplitude(two, g) == pairing_entry(torus, b, d, g) * pairing_entry(torus, d, b, g));
}

TEST_CASE("surface JSON") {
    const auto g = parse_group("Z2xZ2");
    const auto s = surface_from_json(nlohmann::json::parse(R"({"genus":2,"arcs":[[[1,0],[0,1]]]})"), g);
    CHECK(s.genus == 2);
    REQUIRE(s.arcs.size() == 1);
    CHECK(s.arcs[0].b == g.element({0, 1}));
    CHECK(to_json(s).dump() == R"({"arcs":[[[1,0],[0,1]]],"genus":2})");
    CHECK_THROWS_AS(surface_from_json(nlohmann::json::parse(R"({"genus":-1})"), g), ParseError);
    CHECK_THROWS_AS(surface_from_json(nlohmann::json::parse(R"({"arcs":[[[1],[0]]]})"), g), ParseError);
}
