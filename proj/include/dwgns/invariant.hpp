#pragma once

#include "dwgns/group.hpp"
#include "dwgns/link.hpp"
#include "dwgns/rational.hpp"
#include "dwgns/zmatrix.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dwgns {

// phi(sum_j coefficients[j] * mu_j) = value
struct ConstraintRow {
    std::vector<Integer> coefficients;
    GroupElement value;
};

// Generators are meridian classes mu_1..mu_n. Relation rows must vanish
// under phi; constraint rows pin phi on boundary classes.
struct HomologyPresentation {
    std::size_t generators = 0;
    IntMatrix relations;
    std::vector<ConstraintRow> constraints;
    std::size_t manifold_components = 1;
};

// Groupoid cardinality of G-bundles on the complement of an all-Wilson link
// in S^3: 1/|G| if b_i = sum_j m_ij a_j holds for every component, else 0.
Rational invariant_s3(const LabeledLinkingData& d, const FiniteAbelianGroup& g);

// Surgery presentation of the closed manifold described by the surgery
// components, with the Wilson components as boundary constraints.
HomologyPresentation closed_presentation(const LabeledLinkingData& d, const FiniteAbelianGroup& g);

// count_solutions over closed_presentation(d), divided by |G|^manifold_components.
Rational invariant_closed(const LabeledLinkingData& d, const FiniteAbelianGroup& g);

Rational invariant_presentation(const HomologyPresentation& p, const FiniteAbelianGroup& g);

// Same value as invariant_presentation, counted by enumeration (test oracle).
Rational invariant_presentation_brute_force(const HomologyPresentation& p, const FiniteAbelianGroup& g,
                                            std::uint64_t limit = brute_force_limit());

enum class Twist { right, left };

// Removes a full twist: right lowers the framing by one and b -> b - a,
// left raises it and b -> b + a.
struct Move1 {
    std::size_t component = 0;
    Twist direction = Twist::right;
};

// Splits a Wilson component (a,b) into two strands (a,b1), (a,b2) summed over
// b1 + b2 = b. The first strand links component k first_linking[k] times
// (empty: it keeps the whole row) and the second takes the remainder; the
// framings satisfy f1 + f2 + 2 * mutual = f. Without first_framing the first
// strand gets f - 2 * mutual and the second is 0-framed.
struct Move2 {
    std::size_t component = 0;
    std::vector<std::int64_t> first_linking;
    std::optional<std::int64_t> first_framing;
    std::int64_t mutual = 0;
};

// Adds `sign` to the linking number of i and j together with b_i += sign*a_j
// and b_j += sign*a_i. sign = -1 removes a positive clasp. For i == j the
// framing moves by 2*sign.
struct Move3 {
    std::size_t i = 0;
    std::size_t j = 0;
    int sign = -1;
};

// (a,b) -> (a, b + sign*c) on the component, plus a new 0-framed ring
// labelled (sign*c, a) linking it once.
struct RingRelation {
    std::size_t component = 0;
    GroupElement c;
    int sign = 1;
};

using Move = std::variant<Move1, Move2, Move3, RingRelation>;

std::string describe(const Move& move);

FormalSum apply_move(const LabeledLinkingData& d, const Move& move, const FiniteAbelianGroup& g);

struct Reduction {
    FormalSum result;
    std::vector<Move> trace;
};

// Rewrites an all-Wilson S^3 link to zero linking matrix using Move3 on
// off-diagonal entries and Move1 on framings.
Reduction reduce(const LabeledLinkingData& d, const FiniteAbelianGroup& g);

// Value of an unlinked, untwisted S^3 link: 1/|G| iff every b vanishes.
Rational unlinked_value(const LabeledLinkingData& d, const FiniteAbelianGroup& g);

// I(S^3) / I(S^1 x S^2), computed from both surgery presentations.
Rational eta(const FiniteAbelianGroup& g);

}  // namespace dwgns
