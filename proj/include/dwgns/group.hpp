#pragma once

#include "dwgns/rational.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dwgns {

// Element of Z_{d1} x ... x Z_{dk}, stored as normalized residues.
struct GroupElement {
    std::vector<std::int64_t> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// A finite abelian group presented as an ordered product of cyclic groups.
//
// The factors are kept exactly as given (they are not reduced to invariant
// factors), so Z2xZ2 and Z4 are different objects and labels keep their
// user-facing coordinates. Z1 factors are allowed.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : orders_{1} {}
    explicit FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders);

    const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    Integer order() const;
    // Order as a machine integer; throws GuardError if it does not fit.
    std::uint64_t order_u64() const;

    GroupElement zero() const;
    // Reduces arbitrary integers into range.
    GroupElement element(std::span<const std::int64_t> values) const;
    GroupElement element(std::initializer_list<std::int64_t> values) const;
    bool contains(const GroupElement& x) const;

    GroupElement add(const GroupElement& x, const GroupElement& y) const;
    GroupElement sub(const GroupElement& x, const GroupElement& y) const;
    GroupElement negate(const GroupElement& x) const;
    GroupElement scalar_mul(const Integer& k, const GroupElement& x) const;
    GroupElement scalar_mul(std::int64_t k, const GroupElement& x) const;

    // All elements in lexicographic residue order.
    std::vector<GroupElement> enumerate() const;
    // Mixed-radix position of x in enumerate(), and its inverse.
    std::uint64_t index_of(const GroupElement& x) const;
    GroupElement element_at(std::uint64_t index) const;

    // "Z2xZ4"
    std::string to_string() const;

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    void check(const GroupElement& x) const;

    std::vector<std::int64_t> orders_;
};

// Parses `Z<d>(xZ<d>)*`, separator case-insensitive, d >= 1.
FiniteAbelianGroup parse_group(std::string_view spec);

std::string to_string(const GroupElement& x);

}  // namespace dwgns
