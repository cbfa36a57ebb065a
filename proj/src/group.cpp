#include "dwgns/group.hpp"

#include "dwgns/errors.hpp"

#include <cctype>
#include <limits>

namespace dwgns {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t d) {
    std::int64_t r = v % d;
    return r < 0 ? r + d : r;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
    if (orders_.empty()) {
        throw ContractError("a group needs at least one cyclic factor (use Z1 for the trivial group)");
    }
    for (auto d : orders_) {
        if (d < 1) {
            throw ContractError("cyclic order " + std::to_string(d) + " must be >= 1");
        }
    }
}

Integer FiniteAbelianGroup::order() const {
    Integer n = 1;
    for (auto d : orders_) {
        n *= static_cast<long>(d);
    }
    return n;
}

std::uint64_t FiniteAbelianGroup::order_u64() const {
    Integer n = order();
    if (!n.fits_ulong_p()) {
        throw GuardError("group order " + n.get_str() + " does not fit a machine word");
    }
    return n.get_ui();
}

GroupElement FiniteAbelianGroup::zero() const {
    return GroupElement{std::vector<std::int64_t>(orders_.size(), 0)};
}

GroupElement FiniteAbelianGroup::element(std::span<const std::int64_t> values) const {
    if (values.size() != orders_.size()) {
        throw DimensionError("element has " + std::to_string(values.size()) + " residues, group " +
                             to_string() + " has " + std::to_string(orders_.size()) + " factors");
    }
    GroupElement x;
    x.residues.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        x.residues.push_back(mod(values[i], orders_[i]));
    }
    return x;
}

GroupElement FiniteAbelianGroup::element(std::initializer_list<std::int64_t> values) const {
    return element(std::span<const std::int64_t>(values.begin(), values.size()));
}

bool FiniteAbelianGroup::contains(const GroupElement& x) const {
    if (x.residues.size() != orders_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (x.residues[i] < 0 || x.residues[i] >= orders_[i]) {
            return false;
        }
    }
    return true;
}

void FiniteAbelianGroup::check(const GroupElement& x) const {
    if (x.residues.size() != orders_.size()) {
        throw DimensionError("element " + dwgns::to_string(x) + " does not belong to " + to_string());
    }
}

GroupElement FiniteAbelianGroup::add(const GroupElement& x, const GroupElement& y) const {
    check(x);
    check(y);
    GroupElement r = x;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        r.residues[i] = mod(x.residues[i] + y.residues[i], orders_[i]);
    }
    return r;
}

GroupElement FiniteAbelianGroup::sub(const GroupElement& x, const GroupElement& y) const {
    return add(x, negate(y));
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& x) const {
    check(x);
    GroupElement r = x;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        r.residues[i] = mod(-x.residues[i], orders_[i]);
    }
    return r;
}

GroupElement FiniteAbelianGroup::scalar_mul(const Integer& k, const GroupElement& x) const {
    check(x);
    GroupElement r = x;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        Integer d = static_cast<long>(orders_[i]);
        Integer kr = k % d;  // truncated, may be negative
        Integer v = (kr * static_cast<long>(x.residues[i])) % d;
        if (v < 0) {
            v += d;
        }
        r.residues[i] = v.get_si();
    }
    return r;
}

GroupElement FiniteAbelianGroup::scalar_mul(std::int64_t k, const GroupElement& x) const {
    return scalar_mul(Integer(static_cast<long>(k)), x);
}

std::vector<GroupElement> FiniteAbelianGroup::enumerate() const {
    const std::uint64_t n = order_u64();
    std::vector<GroupElement> out;
    out.reserve(n);
    GroupElement x = zero();
    for (std::uint64_t count = 0; count < n; ++count) {
        out.push_back(x);
        // odometer, last factor fastest
        for (std::size_t i = orders_.size(); i-- > 0;) {
            if (++x.residues[i] < orders_[i]) {
                break;
            }
            x.residues[i] = 0;
        }
    }
    return out;
}

std::uint64_t FiniteAbelianGroup::index_of(const GroupElement& x) const {
    check(x);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        idx = idx * static_cast<std::uint64_t>(orders_[i]) + static_cast<std::uint64_t>(x.residues[i]);
    }
    return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::uint64_t index) const {
    GroupElement x = zero();
    for (std::size_t i = orders_.size(); i-- > 0;) {
        const auto d = static_cast<std::uint64_t>(orders_[i]);
        x.residues[i] = static_cast<std::int64_t>(index % d);
        index /= d;
    }
    if (index != 0) {
        throw ContractError("element index out of range for " + to_string());
    }
    return x;
}

std::string FiniteAbelianGroup::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i > 0) {
            s += 'x';
        }
        s += 'Z' + std::to_string(orders_[i]);
    }
    return s;
}

FiniteAbelianGroup parse_group(std::string_view spec) {
    std::vector<std::int64_t> orders;
    std::size_t pos = 0;
    auto fail = [&](std::string_view token, const std::string& why) -> ParseError {
        return ParseError("group spec '" + std::string(spec) + "': " + why + " at token '" +
                          std::string(token) + "'");
    };
    if (spec.empty()) {
        throw ParseError("empty group spec");
    }
    while (true) {
        std::size_t end = pos;
        while (end < spec.size() && spec[end] != 'x' && spec[end] != 'X') {
            ++end;
        }
        std::string_view token = spec.substr(pos, end - pos);
        if (token.size() < 2 || token[0] != 'Z') {
            throw fail(token, "expected Z<d>");
        }
        std::int64_t d = 0;
        for (char c : token.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw fail(token, "non-digit order");
            }
            if (d > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
                throw fail(token, "order too large");
            }
            d = d * 10 + (c - '0');
        }
        if (d < 1) {
            throw fail(token, "cyclic order must be >= 1");
        }
        orders.push_back(d);
        if (end == spec.size()) {
            break;
        }
        pos = end + 1;
        if (pos == spec.size()) {
            throw fail("", "dangling separator");
        }
    }
    return FiniteAbelianGroup(std::move(orders));
}

std::string to_string(const GroupElement& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.residues.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += std::to_string(x.residues[i]);
    }
    return s + "]";
}

}  // namespace dwgns
