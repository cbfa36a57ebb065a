#pragma once

// Test-only oracles. They enumerate homomorphisms directly and share no code
// path with count_solutions, the Smith normal form, or the closed-form S^3 rule.

#include "dwgns/group.hpp"
#include "dwgns/link.hpp"
#include "dwgns/rational.hpp"

#include <cstdint>
#include <vector>

namespace dwgns::oracle {

// x = sum_j coef_j * phi_j computed by repeated addition.
inline GroupElement combine(const FiniteAbelianGroup& g, const std::vector<long>& coef,
                            const std::vector<GroupElement>& phi) {
    GroupElement acc = g.zero();
    for (std::size_t j = 0; j < coef.size(); ++j) {
        const long k = coef[j];
        const GroupElement step = k >= 0 ? phi[j] : g.negate(phi[j]);
        for (long r = 0; r < (k >= 0 ? k : -k); ++r) {
            acc = g.add(acc, step);
        }
    }
    return acc;
}

// Number of phi in G^n satisfying rows * phi = rhs, by enumeration.
inline std::uint64_t count_homomorphisms(const FiniteAbelianGroup& g, std::size_t n,
                                         const std::vector<std::vector<long>>& rows,
                                         const std::vector<GroupElement>& rhs) {
    const auto elements = g.enumerate();
    std::vector<std::size_t> idx(n, 0);
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < n; ++j) {
        total *= elements.size();
    }
    std::uint64_t count = 0;
    std::vector<GroupElement> phi(n);
    for (std::uint64_t step = 0; step < total; ++step) {
        for (std::size_t j = 0; j < n; ++j) {
            phi[j] = elements[idx[j]];
        }
        bool ok = true;
        for (std::size_t r = 0; r < rows.size() && ok; ++r) {
            ok = combine(g, rows[r], phi) == rhs[r];
        }
        count += ok ? 1 : 0;
        for (std::size_t j = n; j-- > 0;) {
            if (++idx[j] < elements.size()) {
                break;
            }
            idx[j] = 0;
        }
    }
    return count;
}

inline std::vector<long> row_of(const LabeledLinkingData& d, std::size_t i) {
    std::vector<long> r;
    for (std::size_t j = 0; j < d.size(); ++j) {
        r.push_back(d.linking(i, j).get_si());
    }
    return r;
}

// Bundles on the link exterior (surgered along surgery components), compatible
// with the labels, divided by |G| per ambient component.
inline Rational link_value(const LabeledLinkingData& d, const FiniteAbelianGroup& g) {
    const std::size_t n = d.size();
    std::vector<std::vector<long>> rows;
    std::vector<GroupElement> rhs;
    for (std::size_t i = 0; i < n; ++i) {
        if (d.role(i) == Role::surgery) {
            rows.push_back(row_of(d, i));
            rhs.push_back(g.zero());
        } else {
            std::vector<long> meridian(n, 0);
            meridian[i] = 1;
            rows.push_back(meridian);
            rhs.push_back(d.label(i).a);
            rows.push_back(row_of(d, i));
            rhs.push_back(d.label(i).b);
        }
    }
    const std::uint64_t count = count_homomorphisms(g, n, rows, rhs);
    Integer denom = 1;
    for (std::size_t c = 0; c < d.manifold_components(); ++c) {
        denom *= g.order();
    }
    return make_rational(Integer(static_cast<unsigned long>(count)), denom);
}

}  // namespace dwgns::oracle
