#pragma once

#include "dwgns/errors.hpp"
#include "dwgns/linalg.hpp"
#include "dwgns/link.hpp"
#include "dwgns/rational.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace dwgns {

// Finite list of generators for a GNS space. The closure evaluating I(g o f)
// is passed to pairing_matrix alongside the families.
template <typename T>
struct GeneratorFamily {
    std::vector<T> items;

    std::size_t size() const { return items.size(); }
};

// Rows are in-generators, columns out-generators.
using PairingMatrix = RationalMatrix;

// P[f][g] = closure(f, g). Evaluation failures are rethrown naming the pair.
template <typename In, typename Out, typename Closure>
PairingMatrix pairing_matrix(const GeneratorFamily<In>& in, const GeneratorFamily<Out>& out, Closure&& closure) {
    if (in.items.empty() || out.items.empty()) {
        throw ContractError("pairing_matrix: generator families must be non-empty");
    }
    PairingMatrix p(in.size(), out.size());
    for (std::size_t i = 0; i < in.size(); ++i) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            Rational value;
            try {
                value = closure(in.items[i], out.items[j]);
            } catch (const std::exception& e) {
                throw Error("pairing entry (" + std::to_string(i) + ", " + std::to_string(j) + "): " + e.what());
            }
            if (value != 0) {
                p.set(i, j, value);
            }
        }
    }
    return p;
}

// Product family: generator (x, y) at index ix * |Y| + iy.
template <typename A, typename B>
GeneratorFamily<std::pair<A, B>> product_family(const GeneratorFamily<A>& x, const GeneratorFamily<B>& y) {
    GeneratorFamily<std::pair<A, B>> out;
    out.items.reserve(x.size() * y.size());
    for (const auto& a : x.items) {
        for (const auto& b : y.items) {
            out.items.emplace_back(a, b);
        }
    }
    return out;
}

struct RankAndRadical {
    std::size_t rank = 0;
    // Spans {r : r^T P = 0}; its dimension is rows - rank.
    std::vector<std::vector<Rational>> left_radical;
};

RankAndRadical rank_and_radical(const PairingMatrix& p);

using ClosedEvaluator = std::function<Rational(const LabeledLinkingData&)>;

struct MultiplicativityReport {
    bool holds = true;
    std::string counterexample;
};

// Checks I(empty manifold) = 1 and I(x u y) = I(x) I(y) for every sample.
MultiplicativityReport check_multiplicative(const ClosedEvaluator& state,
                                            const std::vector<std::pair<LabeledLinkingData, LabeledLinkingData>>& samples);

// rank(P12) == rank(P1) * rank(P2); P12 must be shaped as the product family.
bool tensor_rank_check(const PairingMatrix& p1, const PairingMatrix& p2, const PairingMatrix& p12);

// With p12 built on X x Y and p21 on Y x X, checks p21[(y,x),(y',x')] == p12[(x,y),(x',y')].
bool factor_swap_invariant(const PairingMatrix& p12, const PairingMatrix& p21, std::size_t rows_x, std::size_t rows_y,
                           std::size_t cols_x, std::size_t cols_y);

}  // namespace dwgns
