#include "dwgns/gns.hpp"

namespace dwgns {

RankAndRadical rank_and_radical(const PairingMatrix& p) {
    RankAndRadical out;
    const RationalMatrix t = p.transpose();
    out.left_radical = null_space(t);
    out.rank = p.rows() - out.left_radical.size();
    return out;
}

MultiplicativityReport check_multiplicative(const ClosedEvaluator& state,
                                            const std::vector<std::pair<LabeledLinkingData, LabeledLinkingData>>& samples) {
    MultiplicativityReport report;
    const Rational unit = state(LabeledLinkingData());
    if (unit != 1) {
        report.holds = false;
        report.counterexample = "I(empty manifold) = " + to_string(unit) + ", expected 1";
        return report;
    }
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& [x, y] = samples[k];
        const Rational joint = state(disjoint_union(x, y));
        const Rational product = state(x) * state(y);
        if (joint != product) {
            report.holds = false;
            report.counterexample = "sample " + std::to_string(k) + ": I(x u y) = " + to_string(joint) +
                                    " but I(x) I(y) = " + to_string(product) + "; x = " + to_json(x).dump() +
                                    ", y = " + to_json(y).dump();
            return report;
        }
    }
    return report;
}

bool tensor_rank_check(const PairingMatrix& p1, const PairingMatrix& p2, const PairingMatrix& p12) {
    if (p12.rows() != p1.rows() * p2.rows() || p12.cols() != p1.cols() * p2.cols()) {
        throw DimensionError("tensor_rank_check: product matrix is " + std::to_string(p12.rows()) + "x" +
                             std::to_string(p12.cols()) + ", expected " + std::to_string(p1.rows() * p2.rows()) + "x" +
                             std::to_string(p1.cols() * p2.cols()));
    }
    return rank(p12) == rank(p1) * rank(p2);
}

bool factor_swap_invariant(const PairingMatrix& p12, const PairingMatrix& p21, std::size_t rows_x, std::size_t rows_y,
                           std::size_t cols_x, std::size_t cols_y) {
    if (p12.rows() != rows_x * rows_y || p12.cols() != cols_x * cols_y || p21.rows() != p12.rows() ||
        p21.cols() != p12.cols()) {
        throw DimensionError("factor_swap_invariant: matrix shapes do not match the factor sizes");
    }
    if (p12.nonzeros() != p21.nonzeros()) {
        return false;
    }
    for (std::size_t x = 0; x < rows_x; ++x) {
        for (std::size_t y = 0; y < rows_y; ++y) {
            for (const auto& [col, v] : p12.row(x * rows_y + y)) {
                const std::size_t cx = col / cols_y;
                const std::size_t cy = col % cols_y;
                if (p21.at(y * rows_x + x, cy * cols_x + cx) != v) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace dwgns
