#pragma once

#include "dwgns/gns.hpp"
#include "dwgns/group.hpp"
#include "dwgns/invariant.hpp"
#include "dwgns/link.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace dwgns {

// Closed connected surface of genus g with n labelled pairs of arcs. Each
// arc label is a torus-bundle label (A-holonomy, B-holonomy).
struct SurfaceObject {
    std::size_t genus = 0;
    std::vector<Label> arcs;
};

// Labels of a handlebody generator: (a_k, b_k) on the knot around each hole
// and c_j on the small ring around each arc ribbon.
struct BasisElement {
    std::vector<Label> handles;
    std::vector<GroupElement> rings;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

// Largest basis for which full pairing matrices are built.
inline constexpr std::uint64_t kMaxBasisSize = 4096;

// |G|^(2g+n)
Integer basis_size(const SurfaceObject& s, const FiniteAbelianGroup& g);

// All basis elements, handles before rings, each slot in enumerate() order.
std::vector<BasisElement> basis(const SurfaceObject& s, const FiniteAbelianGroup& g,
                                std::uint64_t limit = kMaxBasisSize);

// The S^3 link obtained by gluing the generator for `b` to the dual generator
// for `b_dual`. Components: per handle a Hopf pair (b, b_dual); per arc the
// ribbon L_j labelled tau_j followed by the rings labelled (c_j, A_j) and
// (c'_j, A_j), each linking L_j once.
LabeledLinkingData standard_closure(const SurfaceObject& s, const BasisElement& b, const BasisElement& b_dual,
                                    const FiniteAbelianGroup& g);

Rational pairing_entry(const SurfaceObject& s, const BasisElement& b, const BasisElement& b_dual,
                       const FiniteAbelianGroup& g);

// Rows: basis; columns: dual basis, same ordering.
PairingMatrix surface_pairing_matrix(const SurfaceObject& s, const FiniteAbelianGroup& g,
                                     std::uint64_t limit = kMaxBasisSize);

// Rank of the computed pairing matrix.
std::size_t space_dimension(const SurfaceObject& s, const FiniteAbelianGroup& g, std::uint64_t limit = kMaxBasisSize);

// Coefficients of the vector whose pairings with the dual basis are
// `pair_values` (missing entries read as 0). Throws InconsistentError when no
// such vector exists.
std::map<BasisElement, Rational> coordinates(const SurfaceObject& s, const std::map<BasisElement, Rational>& pair_values,
                                             const FiniteAbelianGroup& g);

// Pairings of sum_k coefficient_k * delta_{b_k} with every dual basis element.
std::map<BasisElement, Rational> pair_values_of(const SurfaceObject& s,
                                                const std::vector<std::pair<Rational, BasisElement>>& vector,
                                                const FiniteAbelianGroup& g);

// Identity cylinder Sigma x [0,1] with delta_b glued on one end and
// delta*_{b_dual} on the other, as a presentation of the closed manifold.
HomologyPresentation cylinder_presentation(const SurfaceObject& s, const BasisElement& b, const BasisElement& b_dual,
                                           const FiniteAbelianGroup& g);

// Constrained groupoid cardinality of the glued closed manifold.
Rational transition_amplitude(const HomologyPresentation& p, const FiniteAbelianGroup& g);

SurfaceObject surface_from_json(const nlohmann::json& j, const FiniteAbelianGroup& g);
nlohmann::json to_json(const SurfaceObject& s);
nlohmann::json to_json(const BasisElement& b);

}  // namespace dwgns
