#pragma once

#include "dwgns/group.hpp"
#include "dwgns/rational.hpp"
#include "dwgns/zmatrix.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dwgns {

enum class Role { wilson, surgery };

// Holonomy label of a Wilson component: (A-holonomy, B-holonomy), i.e. the
// values on the meridian and on the framing longitude.
struct Label {
    GroupElement a;
    GroupElement b;

    friend bool operator==(const Label&, const Label&) = default;
    friend auto operator<=>(const Label&, const Label&) = default;
};

struct Crossing {
    std::size_t over = 0;
    std::size_t under = 0;
    int sign = 1;

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Combinatorial stand-in for a blackboard-framed link diagram: one entry per
// geometric crossing.
struct LinkDiagram {
    std::size_t components = 0;
    std::vector<Crossing> crossings;

    friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

// A framed link (in S^3, possibly with surgery components) as the abelian
// invariant sees it: a symmetric linking matrix with framings on the diagonal,
// a role per component, and labels on the Wilson components.
//
// manifold_components counts the connected pieces of the ambient closed
// manifold. It is 0 only for the empty manifold, which is the unit of
// disjoint_union.
class LabeledLinkingData {
public:
    // The empty manifold.
    LabeledLinkingData() = default;
    LabeledLinkingData(IntMatrix linking, std::vector<Role> roles, std::vector<std::optional<Label>> labels,
                       std::size_t manifold_components = 1);

    // S^3 with no link.
    static LabeledLinkingData sphere();
    // All-Wilson link in S^3.
    static LabeledLinkingData wilson(IntMatrix linking, std::vector<Label> labels);

    std::size_t size() const { return roles_.size(); }
    const IntMatrix& linking() const { return linking_; }
    const Integer& linking(std::size_t i, std::size_t j) const { return linking_(i, j); }
    const std::vector<Role>& roles() const { return roles_; }
    Role role(std::size_t i) const { return roles_.at(i); }
    const std::vector<std::optional<Label>>& labels() const { return labels_; }
    const Label& label(std::size_t i) const;
    std::size_t manifold_components() const { return manifold_components_; }

    bool all_wilson() const;
    bool has_surgery() const { return !all_wilson(); }
    std::size_t wilson_count() const;

    // Labels must lie in `g`.
    void check_labels(const FiniteAbelianGroup& g) const;

    friend bool operator==(const LabeledLinkingData&, const LabeledLinkingData&) = default;

private:
    IntMatrix linking_;
    std::vector<Role> roles_;
    std::vector<std::optional<Label>> labels_;
    std::size_t manifold_components_ = 0;
};

// Parses the JSON diagram format: {"components": n, "crossings": [[over, under, sign], ...]}.
// Extra keys (roles, labels) are ignored here.
LinkDiagram parse_diagram(std::string_view text);
LinkDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LinkDiagram& d);
std::string serialize(const LinkDiagram& d);

// Linking numbers are half the signed crossing count between two components;
// framings are the writhe of each component.
IntMatrix linking_matrix(const LinkDiagram& d);

LabeledLinkingData linking_data(const LinkDiagram& d, std::vector<Role> roles, std::vector<std::optional<Label>> labels,
                                const FiniteAbelianGroup& g, std::size_t manifold_components = 1);

// Block-diagonal union; manifold component counts add.
LabeledLinkingData disjoint_union(const LabeledLinkingData& x, const LabeledLinkingData& y);

// Component i of the result is component perm[i] of d.
LabeledLinkingData permute(const LabeledLinkingData& d, const std::vector<std::size_t>& perm);

// Full link file, either diagram form or {"linking_matrix": ...}.
// Missing roles default to all Wilson; "manifold_components" defaults to 1.
LabeledLinkingData parse_link_file(std::string_view text, const FiniteAbelianGroup& g);
LabeledLinkingData link_from_json(const nlohmann::json& j, const FiniteAbelianGroup& g);
nlohmann::json to_json(const LabeledLinkingData& d);

nlohmann::json to_json(const GroupElement& x);
GroupElement element_from_json(const nlohmann::json& j, const FiniteAbelianGroup& g);
nlohmann::json to_json(const Label& l);
Label label_from_json(const nlohmann::json& j, const FiniteAbelianGroup& g);

// Finite formal linear combination of labelled links. Terms with equal data
// are merged and zero coefficients dropped.
class FormalSum {
public:
    struct Term {
        Rational coefficient;
        LabeledLinkingData data;
    };

    FormalSum() = default;
    explicit FormalSum(LabeledLinkingData d) { add(1, std::move(d)); }

    void add(const Rational& coefficient, LabeledLinkingData d);
    FormalSum& operator+=(const FormalSum& other);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    // Sum of coefficient * evaluator(data).
    template <typename Evaluator>
    Rational evaluate(Evaluator&& evaluator) const {
        Rational sum = 0;
        for (const auto& term : terms_) {
            sum += term.coefficient * evaluator(term.data);
        }
        return sum;
    }

private:
    std::vector<Term> terms_;
};

}  // namespace dwgns
