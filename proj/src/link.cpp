#include "dwgns/link.hpp"

#include "dwgns/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dwgns {

using nlohmann::json;

LabeledLinkingData::LabeledLinkingData(IntMatrix linking, std::vector<Role> roles,
                                       std::vector<std::optional<Label>> labels, std::size_t manifold_components)
    : linking_(std::move(linking)),
      roles_(std::move(roles)),
      labels_(std::move(labels)),
      manifold_components_(manifold_components) {
    const std::size_t n = roles_.size();
    if (linking_.rows() != n || linking_.cols() != n) {
        throw DimensionError("linking matrix is " + std::to_string(linking_.rows()) + "x" +
                             std::to_string(linking_.cols()) + " for " + std::to_string(n) + " components");
    }
    if (!linking_.is_symmetric()) {
        throw ContractError("linking matrix must be symmetric");
    }
    if (labels_.size() != n) {
        throw DimensionError("expected " + std::to_string(n) + " label slots, got " + std::to_string(labels_.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const bool is_wilson = roles_[i] == Role::wilson;
        if (is_wilson != labels_[i].has_value()) {
            throw ContractError("component " + std::to_string(i) +
                                (is_wilson ? " is a Wilson line without a label" : " is a surgery component with a label"));
        }
    }
    if (manifold_components_ == 0 && n > 0) {
        throw ContractError("a non-empty link needs at least one ambient manifold component");
    }
}

LabeledLinkingData LabeledLinkingData::sphere() { return LabeledLinkingData(IntMatrix(), {}, {}, 1); }

LabeledLinkingData LabeledLinkingData::wilson(IntMatrix linking, std::vector<Label> labels) {
    std::vector<Role> roles(labels.size(), Role::wilson);
    std::vector<std::optional<Label>> slots(labels.begin(), labels.end());
    return LabeledLinkingData(std::move(linking), std::move(roles), std::move(slots), 1);
}

const Label& LabeledLinkingData::label(std::size_t i) const {
    if (i >= labels_.size() || !labels_[i]) {
        throw ContractError("component " + std::to_string(i) + " carries no label");
    }
    return *labels_[i];
}

bool LabeledLinkingData::all_wilson() const {
    return std::all_of(roles_.begin(), roles_.end(), [](Role r) { return r == Role::wilson; });
}

std::size_t LabeledLinkingData::wilson_count() const {
    return static_cast<std::size_t>(std::count(roles_.begin(), roles_.end(), Role::wilson));
}

void LabeledLinkingData::check_labels(const FiniteAbelianGroup& g) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] && (!g.contains(labels_[i]->a) || !g.contains(labels_[i]->b))) {
            throw DimensionError("label of component " + std::to_string(i) + " is not in " + g.to_string());
        }
    }
}

LinkDiagram diagram_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("link diagram: expected a JSON object");
    }
    if (!j.contains("components") || !j["components"].is_number_integer() || j["components"].get<long long>() < 0) {
        throw ParseError("link diagram: 'components' must be a non-negative integer");
    }
    LinkDiagram d;
    d.components = j["components"].get<std::size_t>();
    if (!j.contains("crossings")) {
        return d;
    }
    const json& cs = j["crossings"];
    if (!cs.is_array()) {
        throw ParseError("link diagram: 'crossings' must be an array");
    }
    for (std::size_t k = 0; k < cs.size(); ++k) {
        const std::string where = "crossings[" + std::to_string(k) + "]";
        const json& c = cs[k];
        if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() || !c[1].is_number_integer() ||
            !c[2].is_number_integer()) {
            throw ParseError(where + ": expected [over, under, sign]");
        }
        long long over = c[0].get<long long>();
        long long under = c[1].get<long long>();
        long long sign = c[2].get<long long>();
        if (over < 0 || under < 0 || static_cast<std::size_t>(over) >= d.components ||
            static_cast<std::size_t>(under) >= d.components) {
            throw ParseError(where + ": component index out of range");
        }
        if (sign != 1 && sign != -1) {
            throw ParseError(where + ": sign must be +1 or -1");
        }
        d.crossings.push_back({static_cast<std::size_t>(over), static_cast<std::size_t>(under), static_cast<int>(sign)});
    }
    return d;
}

LinkDiagram parse_diagram(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("link diagram: ") + e.what());
    }
    return diagram_from_json(j);
}

json to_json(const LinkDiagram& d) {
    json cs = json::array();
    for (const auto& c : d.crossings) {
        cs.push_back({c.over, c.under, c.sign});
    }
    return {{"components", d.components}, {"crossings", cs}};
}

std::string serialize(const LinkDiagram& d) { return to_json(d).dump(); }

IntMatrix linking_matrix(const LinkDiagram& d) {
    const std::size_t n = d.components;
    std::vector<long> signed_count(n * n, 0);
    for (const auto& c : d.crossings) {
        if (c.over >= n || c.under >= n) {
            throw ContractError("crossing refers to a missing component");
        }
        if (c.over == c.under) {
            signed_count[c.over * n + c.over] += c.sign;
        } else {
            signed_count[c.over * n + c.under] += c.sign;
            signed_count[c.under * n + c.over] += c.sign;
        }
    }
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = signed_count[i * n + i];
        for (std::size_t j = i + 1; j < n; ++j) {
            long s = signed_count[i * n + j];
            if (s % 2 != 0) {
                throw ContractError("components " + std::to_string(i) + " and " + std::to_string(j) +
                                    " cross an odd number of times; not a closed link diagram");
            }
            m(i, j) = s / 2;
            m(j, i) = s / 2;
        }
    }
    return m;
}

LabeledLinkingData linking_data(const LinkDiagram& d, std::vector<Role> roles, std::vector<std::optional<Label>> labels,
                                const FiniteAbelianGroup& g, std::size_t manifold_components) {
    if (roles.size() != d.components || labels.size() != d.components) {
        throw ContractError("roles/labels must list all " + std::to_string(d.components) + " components");
    }
    LabeledLinkingData out(linking_matrix(d), std::move(roles), std::move(labels), manifold_components);
    out.check_labels(g);
    return out;
}

LabeledLinkingData disjoint_union(const LabeledLinkingData& x, const LabeledLinkingData& y) {
    const std::size_t n = x.size();
    const std::size_t k = y.size();
    IntMatrix m(n + k, n + k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = x.linking(i, j);
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            m(n + i, n + j) = y.linking(i, j);
        }
    }
    std::vector<Role> roles = x.roles();
    roles.insert(roles.end(), y.roles().begin(), y.roles().end());
    std::vector<std::optional<Label>> labels = x.labels();
    labels.insert(labels.end(), y.labels().begin(), y.labels().end());
    return LabeledLinkingData(std::move(m), std::move(roles), std::move(labels),
                              x.manifold_components() + y.manifold_components());
}

LabeledLinkingData permute(const LabeledLinkingData& d, const std::vector<std::size_t>& perm) {
    const std::size_t n = d.size();
    if (perm.size() != n) {
        throw DimensionError("permutation length does not match component count");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) {
            throw ContractError("not a permutation");
        }
        seen[p] = true;
    }
    IntMatrix m(n, n);
    std::vector<Role> roles(n);
    std::vector<std::optional<Label>> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        roles[i] = d.role(perm[i]);
        labels[i] = d.labels()[perm[i]];
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = d.linking(perm[i], perm[j]);
        }
    }
    return LabeledLinkingData(std::move(m), std::move(roles), std::move(labels), d.manifold_components());
}

json to_json(const GroupElement& x) { return x.residues; }

GroupElement element_from_json(const json& j, const FiniteAbelianGroup& g) {
    if (!j.is_array()) {
        throw ParseError("group element must be an integer array, got " + j.dump());
    }
    std::vector<std::int64_t> values;
    for (const auto& v : j) {
        if (!v.is_number_integer()) {
            throw ParseError("group element must be an integer array, got " + j.dump());
        }
        values.push_back(v.get<std::int64_t>());
    }
    if (values.size() != g.rank()) {
        throw ParseError("group element " + j.dump() + " needs " + std::to_string(g.rank()) + " residues for " +
                         g.to_string());
    }
    return g.element(values);
}

json to_json(const Label& l) { return json::array({to_json(l.a), to_json(l.b)}); }

Label label_from_json(const json& j, const FiniteAbelianGroup& g) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("label must be [[a...],[b...]], got " + j.dump());
    }
    return {element_from_json(j[0], g), element_from_json(j[1], g)};
}

LabeledLinkingData link_from_json(const json& j, const FiniteAbelianGroup& g) {
    if (!j.is_object()) {
        throw ParseError("link file: expected a JSON object");
    }
    IntMatrix m;
    if (j.contains("linking_matrix")) {
        const json& rows = j["linking_matrix"];
        if (!rows.is_array()) {
            throw ParseError("link file: 'linking_matrix' must be an array of rows");
        }
        m = IntMatrix(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!rows[i].is_array() || rows[i].size() != rows.size()) {
                throw ParseError("linking_matrix[" + std::to_string(i) + "]: expected " + std::to_string(rows.size()) +
                                 " integers");
            }
            for (std::size_t k = 0; k < rows.size(); ++k) {
                if (!rows[i][k].is_number_integer()) {
                    throw ParseError("linking_matrix[" + std::to_string(i) + "][" + std::to_string(k) +
                                     "]: not an integer");
                }
                m(i, k) = static_cast<long>(rows[i][k].get<long long>());
            }
        }
        if (!m.is_symmetric()) {
            throw ParseError("link file: linking_matrix is not symmetric");
        }
    } else if (j.contains("components")) {
        m = linking_matrix(diagram_from_json(j));
    } else {
        throw ParseError("link file: needs 'components' or 'linking_matrix'");
    }
    const std::size_t n = m.rows();

    std::vector<Role> roles(n, Role::wilson);
    if (j.contains("roles")) {
        const json& rs = j["roles"];
        if (!rs.is_array() || rs.size() != n) {
            throw ParseError("link file: 'roles' must list " + std::to_string(n) + " entries");
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::string r = rs[i].is_string() ? rs[i].get<std::string>() : "";
            if (r == "wilson") {
                roles[i] = Role::wilson;
            } else if (r == "surgery") {
                roles[i] = Role::surgery;
            } else {
                throw ParseError("roles[" + std::to_string(i) + "]: expected \"wilson\" or \"surgery\"");
            }
        }
    }
    std::vector<std::optional<Label>> labels(n);
    if (j.contains("labels")) {
        const json& ls = j["labels"];
        if (!ls.is_array() || ls.size() != n) {
            throw ParseError("link file: 'labels' must list " + std::to_string(n) + " entries");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!ls[i].is_null()) {
                try {
                    labels[i] = label_from_json(ls[i], g);
                } catch (const ParseError& e) {
                    throw ParseError("labels[" + std::to_string(i) + "]: " + e.what());
                }
            }
        }
    }
    std::size_t components = 1;
    if (j.contains("manifold_components")) {
        if (!j["manifold_components"].is_number_unsigned()) {
            throw ParseError("link file: 'manifold_components' must be a non-negative integer");
        }
        components = j["manifold_components"].get<std::size_t>();
    }
    try {
        return LabeledLinkingData(std::move(m), std::move(roles), std::move(labels), components);
    } catch (const ContractError& e) {
        throw ParseError(std::string("link file: ") + e.what());
    }
}

LabeledLinkingData parse_link_file(std::string_view text, const FiniteAbelianGroup& g) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("link file: ") + e.what());
    }
    return link_from_json(j, g);
}

json to_json(const LabeledLinkingData& d) {
    json rows = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < d.size(); ++k) {
            row.push_back(d.linking(i, k).get_si());
        }
        rows.push_back(row);
    }
    json roles = json::array();
    json labels = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) {
        roles.push_back(d.role(i) == Role::wilson ? "wilson" : "surgery");
        labels.push_back(d.labels()[i] ? to_json(*d.labels()[i]) : json(nullptr));
    }
    return {{"linking_matrix", rows},
            {"roles", roles},
            {"labels", labels},
            {"manifold_components", d.manifold_components()}};
}

void FormalSum::add(const Rational& coefficient, LabeledLinkingData d) {
    if (coefficient == 0) {
        return;
    }
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.data == d; });
    if (it == terms_.end()) {
        terms_.push_back({coefficient, std::move(d)});
        return;
    }
    it->coefficient += coefficient;
    if (it->coefficient == 0) {
        terms_.erase(it);
    }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
    for (const auto& t : other.terms_) {
        add(t.coefficient, t.data);
    }
    return *this;
}

}  // namespace dwgns
