#include "dwgns/invariant.hpp"

#include "dwgns/errors.hpp"

namespace dwgns {

namespace {

Integer group_power(const FiniteAbelianGroup& g, std::size_t exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), g.order().get_mpz_t(), exponent);
    return r;
}

void require_wilson(const LabeledLinkingData& d, std::size_t i, const char* what) {
    if (i >= d.size()) {
        throw ContractError(std::string(what) + ": component " + std::to_string(i) + " out of range (link has " +
                            std::to_string(d.size()) + ")");
    }
    if (d.role(i) != Role::wilson) {
        throw ContractError(std::string(what) + ": component " + std::to_string(i) +
                            " is a surgery component; moves act on Wilson lines");
    }
}

}  // namespace

Rational invariant_s3(const LabeledLinkingData& d, const FiniteAbelianGroup& g) {
    if (!d.all_wilson()) {
        throw ContractError("invariant_s3: link has surgery components; use invariant_closed");
    }
    if (d.manifold_components() != 1) {
        throw ContractError("invariant_s3: ambient manifold must be a single S^3");
    }
    d.check_labels(g);
    for (std::size_t i = 0; i < d.size(); ++i) {
        GroupElement boundary = g.zero();
        for (std::size_t j = 0; j < d.size(); ++j) {
            boundary = g.add(boundary, g.scalar_mul(d.linking(i, j), d.label(j).a));
        }
        if (boundary != d.label(i).b) {
            return 0;
        }
    }
    return make_rational(1, g.order());
}

HomologyPresentation closed_presentation(const LabeledLinkingData& d, const FiniteAbelianGroup& g) {
    d.check_labels(g);
    const std::size_t n = d.size();
    HomologyPresentation p;
    p.generators = n;
    p.relations = IntMatrix(0, n);
    p.manifold_components = d.manifold_components();
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = d.linking().row(i);
        if (d.role(i) == Role::surgery) {
            p.relations.append_row(row);
            continue;
        }
        std::vector<Integer> meridian(n);
        meridian[i] = 1;
        p.constraints.push_back({std::move(meridian), d.label(i).a});
        p.constraints.push_back({std::vector<Integer>(row.begin(), row.end()), d.label(i).b});
    }
    return p;
}

Rational invariant_closed(const LabeledLinkingData& d, const FiniteAbelianGroup& g) {
    return invariant_presentation(closed_presentation(d, g), g);
}

namespace {

// Stacks relations (right-hand side 0) over constraints.
std::pair<IntMatrix, std::vector<GroupElement>> as_system(const HomologyPresentation& p, const FiniteAbelianGroup& g) {
    if (p.relations.rows() > 0 && p.relations.cols() != p.generators) {
        throw DimensionError("relation rows have " + std::to_string(p.relations.cols()) + " entries for " +
                             std::to_string(p.generators) + " generators");
    }
    IntMatrix m(0, p.generators);
    std::vector<GroupElement> t;
    for (std::size_t i = 0; i < p.relations.rows(); ++i) {
        m.append_row(p.relations.row(i));
        t.push_back(g.zero());
    }
    for (std::size_t k = 0; k < p.constraints.size(); ++k) {
        const auto& c = p.constraints[k];
        if (c.coefficients.size() != p.generators) {
            throw DimensionError("constraint row " + std::to_string(k) + " has " +
                                 std::to_string(c.coefficients.size()) + " entries for " +
                                 std::to_string(p.generators) + " generators");
        }
        if (!g.contains(c.value)) {
            throw DimensionError("constraint value " + to_string(c.value) + " is not in " + g.to_string());
        }
        m.append_row(c.coefficients);
        t.push_back(c.value);
    }
    return {std::move(m), std::move(t)};
}

}  // namespace

Rational invariant_presentation(const HomologyPresentation& p, const FiniteAbelianGroup& g) {
    auto [m, t] = as_system(p, g);
    return make_rational(count_solutions(m, t, g), group_power(g, p.manifold_components));
}

Rational invariant_presentation_brute_force(const HomologyPresentation& p, const FiniteAbelianGroup& g,
                                            std::uint64_t limit) {
    auto [m, t] = as_system(p, g);
    return make_rational(brute_force_count(m, t, g, limit), group_power(g, p.manifold_components));
}

std::string describe(const Move& move) {
    struct Visitor {
        std::string operator()(const Move1& m) const {
            return "move1(component=" + std::to_string(m.component) +
                   ", twist=" + (m.direction == Twist::right ? "right" : "left") + ")";
        }
        std::string operator()(const Move2& m) const {
            return "move2(component=" + std::to_string(m.component) + ", mutual=" + std::to_string(m.mutual) + ")";
        }
        std::string operator()(const Move3& m) const {
            return "move3(i=" + std::to_string(m.i) + ", j=" + std::to_string(m.j) + ", sign=" + std::to_string(m.sign) +
                   ")";
        }
        std::string operator()(const RingRelation& m) const {
            return "ring(component=" + std::to_string(m.component) + ", c=" + to_string(m.c) +
                   ", sign=" + std::to_string(m.sign) + ")";
        }
    };
    return std::visit(Visitor{}, move);
}

namespace {

FormalSum apply(const LabeledLinkingData& d, const Move1& mv, const FiniteAbelianGroup& g) {
    require_wilson(d, mv.component, "move1");
    const std::size_t i = mv.component;
    IntMatrix m = d.linking();
    auto labels = d.labels();
    Label& l = *labels[i];
    if (mv.direction == Twist::right) {
        m(i, i) -= 1;
        l.b = g.sub(l.b, l.a);
    } else {
        m(i, i) += 1;
        l.b = g.add(l.b, l.a);
    }
    return FormalSum(LabeledLinkingData(std::move(m), d.roles(), std::move(labels), d.manifold_components()));
}

FormalSum apply(const LabeledLinkingData& d, const Move3& mv, const FiniteAbelianGroup& g) {
    require_wilson(d, mv.i, "move3");
    require_wilson(d, mv.j, "move3");
    if (mv.sign != 1 && mv.sign != -1) {
        throw ContractError("move3: sign must be +1 or -1");
    }
    IntMatrix m = d.linking();
    auto labels = d.labels();
    if (mv.i == mv.j) {
        m(mv.i, mv.i) += 2 * mv.sign;
        Label& l = *labels[mv.i];
        l.b = g.add(l.b, g.scalar_mul(2 * mv.sign, l.a));
    } else {
        m(mv.i, mv.j) += mv.sign;
        m(mv.j, mv.i) += mv.sign;
        const GroupElement ai = labels[mv.i]->a;
        const GroupElement aj = labels[mv.j]->a;
        labels[mv.i]->b = g.add(labels[mv.i]->b, g.scalar_mul(mv.sign, aj));
        labels[mv.j]->b = g.add(labels[mv.j]->b, g.scalar_mul(mv.sign, ai));
    }
    return FormalSum(LabeledLinkingData(std::move(m), d.roles(), std::move(labels), d.manifold_components()));
}

FormalSum apply(const LabeledLinkingData& d, const Move2& mv, const FiniteAbelianGroup& g) {
    require_wilson(d, mv.component, "move2");
    const std::size_t n = d.size();
    const std::size_t i = mv.component;
    if (!mv.first_linking.empty() && mv.first_linking.size() != n) {
        throw DimensionError("move2: first_linking needs one entry per component");
    }
    // Old index -> new index; the second strand sits right after the first.
    auto shift = [i](std::size_t k) { return k <= i ? k : k + 1; };
    const std::size_t second = i + 1;

    IntMatrix m(n + 1, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (r != i && c != i) {
                m(shift(r), shift(c)) = d.linking(r, c);
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i) {
            continue;
        }
        Integer first = mv.first_linking.empty() ? d.linking(i, k) : Integer(static_cast<long>(mv.first_linking[k]));
        Integer rest = d.linking(i, k) - first;
        m(i, shift(k)) = first;
        m(shift(k), i) = first;
        m(second, shift(k)) = rest;
        m(shift(k), second) = rest;
    }
    const Integer framing = d.linking(i, i);
    const Integer mutual = static_cast<long>(mv.mutual);
    const Integer f1 = mv.first_framing ? Integer(static_cast<long>(*mv.first_framing)) : Integer(framing - 2 * mutual);
    m(i, i) = f1;
    m(second, second) = framing - f1 - 2 * mutual;
    m(i, second) = mutual;
    m(second, i) = mutual;

    std::vector<Role> roles = d.roles();
    roles.insert(roles.begin() + static_cast<std::ptrdiff_t>(second), Role::wilson);
    const Label original = d.label(i);

    FormalSum out;
    for (const auto& b1 : g.enumerate()) {
        auto labels = d.labels();
        labels[i] = Label{original.a, b1};
        labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(second), Label{original.a, g.sub(original.b, b1)});
        out.add(1, LabeledLinkingData(m, roles, std::move(labels), d.manifold_components()));
    }
    return out;
}

FormalSum apply(const LabeledLinkingData& d, const RingRelation& mv, const FiniteAbelianGroup& g) {
    require_wilson(d, mv.component, "ring relation");
    if (mv.sign != 1 && mv.sign != -1) {
        throw ContractError("ring relation: sign must be +1 or -1");
    }
    if (!g.contains(mv.c)) {
        throw DimensionError("ring relation: c is not an element of " + g.to_string());
    }
    const std::size_t n = d.size();
    const std::size_t i = mv.component;
    IntMatrix m(n + 1, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = d.linking(r, c);
        }
    }
    m(i, n) = 1;
    m(n, i) = 1;
    const GroupElement shift = g.scalar_mul(mv.sign, mv.c);
    auto labels = d.labels();
    const GroupElement a = labels[i]->a;
    labels[i]->b = g.add(labels[i]->b, shift);
    labels.push_back(Label{shift, a});
    auto roles = d.roles();
    roles.push_back(Role::wilson);
    return FormalSum(LabeledLinkingData(std::move(m), std::move(roles), std::move(labels), d.manifold_components()));
}

}  // namespace

FormalSum apply_move(const LabeledLinkingData& d, const Move& move, const FiniteAbelianGroup& g) {
    d.check_labels(g);
    return std::visit([&](const auto& mv) { return apply(d, mv, g); }, move);
}

Reduction reduce(const LabeledLinkingData& d, const FiniteAbelianGroup& g) {
    if (!d.all_wilson()) {
        throw ContractError("reduce: only all-Wilson links in S^3 are reduced");
    }
    d.check_labels(g);
    Reduction out;
    LabeledLinkingData cur = d;
    auto step = [&](const Move& mv) {
        cur = apply_move(cur, mv, g).terms().front().data;
        out.trace.push_back(mv);
    };
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            while (cur.linking(i, j) != 0) {
                step(Move3{i, j, cur.linking(i, j) > 0 ? -1 : 1});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        while (cur.linking(i, i) != 0) {
            step(Move1{i, cur.linking(i, i) > 0 ? Twist::right : Twist::left});
        }
    }
    out.result = FormalSum(std::move(cur));
    return out;
}

Rational unlinked_value(const LabeledLinkingData& d, const FiniteAbelianGroup& g) {
    if (!d.all_wilson() || !d.linking().is_zero() || d.manifold_components() != 1) {
        throw ContractError("unlinked_value: expects an unlinked, untwisted Wilson link in S^3");
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.label(i).b != g.zero()) {
            return 0;
        }
    }
    return make_rational(1, g.order());
}

Rational eta(const FiniteAbelianGroup& g) {
    const LabeledLinkingData s3 = LabeledLinkingData::sphere();
    const LabeledLinkingData s1s2(IntMatrix{{0}}, {Role::surgery}, {std::nullopt}, 1);
    return invariant_closed(s3, g) / invariant_closed(s1s2, g);
}

}  // namespace dwgns
