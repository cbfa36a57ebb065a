#include "dwgns/tqft.hpp"

#include "dwgns/errors.hpp"

#include <algorithm>
#include <thread>

namespace dwgns {

namespace {

void check_shape(const SurfaceObject& s, const BasisElement& b, const FiniteAbelianGroup& g, const char* which) {
    if (b.handles.size() != s.genus || b.rings.size() != s.arcs.size()) {
        throw DimensionError(std::string(which) + " has " + std::to_string(b.handles.size()) + " handle labels and " +
                             std::to_string(b.rings.size()) + " ring labels; surface needs " +
                             std::to_string(s.genus) + " and " + std::to_string(s.arcs.size()));
    }
    for (const auto& h : b.handles) {
        if (!g.contains(h.a) || !g.contains(h.b)) {
            throw DimensionError(std::string(which) + ": handle label outside " + g.to_string());
        }
    }
    for (const auto& c : b.rings) {
        if (!g.contains(c)) {
            throw DimensionError(std::string(which) + ": ring label outside " + g.to_string());
        }
    }
}

void check_surface(const SurfaceObject& s, const FiniteAbelianGroup& g) {
    for (const auto& tau : s.arcs) {
        if (!g.contains(tau.a) || !g.contains(tau.b)) {
            throw DimensionError("arc label outside " + g.to_string());
        }
    }
}

}  // namespace

Integer basis_size(const SurfaceObject& s, const FiniteAbelianGroup& g) {
    Integer n;
    mpz_pow_ui(n.get_mpz_t(), g.order().get_mpz_t(), 2 * s.genus + s.arcs.size());
    return n;
}

std::vector<BasisElement> basis(const SurfaceObject& s, const FiniteAbelianGroup& g, std::uint64_t limit) {
    check_surface(s, g);
    const Integer size = basis_size(s, g);
    if (size > Integer(static_cast<unsigned long>(limit))) {
        throw GuardError("basis of size " + size.get_str() + " exceeds the limit " + std::to_string(limit));
    }
    const auto elements = g.enumerate();
    const std::size_t slots = 2 * s.genus + s.arcs.size();
    std::vector<std::size_t> digits(slots, 0);
    std::vector<BasisElement> out;
    out.reserve(size.get_ui());
    for (unsigned long k = 0; k < size.get_ui(); ++k) {
        BasisElement b;
        for (std::size_t h = 0; h < s.genus; ++h) {
            b.handles.push_back({elements[digits[2 * h]], elements[digits[2 * h + 1]]});
        }
        for (std::size_t j = 0; j < s.arcs.size(); ++j) {
            b.rings.push_back(elements[digits[2 * s.genus + j]]);
        }
        out.push_back(std::move(b));
        for (std::size_t d = slots; d-- > 0;) {
            if (++digits[d] < elements.size()) {
                break;
            }
            digits[d] = 0;
        }
    }
    return out;
}

LabeledLinkingData standard_closure(const SurfaceObject& s, const BasisElement& b, const BasisElement& b_dual,
                                    const FiniteAbelianGroup& g) {
    check_surface(s, g);
    check_shape(s, b, g, "basis element");
    check_shape(s, b_dual, g, "dual basis element");
    const std::size_t n = 2 * s.genus + 3 * s.arcs.size();
    IntMatrix m(n, n);
    std::vector<Label> labels;
    labels.reserve(n);
    for (std::size_t k = 0; k < s.genus; ++k) {
        const std::size_t base = 2 * k;
        m(base, base + 1) = 1;
        m(base + 1, base) = 1;
        labels.push_back(b.handles[k]);
        labels.push_back(b_dual.handles[k]);
    }
    for (std::size_t j = 0; j < s.arcs.size(); ++j) {
        const std::size_t ribbon = 2 * s.genus + 3 * j;
        const Label& tau = s.arcs[j];
        for (std::size_t ring : {ribbon + 1, ribbon + 2}) {
            m(ribbon, ring) = 1;
            m(ring, ribbon) = 1;
        }
        labels.push_back(tau);
        labels.push_back({b.rings[j], tau.a});
        labels.push_back({b_dual.rings[j], tau.a});
    }
    return LabeledLinkingData::wilson(std::move(m), std::move(labels));
}

Rational pairing_entry(const SurfaceObject& s, const BasisElement& b, const BasisElement& b_dual,
                       const FiniteAbelianGroup& g) {
    return invariant_s3(standard_closure(s, b, b_dual, g), g);
}

PairingMatrix surface_pairing_matrix(const SurfaceObject& s, const FiniteAbelianGroup& g, std::uint64_t limit) {
    GeneratorFamily<BasisElement> family{basis(s, g, limit)};
    const std::size_t n = family.size();
    if (n <= 64) {
        return pairing_matrix(family, family, [&](const BasisElement& x, const BasisElement& y) {
            return pairing_entry(s, x, y, g);
        });
    }
    // Rows are independent; each worker fills a strided subset.
    PairingMatrix p(n, n);
    std::vector<RationalMatrix::Row> rows(n);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 16));
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) {
                    for (std::size_t j = 0; j < n; ++j) {
                        Rational v = pairing_entry(s, family.items[i], family.items[j], g);
                        if (v != 0) {
                            rows[i].emplace_back(j, std::move(v));
                        }
                    }
                }
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        p.set_row(i, std::move(rows[i]));
    }
    return p;
}

std::size_t space_dimension(const SurfaceObject& s, const FiniteAbelianGroup& g, std::uint64_t limit) {
    return rank(surface_pairing_matrix(s, g, limit));
}

std::map<BasisElement, Rational> coordinates(const SurfaceObject& s, const std::map<BasisElement, Rational>& pair_values,
                                             const FiniteAbelianGroup& g) {
    const auto elements = basis(s, g);
    std::map<BasisElement, std::size_t> position;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        position.emplace(elements[k], k);
    }
    std::vector<Rational> rhs(elements.size());
    for (const auto& [dual, value] : pair_values) {
        auto it = position.find(dual);
        if (it == position.end()) {
            throw DimensionError("pair value given for an element that is not in the dual basis");
        }
        rhs[it->second] = value;
    }
    // v = sum_b x_b delta_b pairs with delta*_{b'} to sum_b x_b P[b][b'], i.e. P^T x = rhs.
    const PairingMatrix p = surface_pairing_matrix(s, g);
    auto x = solve(p.transpose(), rhs);
    if (!x) {
        throw InconsistentError("pair values are not the pairings of any vector in the span of the basis");
    }
    std::map<BasisElement, Rational> out;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        out.emplace(elements[k], (*x)[k]);
    }
    return out;
}

std::map<BasisElement, Rational> pair_values_of(const SurfaceObject& s,
                                                const std::vector<std::pair<Rational, BasisElement>>& vector,
                                                const FiniteAbelianGroup& g) {
    std::map<BasisElement, Rational> out;
    for (const auto& dual : basis(s, g)) {
        Rational sum = 0;
        for (const auto& [coefficient, b] : vector) {
            sum += coefficient * pairing_entry(s, b, dual, g);
        }
        out.emplace(dual, sum);
    }
    return out;
}

HomologyPresentation cylinder_presentation(const SurfaceObject& s, const BasisElement& b, const BasisElement& b_dual,
                                           const FiniteAbelianGroup& g) {
    return closed_presentation(standard_closure(s, b, b_dual, g), g);
}

Rational transition_amplitude(const HomologyPresentation& p, const FiniteAbelianGroup& g) {
    return invariant_presentation(p, g);
}

SurfaceObject surface_from_json(const nlohmann::json& j, const FiniteAbelianGroup& g) {
    if (!j.is_object()) {
        throw ParseError("surface spec: expected a JSON object");
    }
    SurfaceObject s;
    if (j.contains("genus")) {
        if (!j["genus"].is_number_unsigned()) {
            throw ParseError("surface spec: 'genus' must be a non-negative integer");
        }
        s.genus = j["genus"].get<std::size_t>();
    }
    if (j.contains("arcs")) {
        const auto& arcs = j["arcs"];
        if (!arcs.is_array()) {
            throw ParseError("surface spec: 'arcs' must be an array of labels");
        }
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            try {
                s.arcs.push_back(label_from_json(arcs[k], g));
            } catch (const ParseError& e) {
                throw ParseError("arcs[" + std::to_string(k) + "]: " + e.what());
            }
        }
    }
    return s;
}

nlohmann::json to_json(const SurfaceObject& s) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& tau : s.arcs) {
        arcs.push_back(to_json(tau));
    }
    return {{"genus", s.genus}, {"arcs", arcs}};
}

nlohmann::json to_json(const BasisElement& b) {
    nlohmann::json handles = nlohmann::json::array();
    for (const auto& h : b.handles) {
        handles.push_back(to_json(h));
    }
    nlohmann::json rings = nlohmann::json::array();
    for (const auto& c : b.rings) {
        rings.push_back(to_json(c));
    }
    return {{"handles", handles}, {"rings", rings}};
}

}  // namespace dwgns
