// dwgns: command-line front end for the invariant and TQFT computations.
//
// Exit codes: 0 success, 1 domain or guard error, 2 usage, file or parse error.

#include "dwgns/dwgns.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace dwgns;

namespace {

// Anything wrong with argv or the input files.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string group;
    std::string format = "text";
    std::string path;
    std::size_t genus = 0;
    bool genus_given = false;
    std::string arcs_path;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

// Input loading: every failure becomes an InputError.
template <typename F>
auto load(const std::string& what, F&& f) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(what + ": " + e.what());
    }
}

FiniteAbelianGroup load_group(const Config& c) {
    return load("--group", [&] { return parse_group(c.group); });
}

LabeledLinkingData load_link(const Config& c, const FiniteAbelianGroup& g) {
    const json j = read_json(c.path);
    return load(c.path, [&] { return link_from_json(j, g); });
}

// --arcs holds either a surface object or a bare array of arc labels. Without
// --arcs the surface has no arcs.
SurfaceObject load_surface(const Config& c, const FiniteAbelianGroup& g) {
    json j = json::object();
    if (!c.arcs_path.empty()) {
        j = read_json(c.arcs_path);
        if (j.is_array()) {
            j = json{{"arcs", j}};
        }
    }
    if (!j.is_object()) {
        throw InputError(c.arcs_path + ": expected a surface object or an array of arc labels");
    }
    if (j.contains("genus") && c.genus_given && j["genus"] != c.genus) {
        throw InputError("--genus " + std::to_string(c.genus) + " disagrees with genus in " + c.arcs_path);
    }
    if (c.genus_given || !j.contains("genus")) {
        j["genus"] = c.genus;
    }
    if (!j.contains("arcs")) {
        j["arcs"] = json::array();
    }
    return load(c.arcs_path.empty() ? "surface" : c.arcs_path, [&] { return surface_from_json(j, g); });
}

// DWGNS_MAX_ENUM also raises or lowers the basis guard.
std::uint64_t basis_limit() { return env_limit("DWGNS_MAX_ENUM", kMaxBasisSize); }

json echo(const std::string& command, const Config& c) {
    return json{{"command", command}, {"group", c.group}};
}

void emit(const Config& c, const json& doc, const std::string& text) {
    if (c.format == "json") {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

int cmd_invariant(const Config& c) {
    const auto g = load_group(c);
    const auto d = load_link(c, g);
    if (!d.all_wilson()) {
        throw ContractError("link has surgery components; use 'closed'");
    }
    const Rational v = invariant_s3(d, g);
    json doc = echo("invariant", c);
    doc["link"] = to_json(d);
    doc["value"] = to_string(v);
    emit(c, doc, to_string(v) + "\n");
    return 0;
}

int cmd_closed(const Config& c) {
    const auto g = load_group(c);
    const auto d = load_link(c, g);
    const Rational v = invariant_closed(d, g);
    json doc = echo("closed", c);
    doc["link"] = to_json(d);
    doc["value"] = to_string(v);
    emit(c, doc, to_string(v) + "\n");
    return 0;
}

int cmd_reduce(const Config& c) {
    const auto g = load_group(c);
    const auto d = load_link(c, g);
    const auto r = reduce(d, g);
    Rational v = r.result.evaluate([&](const LabeledLinkingData& x) { return unlinked_value(x, g); });
    json doc = echo("reduce", c);
    doc["link"] = to_json(d);
    json trace = json::array();
    std::string text;
    for (const auto& m : r.trace) {
        trace.push_back(describe(m));
        text += describe(m) + "\n";
    }
    json terms = json::array();
    for (const auto& t : r.result.terms()) {
        terms.push_back({{"coefficient", to_string(t.coefficient)}, {"link", to_json(t.data)}});
    }
    doc["trace"] = trace;
    doc["result"] = terms;
    doc["value"] = to_string(v);
    text += "value " + to_string(v) + "\n";
    emit(c, doc, text);
    return 0;
}

int cmd_dim(const Config& c) {
    const auto g = load_group(c);
    const auto s = load_surface(c, g);
    const std::size_t dim = space_dimension(s, g, basis_limit());
    json doc = echo("dim", c);
    doc["surface"] = to_json(s);
    doc["basis_size"] = to_string(basis_size(s, g));
    doc["dimension"] = dim;
    emit(c, doc, std::to_string(dim) + "\n");
    return 0;
}

int cmd_pairing(const Config& c) {
    const auto g = load_group(c);
    const auto s = load_surface(c, g);
    const auto elements = basis(s, g, basis_limit());
    const auto p = surface_pairing_matrix(s, g, basis_limit());
    json doc = echo("pairing", c);
    doc["surface"] = to_json(s);
    json names = json::array();
    std::string text = "basis\n";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        names.push_back(to_json(elements[i]));
        text += std::to_string(i) + " " + to_json(elements[i]).dump() + "\n";
    }
    text += "matrix\n";
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            text += (j ? " " : "") + to_string(p.at(i, j));
        }
        text += "\n";
    }
    doc["basis"] = names;
    doc["matrix"] = p.to_json();
    emit(c, doc, text);
    return 0;
}

int cmd_eta(const Config& c) {
    const auto g = load_group(c);
    const Rational v = eta(g);
    json doc = echo("eta", c);
    doc["value"] = to_string(v);
    emit(c, doc, to_string(v) + "\n");
    return 0;
}

// Random draws built on the raw engine output so the stream only depends on
// the seed, not on the standard library's distributions.
struct Draw {
    std::mt19937_64 rng;

    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    GroupElement element(const FiniteAbelianGroup& g) {
        std::vector<std::int64_t> r;
        for (auto d : g.cyclic_orders()) {
            r.push_back(between(0, d - 1));
        }
        return g.element(r);
    }
};

LabeledLinkingData random_link(Draw& draw, const FiniteAbelianGroup& g) {
    const auto n = static_cast<std::size_t>(draw.between(1, 3));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = m(j, i) = static_cast<long>(draw.between(-3, 3));
        }
    }
    std::vector<Role> roles(n, Role::wilson);
    std::vector<std::optional<Label>> labels(n);
    const bool consistent = draw.between(0, 1) == 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && draw.between(0, 2) == 0) {
            roles[i] = Role::surgery;
            continue;
        }
        labels[i] = Label{draw.element(g), draw.element(g)};
    }
    if (consistent) {
        // b_i = sum_j m_ij a_j over the Wilson part
        for (std::size_t i = 0; i < n; ++i) {
            if (!labels[i]) {
                continue;
            }
            GroupElement b = g.zero();
            for (std::size_t j = 0; j < n; ++j) {
                if (labels[j]) {
                    b = g.add(b, g.scalar_mul(m(i, j), labels[j]->a));
                }
            }
            labels[i]->b = b;
        }
    }
    return LabeledLinkingData(std::move(m), std::move(roles), std::move(labels), 1);
}

int cmd_oracle(const Config& c) {
    const auto g = load_group(c);
    Draw draw{std::mt19937_64(c.seed)};
    std::uint64_t closed_ok = 0, s3_ok = 0, s3_total = 0, snf_ok = 0;
    json mismatches = json::array();
    for (std::uint64_t t = 0; t < c.trials; ++t) {
        const auto d = random_link(draw, g);
        const Rational fast = invariant_closed(d, g);
        const Rational slow = invariant_presentation_brute_force(closed_presentation(d, g), g);
        if (fast == slow) {
            ++closed_ok;
        } else {
            mismatches.push_back({{"trial", t}, {"check", "closed"}, {"link", to_json(d)}});
        }
        if (d.all_wilson()) {
            ++s3_total;
            if (invariant_s3(d, g) == fast) {
                ++s3_ok;
            } else {
                mismatches.push_back({{"trial", t}, {"check", "s3"}, {"link", to_json(d)}});
            }
        }

        const auto rows = static_cast<std::size_t>(draw.between(0, 3));
        const auto cols = static_cast<std::size_t>(draw.between(0, 3));
        IntMatrix m(rows, cols);
        std::vector<GroupElement> rhs;
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = static_cast<long>(draw.between(-4, 4));
            }
            rhs.push_back(draw.element(g));
        }
        const auto snf = smith_normal_form(m);
        if (snf_violation(m, snf).empty() && count_solutions(m, rhs, g) == brute_force_count(m, rhs, g)) {
            ++snf_ok;
        } else {
            mismatches.push_back({{"trial", t}, {"check", "snf"}, {"matrix", m.to_string()}});
        }
    }
    json doc = echo("oracle", c);
    doc["trials"] = c.trials;
    doc["seed"] = c.seed;
    doc["closed_vs_enumeration"] = {closed_ok, c.trials};
    doc["s3_vs_closed"] = {s3_ok, s3_total};
    doc["snf_vs_enumeration"] = {snf_ok, c.trials};
    doc["mismatches"] = mismatches;
    std::ostringstream text;
    text << "group " << g.to_string() << " trials " << c.trials << " seed " << c.seed << "\n"
         << "closed vs enumeration " << closed_ok << "/" << c.trials << "\n"
         << "s3 vs closed " << s3_ok << "/" << s3_total << "\n"
         << "snf vs enumeration " << snf_ok << "/" << c.trials << "\n"
         << "mismatches " << mismatches.size() << "\n";
    for (const auto& m : mismatches) {
        text << "  " << m.dump() << "\n";
    }
    emit(c, doc, text.str());
    return mismatches.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Abelian Dijkgraaf-Witten invariants and the GNS construction, exact arithmetic."};
    app.require_subcommand(1);
    Config c;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--group", c.group, "group spec, e.g. Z2xZ4")->required();
        sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto link_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        sub->add_option("link", c.path, "link JSON file")->required();
        return sub;
    };
    auto surface_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        sub->add_option("--genus", c.genus, "surface genus");
        sub->add_option("--arcs", c.arcs_path, "surface object or arc label array (JSON)");
        return sub;
    };

    auto* invariant = link_command("invariant", "invariant of an all-Wilson link in S^3");
    auto* closed = link_command("closed", "invariant of a surgery presentation with Wilson lines");
    auto* reduce_cmd = link_command("reduce", "reduce to an unlinked diagram and print the move trace");
    auto* dim = surface_command("dim", "dimension of the state space of a surface");
    auto* pairing = surface_command("pairing", "pairing matrix on the generator basis");
    auto* eta_cmd = app.add_subcommand("eta", "I(S^3) / I(S^1 x S^2)");
    common(eta_cmd);
    auto* oracle = app.add_subcommand("oracle", "randomized cross-checks against enumeration");
    common(oracle);
    oracle->add_option("--trials", c.trials, "number of random trials")->required();
    oracle->add_option("--seed", c.seed, "random seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    c.genus_given = (dim->count("--genus") + pairing->count("--genus")) > 0;

    try {
        if (*invariant) return cmd_invariant(c);
        if (*closed) return cmd_closed(c);
        if (*reduce_cmd) return cmd_reduce(c);
        if (*dim) return cmd_dim(c);
        if (*pairing) return cmd_pairing(c);
        if (*eta_cmd) return cmd_eta(c);
        if (*oracle) return cmd_oracle(c);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
