#include "dwgns/rational.hpp"

#include "dwgns/errors.hpp"

#include <cstdlib>
#include <string>

namespace dwgns {

std::string to_string(const Rational& value) {
    Rational r = value;
    r.canonicalize();
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) {
        throw ParseError("invalid rational '" + s + "'");
    }
    if (r.get_den() == 0) {
        throw ParseError("zero denominator in '" + s + "'");
    }
    r.canonicalize();
    return r;
}

std::uint64_t env_limit(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') {
        return fallback;
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace dwgns
