#include "charsum/text.hpp"

#include <charconv>
#include <string>

#include "charsum/error.hpp"

namespace charsum::text {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto pos = s.find(sep);
        out.push_back(trim(s.substr(0, pos)));
        if (pos == std::string_view::npos) return out;
        s.remove_prefix(pos + 1);
    }
}

std::uint64_t parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(Errc::ParseError, "expected an unsigned integer, got '" + std::string(s) + "'");
    }
    return v;
}

std::uint32_t parse_index(const Field& field, std::string_view s) {
    const std::uint64_t c = parse_uint(s);
    if (c >= field.q()) throw Error(Errc::ParseError, "base-field index " + std::string(s) + " >= q");
    return static_cast<std::uint32_t>(c);
}

}  // namespace

std::vector<std::uint64_t> parse_uint_list(std::string_view s) {
    std::vector<std::uint64_t> out;
    for (auto item : split(s, ',')) out.push_back(parse_uint(item));
    return out;
}

RestrictedFamily parse_family(const Field& field, std::string_view spec) {
    const auto parts = split(spec, ';');
    if (parts.size() != field.r()) {
        throw Error(Errc::ParseError, "family spec has " + std::to_string(parts.size()) + " sets, need r = " +
                                          std::to_string(field.r()));
    }
    RestrictedFamily family;
    for (auto part : parts) {
        std::vector<std::uint32_t> a;
        if (part == "*") {
            for (std::uint32_t c = 0; c < field.q(); ++c) a.push_back(c);
        } else if (!part.empty() && part.front() == '!') {
            const std::uint32_t skip = parse_index(field, part.substr(1));
            for (std::uint32_t c = 0; c < field.q(); ++c) {
                if (c != skip) a.push_back(c);
            }
        } else {
            for (auto item : split(part, ',')) a.push_back(parse_index(field, item));
        }
        family.sets.push_back(std::move(a));
    }
    return normalize(field, family);
}

Poly parse_poly(const Field& field, std::string_view spec) {
    std::vector<Elt> coeffs;
    for (std::uint64_t v : parse_uint_list(spec)) {
        if (v >= field.size()) throw Error(Errc::ParseError, "coefficient " + std::to_string(v) + " outside the field");
        coeffs.push_back(field.element(v));
    }
    return Poly(std::move(coeffs));
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (Elt c : f.coeffs()) {
        if (!out.empty()) out += ',';
        out += std::to_string(c.v);
    }
    return out;
}

}  // namespace charsum::text
