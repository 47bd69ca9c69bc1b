#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "charsum/field.hpp"
#include "charsum/poly.hpp"
#include "charsum/subsets.hpp"

namespace charsum::text {

/// Comma-separated unsigned integers. Throws ParseError.
std::vector<std::uint64_t> parse_uint_list(std::string_view s);

/// "A_1;A_2;...;A_r": each set is "*" (all of F_q), "!c" (F_q minus c) or a
/// comma list of base-field indices.
RestrictedFamily parse_family(const Field& field, std::string_view spec);

/// Packed coefficients, low degree first: "0,1" is X.
Poly parse_poly(const Field& field, std::string_view spec);

/// Inverse of parse_poly.
std::string format_poly(const Poly& f);

}  // namespace charsum::text
