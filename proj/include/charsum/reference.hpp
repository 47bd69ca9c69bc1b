#pragma once

#include <cstdint>

#include "charsum/character.hpp"
#include "charsum/field.hpp"
#include "charsum/poly.hpp"
#include "charsum/subsets.hpp"

// Serial oracles. Each one scans the whole field and decides membership from
// coordinates, so none of them shares a code path with the structured
// kernels in sums.hpp.
namespace charsum::reference {

/// sum_i c_i x^i with every power taken separately.
Elt eval_naive(const Field& field, const Poly& f, Elt x);

SumAccumulator char_sum(const Field& field, const RestrictedFamily& family, const MulChar& chi, const Poly& f);
SumAccumulator char_sum(const Field& field, SparseSpec spec, const MulChar& chi, const Poly& f);
SumAccumulator correlation_sum(const Field& field, Elt w1, Elt w2, const MulChar& chi, const Poly& f);

/// Multiplicative order by square-and-multiply against the prime divisors of n.
bool is_primitive_by_order(const Field& field, Elt x);
std::uint64_t primitive_count(const Field& field, const RestrictedFamily& family);

}  // namespace charsum::reference
