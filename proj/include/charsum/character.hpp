#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "charsum/field.hpp"

namespace charsum {

/// Multiplicative character chi_j of F_{q^r}^*: chi_j(g^e) = zeta_n^(j e),
/// extended by chi(0) = 0. Values are tracked as exponents of zeta_d where
/// d is the order of the character.
class MulChar {
public:
    MulChar(std::uint64_t group_order, std::uint64_t index);

    std::uint64_t index() const noexcept { return index_; }
    std::uint64_t group_order() const noexcept { return n_; }
    std::uint64_t order() const noexcept { return order_; }
    bool is_trivial() const noexcept { return index_ == 0; }

    /// Exponent t with chi(g^log_x) = zeta_d^t.
    std::uint64_t exponent_of_log(std::uint64_t log_x) const noexcept;

    friend bool operator==(const MulChar&, const MulChar&) = default;

private:
    std::uint64_t n_;
    std::uint64_t index_;
    std::uint64_t order_;
};

MulChar char_of_index(const Field& field, std::uint64_t j);
MulChar conjugate(const MulChar& chi);

/// Residue mod ord(chi) of chi(x); nullopt for x = 0.
std::optional<std::uint64_t> eval_exponent(const Field& field, const MulChar& chi, Elt x);

/// All characters of exact order e, ascending by index. e must divide n.
std::vector<MulChar> characters_of_order(const Field& field, std::uint64_t e);

/// Exact representation of a character sum sum_t counts[t] zeta_d^t, plus the
/// number of terms whose argument was zero.
class SumAccumulator {
public:
    SumAccumulator() : counts_(1, 0) {}
    explicit SumAccumulator(std::uint64_t d) : counts_(d, 0) {}

    std::uint64_t root_order() const noexcept { return counts_.size(); }
    const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }
    std::uint64_t zero_hits() const noexcept { return zero_hits_; }
    /// Number of terms seen, zero hits included.
    std::uint64_t terms() const noexcept;

    void add(std::uint64_t exponent) noexcept { ++counts_[exponent]; }
    void add_zero() noexcept { ++zero_hits_; }
    void add(std::optional<std::uint64_t> exponent) noexcept {
        if (exponent) {
            add(*exponent);
        } else {
            add_zero();
        }
    }
    /// Associative, commutative merge; both sides must share root_order().
    void merge(const SumAccumulator& other);

    friend bool operator==(const SumAccumulator&, const SumAccumulator&) = default;

private:
    std::vector<std::uint64_t> counts_;
    std::uint64_t zero_hits_ = 0;
};

struct ComplexValue {
    long double re;
    long double im;
};

/// sum_t counts[t] zeta_d^t by Neumaier-compensated long double summation.
/// Absolute error stays far below 1e-9 * sum(counts) for d <= 2^26.
ComplexValue value(const SumAccumulator& acc);
long double magnitude(const SumAccumulator& acc);

}  // namespace charsum
