#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "charsum/numtheory.hpp"

namespace charsum {

/// q = p^k, top field F_{q^r}.
struct TowerParams {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::uint32_t r = 2;

    std::uint64_t q() const;
    std::uint32_t degree() const { return k * r; }

    friend bool operator==(const TowerParams&, const TowerParams&) = default;
};

/// Element of F_{q^r}: base-p digits of the coordinates in the power basis of
/// the modulus, packed little-endian into one integer. Zero is 0.
struct Elt {
    std::uint32_t v = 0;

    constexpr bool is_zero() const { return v == 0; }
    friend constexpr auto operator<=>(Elt, Elt) = default;
};

/// Immutable field context for the tower F_p <= F_q <= F_{q^{r/2}} <= F_{q^r}.
///
/// The top field is the single flat quotient F_p[x]/(m(x)) with deg m = k*r;
/// subfields are recognised through Frobenius fixed points. Multiplication,
/// division and powers go through log/antilog tables relative to a fixed
/// primitive element. Construction is deterministic: the modulus is the
/// smallest packed monic irreducible, the generator the smallest packed
/// element of full order.
class Field {
public:
    static constexpr std::uint64_t kSizeCap = std::uint64_t{1} << 26;

    explicit Field(const TowerParams& params);

    const TowerParams& params() const noexcept { return params_; }
    std::uint32_t p() const noexcept { return params_.p; }
    std::uint32_t k() const noexcept { return params_.k; }
    std::uint32_t r() const noexcept { return params_.r; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint32_t degree() const noexcept { return params_.degree(); }
    /// Number of elements q^r.
    std::uint64_t size() const noexcept { return size_; }
    /// Multiplicative group order n = q^r - 1.
    std::uint64_t order() const noexcept { return order_; }
    const nt::Factorization& order_factorization() const noexcept { return order_factors_; }

    /// Monic modulus coefficients over F_p, low to high (length degree() + 1).
    std::span<const std::uint32_t> modulus() const noexcept { return modulus_; }

    Elt zero() const noexcept { return Elt{0}; }
    Elt one() const noexcept { return Elt{1}; }
    Elt generator() const noexcept { return generator_; }
    /// Checked conversion from a packed integer.
    Elt element(std::uint64_t packed) const;

    Elt add(Elt a, Elt b) const noexcept;
    Elt sub(Elt a, Elt b) const noexcept;
    Elt neg(Elt a) const noexcept;
    Elt mul(Elt a, Elt b) const noexcept;
    Elt div(Elt a, Elt b) const;
    Elt inv(Elt a) const;
    Elt pow(Elt a, std::uint64_t e) const noexcept;
    /// Multiplication by an element of the prime field.
    Elt scale(std::uint32_t c, Elt a) const noexcept;

    /// Discrete logarithm to base generator(), in [0, n).
    std::uint64_t log(Elt x) const;
    /// generator()^e.
    Elt exp(std::uint64_t e) const noexcept { return Elt{antilog_[e % order_]}; }

    /// x^((q^d)^j). d must divide r; j may be negative.
    Elt frobenius(Elt x, std::uint32_t d, std::int64_t j) const;
    /// x^(q^d) == x, i.e. x lies in F_{q^d}.
    bool in_subfield(Elt x, std::uint32_t d) const;
    /// All q^d elements of F_{q^d}, sorted by packed value.
    std::vector<Elt> subfield_elements(std::uint32_t d) const;
    bool is_primitive(Elt x) const;

    /// Adapted basis alpha_1..alpha_r: the first r/2 span F_{q^{r/2}} over F_q.
    std::span<const Elt> basis() const noexcept { return basis_; }
    /// The element outside F_{q^{r/2}} used to complete the basis.
    Elt completion_factor() const noexcept { return gamma_; }

    /// Base-field element with index c in [0, q): base-p digits of c are the
    /// coefficients over a fixed generator theta of F_q^*. For k = 1 this is
    /// the prime-field element c.
    Elt base_element(std::uint32_t c) const;
    /// Inverse of base_element; throws DomainError if x is not in F_q.
    std::uint32_t base_index(Elt x) const;

    /// Coordinates (a_1..a_r) of x in the adapted basis, as base-field indices.
    std::vector<std::uint32_t> coords(Elt x) const;
    /// sum a_i alpha_i.
    Elt combine(std::span<const std::uint32_t> coords) const;
    /// Number of nonzero adapted-basis coordinates.
    std::uint32_t weight(Elt x) const;

private:
    void search_modulus();
    void search_generator();
    void build_tables();
    void build_base_field();
    void build_basis();
    void build_coordinate_map();

    std::uint32_t digit(std::uint32_t packed, std::uint32_t i) const noexcept {
        return packed / pow_p_[i] % params_.p;
    }
    void check_divisor(std::uint32_t d) const;

    TowerParams params_;
    std::uint64_t q_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t order_ = 0;
    nt::Factorization order_factors_;
    std::vector<std::uint32_t> pow_p_;
    std::vector<std::uint32_t> modulus_;
    Elt generator_;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
    std::vector<Elt> base_elements_;
    std::unordered_map<std::uint32_t, std::uint32_t> base_index_;
    std::vector<Elt> basis_;
    Elt gamma_;
    // F_p-coordinate change: digits(x) -> (a_{i,j}) with a_i = sum_j a_{i,j} theta^j.
    std::vector<std::uint32_t> to_coords_;
    // theta^j * alpha_i at index i*k + j.
    std::vector<Elt> coord_units_;
};

}  // namespace charsum
