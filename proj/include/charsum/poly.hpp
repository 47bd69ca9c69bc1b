#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "charsum/field.hpp"

namespace charsum {

/// Dense univariate polynomial over F_{q^r}, coefficients low to high.
/// Trailing zero coefficients are always trimmed, so the zero polynomial
/// has an empty coefficient list and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Elt> coeffs);

    static Poly constant(Elt c) { return Poly({c}); }
    /// X
    static Poly x(const Field& field) { return Poly({field.zero(), field.one()}); }
    /// prod (X - root) over the given roots, repeats allowed.
    static Poly from_roots(const Field& field, std::span<const Elt> roots);

    const std::vector<Elt>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Elt leading() const noexcept { return c_.empty() ? Elt{} : c_.back(); }
    Elt coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elt{}; }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    std::vector<Elt> c_;
};

struct Root {
    Elt value;
    unsigned multiplicity;

    friend bool operator==(const Root&, const Root&) = default;
};

Elt eval(const Field& field, const Poly& f, Elt x);

Poly add(const Field& field, const Poly& a, const Poly& b);
Poly sub(const Field& field, const Poly& a, const Poly& b);
Poly mul(const Field& field, const Poly& a, const Poly& b);
Poly scale(const Field& field, Elt c, const Poly& a);
/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Field& field, const Poly& a, const Poly& b);
Poly derivative(const Field& field, const Poly& f);
Poly monic(const Field& field, const Poly& f);
Poly pow(const Field& field, const Poly& f, unsigned e);

/// Monic gcd by Euclid; throws BothZero when both inputs vanish.
Poly poly_gcd(const Field& field, const Poly& a, const Poly& b);

/// Degree of the radical of f. Handles f' = 0 (f = h(X^p)) by taking p-th
/// roots of the coefficients and recursing on h.
unsigned squarefree_degree(const Field& field, const Poly& f);

/// f(X + w)
Poly shift(const Field& field, const Poly& f, Elt w);

/// Roots in F_{q^r} with multiplicities, ascending by packed value. Full
/// field scan, multiplicities by repeated synthetic division.
std::vector<Root> roots_in_field(const Field& field, const Poly& f);

/// Smallest simple root in F_{q^r}, if any.
std::optional<Elt> has_simple_root(const Field& field, const Poly& f);

/// Whether some root of f(X + w1) and some root of f(X + w2) are conjugate
/// under x -> x^(q^d). Only defined for f split over F_{q^r}; throws
/// NonSplittingPolynomial otherwise.
bool shares_conjugated_roots(const Field& field, const Poly& f, Elt w1, Elt w2, std::uint32_t d);

}  // namespace charsum
