#include "charsum/poly.hpp"

#include <algorithm>

#include "charsum/error.hpp"

namespace charsum {

namespace {

void trim(std::vector<Elt>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void require_nonzero(const Poly& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "polynomial is zero");
}

// Divide by (X - a); f(a) must be zero.
Poly deflate(const Field& field, const Poly& f, Elt a) {
    const auto& c = f.coeffs();
    std::vector<Elt> q(c.size() - 1);
    Elt carry = field.zero();
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        carry = field.add(c[i], field.mul(carry, a));
        q[i - 1] = carry;
    }
    return Poly(std::move(q));
}

std::vector<Root> split_roots(const Field& field, const Poly& f) {
    const auto roots = roots_in_field(field, f);
    unsigned total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    if (static_cast<int>(total) != f.degree()) {
        throw Error(Errc::NonSplittingPolynomial, "polynomial does not split over F_{q^r}");
    }
    return roots;
}

}  // namespace

Poly::Poly(std::vector<Elt> coeffs) : c_(std::move(coeffs)) { trim(c_); }

Poly Poly::from_roots(const Field& field, std::span<const Elt> roots) {
    Poly f = constant(field.one());
    for (Elt a : roots) f = mul(field, f, Poly({field.neg(a), field.one()}));
    return f;
}

Elt eval(const Field& field, const Poly& f, Elt x) {
    const auto& c = f.coeffs();
    Elt acc = field.zero();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
    return acc;
}

Poly add(const Field& field, const Poly& a, const Poly& b) {
    std::vector<Elt> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly sub(const Field& field, const Poly& a, const Poly& b) {
    std::vector<Elt> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(out));
}

Poly mul(const Field& field, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Elt> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] = field.add(out[i + j], field.mul(a.coeffs()[i], b.coeffs()[j]));
        }
    }
    return Poly(std::move(out));
}

Poly scale(const Field& field, Elt c, const Poly& a) {
    std::vector<Elt> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.mul(c, a.coeffs()[i]);
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Field& field, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<Elt> rem = a.coeffs();
    if (a.degree() < b.degree()) return {Poly{}, a};
    const std::size_t db = b.coeffs().size() - 1;
    const Elt lead_inv = field.inv(b.leading());
    std::vector<Elt> quot(rem.size() - db);
    for (std::size_t i = rem.size(); i-- > db;) {
        const Elt c = field.mul(rem[i], lead_inv);
        quot[i - db] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[i - db + j] = field.sub(rem[i - db + j], field.mul(c, b.coeffs()[j]));
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly derivative(const Field& field, const Poly& f) {
    if (f.degree() < 1) return {};
    std::vector<Elt> out(f.coeffs().size() - 1);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        out[i - 1] = field.scale(static_cast<std::uint32_t>(i % field.p()), f.coeffs()[i]);
    }
    return Poly(std::move(out));
}

Poly monic(const Field& field, const Poly& f) {
    if (f.is_zero()) return f;
    return scale(field, field.inv(f.leading()), f);
}

Poly pow(const Field& field, const Poly& f, unsigned e) {
    Poly acc = Poly::constant(field.one());
    for (unsigned i = 0; i < e; ++i) acc = mul(field, acc, f);
    return acc;
}

Poly poly_gcd(const Field& field, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd of two zero polynomials");
    Poly x = monic(field, a);
    Poly y = monic(field, b);
    while (!y.is_zero()) {
        Poly r = monic(field, divmod(field, x, y).second);
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

unsigned squarefree_degree(const Field& field, const Poly& f) {
    require_nonzero(f);
    if (f.degree() < 1) throw Error(Errc::ConstantPolynomial, "squarefree degree of a constant");

    const Poly df = derivative(field, f);
    if (df.is_zero()) {
        // f = h(X^p); the p-th root of c is c^(p^(m-1)).
        const std::uint32_t p = field.p();
        const std::uint64_t root_exp = nt::checked_pow(p, field.degree() - 1);
        std::vector<Elt> h;
        for (std::size_t i = 0; i < f.coeffs().size(); i += p) h.push_back(field.pow(f.coeffs()[i], root_exp));
        return squarefree_degree(field, Poly(std::move(h)));
    }

    // u collects the irreducible factors whose multiplicity is prime to p;
    // what is left of g after stripping them has zero derivative.
    const Poly g = poly_gcd(field, f, df);
    const Poly u = divmod(field, f, g).first;
    Poly w = g;
    for (;;) {
        const Poly t = poly_gcd(field, w, u);
        if (t.degree() < 1) break;
        w = divmod(field, w, t).first;
    }
    unsigned d = static_cast<unsigned>(u.degree());
    if (w.degree() >= 1) d += squarefree_degree(field, w);
    return d;
}

Poly shift(const Field& field, const Poly& f, Elt w) {
    // Horner in the ring: f(X + w) = (...(c_n (X+w) + c_{n-1})(X+w) + ...).
    const Poly xw({w, field.one()});
    Poly acc;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(field, mul(field, acc, xw), Poly::constant(*it));
    return acc;
}

std::vector<Root> roots_in_field(const Field& field, const Poly& f) {
    require_nonzero(f);
    std::vector<Root> out;
    if (f.degree() < 1) return out;
    int found = 0;
    for (std::uint64_t v = 0; v < field.size(); ++v) {
        const Elt a{static_cast<std::uint32_t>(v)};
        if (!eval(field, f, a).is_zero()) continue;
        Poly rest = deflate(field, f, a);
        unsigned mult = 1;
        while (rest.degree() >= 1 && eval(field, rest, a).is_zero()) {
            rest = deflate(field, rest, a);
            ++mult;
        }
        out.push_back({a, mult});
        found += static_cast<int>(mult);
        if (found == f.degree()) break;
    }
    return out;
}

std::optional<Elt> has_simple_root(const Field& field, const Poly& f) {
    for (const auto& r : roots_in_field(field, f)) {
        if (r.multiplicity == 1) return r.value;
    }
    return std::nullopt;
}

bool shares_conjugated_roots(const Field& field, const Poly& f, Elt w1, Elt w2, std::uint32_t d) {
    require_nonzero(f);
    if (d == 0 || field.r() % d != 0) {
        throw Error(Errc::InvalidDivisor, "d must divide r");
    }
    const auto roots = split_roots(field, f);
    const std::uint32_t cycle = field.r() / d;
    // Roots of f(X + w) are rho - w.
    for (const auto& a : roots) {
        const Elt rho1 = field.sub(a.value, w1);
        for (std::uint32_t j = 0; j < cycle; ++j) {
            const Elt conj = field.frobenius(rho1, d, j);
            for (const auto& b : roots) {
                if (field.sub(b.value, w2) == conj) return true;
            }
        }
    }
    return false;
}

}  // namespace charsum
