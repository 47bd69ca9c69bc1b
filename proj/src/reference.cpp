#include "charsum/reference.hpp"

#include <vector>

namespace charsum::reference {

namespace {

Elt power(const Field& field, Elt x, std::uint64_t e) {
    Elt out = field.one();
    while (e > 0) {
        if (e & 1) out = field.mul(out, x);
        x = field.mul(x, x);
        e >>= 1;
    }
    return out;
}

// member[i][c] = c in A_i
std::vector<std::vector<bool>> membership(const Field& field, const RestrictedFamily& family) {
    const RestrictedFamily fam = normalize(field, family);
    std::vector<std::vector<bool>> member(field.r(), std::vector<bool>(field.q(), false));
    for (std::uint32_t i = 0; i < field.r(); ++i) {
        for (std::uint32_t c : fam.sets[i]) member[i][c] = true;
    }
    return member;
}

std::optional<std::uint64_t> chi_f(const Field& field, const MulChar& chi, const Poly& f, Elt x) {
    return eval_exponent(field, chi, eval_naive(field, f, x));
}

}  // namespace

Elt eval_naive(const Field& field, const Poly& f, Elt x) {
    Elt out = field.zero();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) out = field.add(out, field.mul(f.coeffs()[i], power(field, x, i)));
    return out;
}

SumAccumulator char_sum(const Field& field, const RestrictedFamily& family, const MulChar& chi, const Poly& f) {
    const auto member = membership(field, family);
    SumAccumulator acc(chi.order());
    for (std::uint64_t v = 0; v < field.size(); ++v) {
        const Elt x = field.element(v);
        const auto a = field.coords(x);
        bool in = true;
        for (std::uint32_t i = 0; i < field.r() && in; ++i) in = member[i][a[i]];
        if (in) acc.add(chi_f(field, chi, f, x));
    }
    return acc;
}

SumAccumulator char_sum(const Field& field, SparseSpec spec, const MulChar& chi, const Poly& f) {
    SumAccumulator acc(chi.order());
    for (std::uint64_t v = 0; v < field.size(); ++v) {
        const Elt x = field.element(v);
        if (field.weight(x) == spec.s) acc.add(chi_f(field, chi, f, x));
    }
    return acc;
}

SumAccumulator correlation_sum(const Field& field, Elt w1, Elt w2, const MulChar& chi, const Poly& f) {
    SumAccumulator acc(chi.order());
    for (std::uint64_t v = 0; v < field.size(); ++v) {
        const Elt a = field.element(v);
        if (!field.in_subfield(a, field.r() / 2)) continue;
        const auto e1 = chi_f(field, chi, f, field.add(a, w1));
        const auto e2 = chi_f(field, chi, f, field.add(a, w2));
        if (e1 && e2) {
            acc.add((*e1 + chi.order() - *e2) % chi.order());
        } else {
            acc.add_zero();
        }
    }
    return acc;
}

bool is_primitive_by_order(const Field& field, Elt x) {
    if (x.is_zero()) return false;
    const std::uint64_t n = field.order();
    if (power(field, x, n) != field.one()) return false;
    for (std::uint64_t l : field.order_factorization().prime_divisors()) {
        if (power(field, x, n / l) == field.one()) return false;
    }
    return true;
}

std::uint64_t primitive_count(const Field& field, const RestrictedFamily& family) {
    const auto member = membership(field, family);
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < field.size(); ++v) {
        const Elt x = field.element(v);
        const auto a = field.coords(x);
        bool in = true;
        for (std::uint32_t i = 0; i < field.r() && in; ++i) in = member[i][a[i]];
        if (in && is_primitive_by_order(field, x)) ++count;
    }
    return count;
}

}  // namespace charsum::reference
