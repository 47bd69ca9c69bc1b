#include "charsum/subsets.hpp"

#include <algorithm>
#include <string>

#include "charsum/error.hpp"

namespace charsum {

long double SparseSpec::rho(std::uint32_t r) const {
    return static_cast<long double>(std::min(s, r - s)) / static_cast<long double>(r);
}

RestrictedFamily normalize(const Field& field, RestrictedFamily family) {
    if (family.sets.size() != field.r()) {
        throw Error(Errc::InconsistentContext, "family has " + std::to_string(family.sets.size()) +
                                                   " coordinate sets, field has r = " + std::to_string(field.r()));
    }
    for (std::size_t i = 0; i < family.sets.size(); ++i) {
        auto& a = family.sets[i];
        if (a.empty()) throw Error(Errc::EmptyCoordinateSet, "A_" + std::to_string(i + 1) + " is empty");
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        if (a.back() >= field.q()) {
            throw Error(Errc::DomainError, "A_" + std::to_string(i + 1) + " contains an index >= q");
        }
    }
    return family;
}

RestrictedFamily whole_field_family(const Field& field) {
    std::vector<std::uint32_t> all(field.q());
    for (std::uint32_t c = 0; c < all.size(); ++c) all[c] = c;
    return RestrictedFamily{std::vector<std::vector<std::uint32_t>>(field.r(), all)};
}

RestrictedFamily hyperplane_avoiding_family(const Field& field, const std::vector<std::uint32_t>& c) {
    if (c.size() != field.r()) throw Error(Errc::InconsistentContext, "need exactly r values c_i");
    RestrictedFamily family;
    for (std::uint32_t ci : c) {
        if (ci >= field.q()) throw Error(Errc::DomainError, "c_i must be a base-field index");
        std::vector<std::uint32_t> a;
        for (std::uint32_t x = 0; x < field.q(); ++x) {
            if (x != ci) a.push_back(x);
        }
        family.sets.push_back(std::move(a));
    }
    return family;
}

std::uint64_t family_size(const RestrictedFamily& family) {
    std::uint64_t n = 1;
    for (const auto& a : family.sets) n *= a.size();
    return n;
}

bool is_hyperplane_avoiding(const Field& field, const RestrictedFamily& family) {
    return std::all_of(family.sets.begin(), family.sets.end(),
                       [&](const auto& a) { return a.size() + 1 == field.q(); });
}

RestrictedSet::RestrictedSet(const Field& field, const RestrictedFamily& family) : field_(&field) {
    const RestrictedFamily fam = normalize(field, family);
    const auto basis = field.basis();
    terms_.resize(field.r());
    for (std::uint32_t i = 0; i < field.r(); ++i) {
        for (std::uint32_t c : fam.sets[i]) terms_[i].push_back(field.mul(field.base_element(c), basis[i]));
        size_ *= terms_[i].size();
    }
}

Elt RestrictedSet::element_at(std::uint64_t index) const {
    if (index >= size_) throw Error(Errc::IndexOutOfRange, "index beyond the end of G_A");
    Elt x = field_->zero();
    for (std::size_t i = terms_.size(); i-- > 0;) {
        x = field_->add(x, terms_[i][index % terms_[i].size()]);
        index /= terms_[i].size();
    }
    return x;
}

std::vector<Elt> RestrictedSet::materialize() const {
    std::vector<Elt> out;
    out.reserve(size_);
    for_each([&](Elt x) { out.push_back(x); });
    return out;
}

SparseSet::SparseSet(const Field& field, SparseSpec spec) : field_(&field), s_(spec.s) {
    if (spec.s < 1 || spec.s >= field.r()) {
        throw Error(Errc::DomainError, "sparse weight s must satisfy 1 <= s < r");
    }
    size_ = nt::binomial(field.r(), spec.s) * nt::checked_pow(field.q() - 1, spec.s);
}

std::vector<Elt> SparseSet::materialize() const {
    std::vector<Elt> out;
    out.reserve(size_);
    for_each([&](Elt x) { out.push_back(x); });
    return out;
}

std::pair<std::vector<Elt>, std::vector<Elt>> split_vw(const Field& field, const RestrictedFamily& family) {
    const RestrictedFamily fam = normalize(field, family);
    const std::uint32_t half = field.r() / 2;
    const auto basis = field.basis();
    auto span_part = [&](std::uint32_t first) {
        std::vector<Elt> out{field.zero()};
        for (std::uint32_t i = first; i < first + half; ++i) {
            std::vector<Elt> next;
            next.reserve(out.size() * fam.sets[i].size());
            for (Elt x : out) {
                for (std::uint32_t c : fam.sets[i]) next.push_back(field.add(x, field.mul(field.base_element(c), basis[i])));
            }
            out = std::move(next);
        }
        return out;
    };
    return {span_part(0), span_part(half)};
}

std::vector<Elt> elements_of_weight(const Field& field, std::uint32_t first, std::uint32_t count,
                                    std::uint32_t weight) {
    std::vector<Elt> out;
    if (weight > count) return out;
    const auto basis = field.basis();
    const std::uint32_t q1 = static_cast<std::uint32_t>(field.q() - 1);
    // Recursive lexicographic walk over supports, then values.
    auto walk = [&](auto&& self, std::uint32_t pos, std::uint32_t left, Elt acc) -> void {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (std::uint32_t i = pos; i + left <= count; ++i) {
            for (std::uint32_t c = 1; c <= q1; ++c) {
                self(self, i + 1, left - 1, field.add(acc, field.mul(field.base_element(c), basis[first + i])));
            }
        }
    };
    walk(walk, 0, weight, field.zero());
    return out;
}

std::pair<std::vector<Elt>, std::vector<Elt>> split_sparse(const Field& field, SparseSpec spec, std::uint32_t i) {
    if (i > spec.s) throw Error(Errc::IndexOutOfRange, "split index must lie in [0, s]");
    const std::uint32_t half = field.r() / 2;
    return {elements_of_weight(field, 0, half, i), elements_of_weight(field, half, half, spec.s - i)};
}

}  // namespace charsum
