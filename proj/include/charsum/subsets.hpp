#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "charsum/field.hpp"

namespace charsum {

/// Coordinate restrictions A_1..A_r, each a set of base-field indices.
struct RestrictedFamily {
    std::vector<std::vector<std::uint32_t>> sets;

    friend bool operator==(const RestrictedFamily&, const RestrictedFamily&) = default;
};

/// Weight-s elements with respect to the adapted basis.
struct SparseSpec {
    std::uint32_t s = 1;

    /// min(s, r - s) / r
    long double rho(std::uint32_t r) const;
};

/// Sorts and deduplicates each A_i and checks it against the field.
/// Throws EmptyCoordinateSet, InconsistentContext (wrong r) or DomainError.
RestrictedFamily normalize(const Field& field, RestrictedFamily family);

RestrictedFamily whole_field_family(const Field& field);
/// A_i = F_q \ {c_i}. For q = 2 every A_i is a single point.
RestrictedFamily hyperplane_avoiding_family(const Field& field, const std::vector<std::uint32_t>& c);

std::uint64_t family_size(const RestrictedFamily& family);
bool is_hyperplane_avoiding(const Field& field, const RestrictedFamily& family);

inline std::uint32_t weight(const Field& field, Elt x) { return field.weight(x); }

/// G_A as a lazy, index-addressable stream in lexicographic coordinate order
/// (a_1 slowest). Ranges [begin, end) can be consumed independently.
class RestrictedSet {
public:
    RestrictedSet(const Field& field, const RestrictedFamily& family);

    std::uint64_t size() const noexcept { return size_; }
    Elt element_at(std::uint64_t index) const;
    std::vector<Elt> materialize() const;

    template <class Fn>
    void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const;
    template <class Fn>
    void for_each(Fn&& fn) const {
        for_each(0, size_, fn);
    }

private:
    const Field* field_;
    // terms_[i][c] = A_i[c] * alpha_i
    std::vector<std::vector<Elt>> terms_;
    std::uint64_t size_ = 1;
};

/// G_s in lexicographic support order, nonzero values lexicographic within
/// each support.
class SparseSet {
public:
    SparseSet(const Field& field, SparseSpec spec);

    std::uint64_t size() const noexcept { return size_; }
    std::vector<Elt> materialize() const;

    template <class Fn>
    void for_each(Fn&& fn) const;

private:
    const Field* field_;
    std::uint32_t s_;
    std::uint64_t size_;
};

/// V (coordinates 1..r/2) and W (coordinates r/2+1..r) with G_A = V + W.
std::pair<std::vector<Elt>, std::vector<Elt>> split_vw(const Field& field, const RestrictedFamily& family);

/// Elements sum_{l in [first, first+count)} a_l alpha_l with exactly `weight`
/// nonzero coordinates, lexicographic support order.
std::vector<Elt> elements_of_weight(const Field& field, std::uint32_t first, std::uint32_t count,
                                    std::uint32_t weight);

/// (U1^(i), U2^(s-i)): lower-half elements of weight i and upper-half
/// elements of weight s - i. Throws IndexOutOfRange unless 0 <= i <= s.
std::pair<std::vector<Elt>, std::vector<Elt>> split_sparse(const Field& field, SparseSpec spec, std::uint32_t i);

// ---------------------------------------------------------------------------

template <class Fn>
void RestrictedSet::for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    const std::size_t r = terms_.size();
    std::vector<std::uint32_t> digit(r);
    std::uint64_t rest = begin;
    for (std::size_t i = r; i-- > 0;) {
        digit[i] = static_cast<std::uint32_t>(rest % terms_[i].size());
        rest /= terms_[i].size();
    }
    // prefix[i] = sum of the first i chosen terms
    std::vector<Elt> prefix(r + 1);
    for (std::size_t i = 0; i < r; ++i) prefix[i + 1] = field_->add(prefix[i], terms_[i][digit[i]]);

    for (std::uint64_t index = begin;;) {
        fn(prefix[r]);
        if (++index == end) break;
        std::size_t pos = r;
        while (pos-- > 0) {
            if (++digit[pos] < terms_[pos].size()) break;
            digit[pos] = 0;
        }
        for (std::size_t i = pos; i < r; ++i) prefix[i + 1] = field_->add(prefix[i], terms_[i][digit[i]]);
    }
}

template <class Fn>
void SparseSet::for_each(Fn&& fn) const {
    const std::uint32_t r = field_->r();
    const std::uint32_t q1 = static_cast<std::uint32_t>(field_->q() - 1);
    const auto basis = field_->basis();
    std::vector<std::uint32_t> support(s_);
    for (std::uint32_t i = 0; i < s_; ++i) support[i] = i;
    std::vector<std::uint32_t> value(s_);
    std::vector<std::vector<Elt>> scaled(r, std::vector<Elt>(q1));
    for (std::uint32_t i = 0; i < r; ++i) {
        for (std::uint32_t c = 0; c < q1; ++c) scaled[i][c] = field_->mul(field_->base_element(c + 1), basis[i]);
    }
    for (;;) {
        std::fill(value.begin(), value.end(), 0);
        for (;;) {
            Elt x = field_->zero();
            for (std::uint32_t i = 0; i < s_; ++i) x = field_->add(x, scaled[support[i]][value[i]]);
            fn(x);
            std::uint32_t pos = s_;
            while (pos-- > 0) {
                if (++value[pos] < q1) break;
                value[pos] = 0;
            }
            if (pos == static_cast<std::uint32_t>(-1)) break;
        }
        // next combination in lexicographic order
        std::uint32_t i = s_;
        while (i-- > 0) {
            if (support[i] < r - s_ + i) break;
        }
        if (i == static_cast<std::uint32_t>(-1)) return;
        ++support[i];
        for (std::uint32_t j = i + 1; j < s_; ++j) support[j] = support[j - 1] + 1;
    }
}

}  // namespace charsum
