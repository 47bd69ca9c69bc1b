#include "charsum/character.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "charsum/error.hpp"

namespace charsum {

namespace {

struct Neumaier {
    long double sum = 0.0L;
    long double comp = 0.0L;

    void add(long double x) {
        const long double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    long double total() const { return sum + comp; }
};

// cos/sin of 2 pi t / d, folded into the first octant so the argument of
// the libm call stays small.
ComplexValue root_of_unity(std::uint64_t t, std::uint64_t d) {
    if (t == 0) return {1.0L, 0.0L};
    const unsigned __int128 t8 = static_cast<unsigned __int128>(t) * 8;
    const std::uint64_t octant = static_cast<std::uint64_t>(t8 / d);
    const std::uint64_t rest = static_cast<std::uint64_t>(t8 % d);  // angle = (octant + rest/d) * pi/4
    const long double frac = static_cast<long double>(rest) / static_cast<long double>(d);
    const long double quarter_pi = std::numbers::pi_v<long double> / 4.0L;
    long double c, s;
    if (octant % 2 == 0) {
        c = std::cos(frac * quarter_pi);
        s = std::sin(frac * quarter_pi);
    } else {
        // Reflect within the quadrant: angle = (octant+1) pi/4 - (1-frac) pi/4.
        const long double beta = (1.0L - frac) * quarter_pi;
        c = std::sin(beta);
        s = std::cos(beta);
    }
    // Rotate by the quadrant.
    switch (octant / 2) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

}  // namespace

MulChar::MulChar(std::uint64_t group_order, std::uint64_t index)
    : n_(group_order), index_(index), order_(group_order / std::gcd(group_order, index)) {
    if (index >= group_order) {
        throw Error(Errc::IndexOutOfRange, "character index " + std::to_string(index) + " >= n");
    }
}

std::uint64_t MulChar::exponent_of_log(std::uint64_t log_x) const noexcept {
    return nt::mulmod(index_, log_x, n_) / (n_ / order_);
}

MulChar char_of_index(const Field& field, std::uint64_t j) { return MulChar(field.order(), j); }

MulChar conjugate(const MulChar& chi) {
    return MulChar(chi.group_order(), (chi.group_order() - chi.index()) % chi.group_order());
}

std::optional<std::uint64_t> eval_exponent(const Field& field, const MulChar& chi, Elt x) {
    if (x.is_zero()) return std::nullopt;
    return chi.exponent_of_log(field.log(x));
}

std::vector<MulChar> characters_of_order(const Field& field, std::uint64_t e) {
    const std::uint64_t n = field.order();
    if (e == 0 || n % e != 0) {
        throw Error(Errc::NonDivisorOrder, std::to_string(e) + " does not divide n = " + std::to_string(n));
    }
    // chi_j has order e iff j = (n/e) * u with gcd(u, e) = 1.
    std::vector<MulChar> out;
    const std::uint64_t step = n / e;
    for (std::uint64_t u = 0; u < e; ++u) {
        if (std::gcd(u, e) == 1) out.emplace_back(n, u * step);
    }
    return out;
}

std::uint64_t SumAccumulator::terms() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), zero_hits_);
}

void SumAccumulator::merge(const SumAccumulator& other) {
    if (other.counts_.size() != counts_.size()) {
        throw Error(Errc::InconsistentContext, "merging accumulators of different root orders");
    }
    for (std::size_t t = 0; t < counts_.size(); ++t) counts_[t] += other.counts_[t];
    zero_hits_ += other.zero_hits_;
}

ComplexValue value(const SumAccumulator& acc) {
    const std::uint64_t d = acc.root_order();
    Neumaier re, im;
    for (std::uint64_t t = 0; t < d; ++t) {
        const std::uint64_t c = acc.counts()[t];
        if (c == 0) continue;
        const ComplexValue z = root_of_unity(t, d);
        re.add(static_cast<long double>(c) * z.re);
        im.add(static_cast<long double>(c) * z.im);
    }
    return {re.total(), im.total()};
}

long double magnitude(const SumAccumulator& acc) {
    const ComplexValue z = value(acc);
    return std::hypot(z.re, z.im);
}

}  // namespace charsum
