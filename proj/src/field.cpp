#include "charsum/field.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "charsum/error.hpp"

namespace charsum {

namespace {

// Dense polynomials over F_p used only while constructing the context.
using FpPoly = std::vector<std::uint32_t>;

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(nt::powmod(a, p - 2, p));
}

FpPoly poly_rem(FpPoly a, const FpPoly& f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::uint32_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_rem(std::move(out), f, p);
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// f is irreducible over F_p iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= deg f / 2.
bool is_irreducible(const FpPoly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;
    FpPoly frob{0, 1};  // x^(p^i) mod f
    for (std::size_t i = 1; i <= m / 2; ++i) {
        FpPoly base = frob;
        FpPoly acc{1};
        for (std::uint32_t e = 0; e < p; ++e) acc = poly_mulmod(acc, base, f, p);
        frob = acc;
        FpPoly h = frob;
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        if (h.empty()) return false;  // f divides x^(p^i) - x
        if (poly_gcd(f, h, p).size() > 1) return false;
    }
    return true;
}

}  // namespace

std::uint64_t TowerParams::q() const { return nt::checked_pow(p, k); }

Field::Field(const TowerParams& params) : params_(params) {
    if (!nt::is_prime(params.p)) {
        throw Error(Errc::NonPrime, "p = " + std::to_string(params.p) + " is not prime");
    }
    if (params.k < 1) throw Error(Errc::InvalidParams, "k must be positive");
    if (params.r < 2 || params.r % 2 != 0) {
        throw Error(Errc::InvalidParams, "r must be a positive even integer");
    }
    const std::uint32_t m = params.degree();
    unsigned __int128 size = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        size *= params.p;
        if (size > kSizeCap) throw Error(Errc::SizeCapExceeded, "q^r exceeds 2^26 elements");
    }
    q_ = params.q();
    size_ = static_cast<std::uint64_t>(size);
    order_ = size_ - 1;
    order_factors_ = nt::factorize(order_);

    pow_p_.resize(m + 1);
    pow_p_[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i) pow_p_[i] = pow_p_[i - 1] * params.p;

    search_modulus();
    search_generator();
    build_tables();
    build_base_field();
    build_basis();
    build_coordinate_map();
}

void Field::search_modulus() {
    const std::uint32_t p = params_.p;
    const std::uint32_t m = degree();
    FpPoly f(m + 1, 0);
    f[m] = 1;
    for (std::uint64_t low = 0; low < size_; ++low) {
        for (std::uint32_t i = 0; i < m; ++i) f[i] = static_cast<std::uint32_t>(low / pow_p_[i] % p);
        if (is_irreducible(f, p)) {
            modulus_ = f;
            return;
        }
    }
    throw Error(Errc::IrreducibleSearchFailed, "no irreducible modulus found");
}

void Field::search_generator() {
    const std::uint32_t p = params_.p;
    const std::uint32_t m = degree();
    auto to_poly = [&](std::uint64_t v) {
        FpPoly a(m, 0);
        for (std::uint32_t i = 0; i < m; ++i) a[i] = static_cast<std::uint32_t>(v / pow_p_[i] % p);
        trim(a);
        return a;
    };
    auto power = [&](FpPoly base, std::uint64_t e) {
        FpPoly acc{1};
        while (e > 0) {
            if (e & 1) acc = poly_mulmod(acc, base, modulus_, p);
            base = poly_mulmod(base, base, modulus_, p);
            e >>= 1;
        }
        return acc;
    };
    const auto primes = order_factors_.prime_divisors();
    for (std::uint64_t v = 1; v < size_; ++v) {
        const FpPoly a = to_poly(v);
        bool primitive = true;
        for (std::uint64_t l : primes) {
            if (power(a, order_ / l) == FpPoly{1}) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = Elt{static_cast<std::uint32_t>(v)};
            return;
        }
    }
    throw Error(Errc::IrreducibleSearchFailed, "no primitive element found");
}

void Field::build_tables() {
    const std::uint32_t p = params_.p;
    const std::uint32_t m = degree();
    std::array<std::uint32_t, 32> g{};
    std::uint32_t g_deg = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
        g[i] = digit(generator_.v, i);
        if (g[i] != 0) g_deg = i;
    }

    antilog_.assign(order_, 0);
    log_.assign(size_, std::numeric_limits<std::uint32_t>::max());

    std::array<std::uint32_t, 32> cur{};
    cur[0] = 1;
    for (std::uint64_t e = 0; e < order_; ++e) {
        std::uint32_t packed = 0;
        for (std::uint32_t i = 0; i < m; ++i) packed += cur[i] * pow_p_[i];
        if (log_[packed] != std::numeric_limits<std::uint32_t>::max()) {
            throw Error(Errc::InconsistentContext, "generator order is smaller than q^r - 1");
        }
        antilog_[e] = packed;
        log_[packed] = static_cast<std::uint32_t>(e);

        // cur <- cur * g, as sum over the digits of g of g_t * x^t * cur.
        std::array<std::uint32_t, 32> acc{};
        std::array<std::uint32_t, 32> shifted = cur;
        for (std::uint32_t t = 0; t <= g_deg; ++t) {
            if (g[t] != 0) {
                for (std::uint32_t i = 0; i < m; ++i) acc[i] = (acc[i] + g[t] * shifted[i]) % p;
            }
            if (t < g_deg) {
                const std::uint32_t carry = shifted[m - 1];
                for (std::uint32_t i = m - 1; i > 0; --i) shifted[i] = shifted[i - 1];
                shifted[0] = 0;
                if (carry != 0) {
                    for (std::uint32_t i = 0; i < m; ++i) {
                        shifted[i] = (shifted[i] + p - carry * modulus_[i] % p) % p;
                    }
                }
            }
        }
        cur = acc;
    }
}

void Field::build_base_field() {
    const std::uint32_t k = params_.k;
    const Elt theta = exp(order_ / (q_ - 1));
    std::vector<Elt> theta_pows(k);
    theta_pows[0] = one();
    for (std::uint32_t j = 1; j < k; ++j) theta_pows[j] = mul(theta_pows[j - 1], theta);

    base_elements_.resize(q_);
    for (std::uint32_t c = 0; c < q_; ++c) {
        Elt x = zero();
        for (std::uint32_t j = 0; j < k; ++j) x = add(x, scale(digit(c, j), theta_pows[j]));
        base_elements_[c] = x;
        base_index_.emplace(x.v, c);
    }
    if (base_index_.size() != q_) {
        throw Error(Errc::InconsistentContext, "base-field encoding is not injective");
    }
}

void Field::build_basis() {
    const std::uint32_t half = params_.r / 2;
    const std::uint64_t q_half = nt::checked_pow(q_, half);
    const Elt beta = exp(q_half + 1);  // generates F_{q^{r/2}}^*

    basis_.resize(params_.r);
    basis_[0] = one();
    for (std::uint32_t i = 1; i < half; ++i) basis_[i] = mul(basis_[i - 1], beta);

    for (std::uint64_t v = 1; v < size_; ++v) {
        if (!in_subfield(Elt{static_cast<std::uint32_t>(v)}, half)) {
            gamma_ = Elt{static_cast<std::uint32_t>(v)};
            break;
        }
    }
    for (std::uint32_t i = 0; i < half; ++i) basis_[half + i] = mul(gamma_, basis_[i]);
}

void Field::build_coordinate_map() {
    const std::uint32_t p = params_.p;
    const std::uint32_t k = params_.k;
    const std::uint32_t m = degree();

    coord_units_.resize(m);
    for (std::uint32_t i = 0; i < params_.r; ++i) {
        for (std::uint32_t j = 0; j < k; ++j) {
            std::uint32_t c = pow_p_[j];  // base index with a single digit 1 at position j
            coord_units_[i * k + j] = mul(base_element(c), basis_[i]);
        }
    }

    // Invert the m x m matrix whose columns are the digits of the coordinate units.
    std::vector<std::uint32_t> a(m * m), inv(m * m, 0);
    for (std::uint32_t col = 0; col < m; ++col) {
        for (std::uint32_t row = 0; row < m; ++row) a[row * m + col] = digit(coord_units_[col].v, row);
    }
    for (std::uint32_t i = 0; i < m; ++i) inv[i * m + i] = 1;
    for (std::uint32_t col = 0; col < m; ++col) {
        std::uint32_t pivot = col;
        while (pivot < m && a[pivot * m + col] == 0) ++pivot;
        if (pivot == m) {
            throw Error(Errc::InconsistentContext, "adapted basis is not linearly independent");
        }
        if (pivot != col) {
            for (std::uint32_t c = 0; c < m; ++c) {
                std::swap(a[pivot * m + c], a[col * m + c]);
                std::swap(inv[pivot * m + c], inv[col * m + c]);
            }
        }
        const std::uint32_t s = inv_mod(a[col * m + col], p);
        for (std::uint32_t c = 0; c < m; ++c) {
            a[col * m + c] = a[col * m + c] * s % p;
            inv[col * m + c] = inv[col * m + c] * s % p;
        }
        for (std::uint32_t row = 0; row < m; ++row) {
            const std::uint32_t factor = a[row * m + col];
            if (row == col || factor == 0) continue;
            for (std::uint32_t c = 0; c < m; ++c) {
                a[row * m + c] = (a[row * m + c] + p - factor * a[col * m + c] % p) % p;
                inv[row * m + c] = (inv[row * m + c] + p - factor * inv[col * m + c] % p) % p;
            }
        }
    }
    to_coords_ = std::move(inv);
}

Elt Field::element(std::uint64_t packed) const {
    if (packed >= size_) {
        throw Error(Errc::DomainError, "packed value " + std::to_string(packed) + " out of range");
    }
    return Elt{static_cast<std::uint32_t>(packed)};
}

Elt Field::add(Elt a, Elt b) const noexcept {
    const std::uint32_t p = params_.p;
    if (p == 2) return Elt{a.v ^ b.v};
    std::uint32_t x = a.v, y = b.v, out = 0, place = 1;
    while (x != 0 || y != 0) {
        out += (x % p + y % p) % p * place;
        x /= p;
        y /= p;
        place *= p;
    }
    return Elt{out};
}

Elt Field::neg(Elt a) const noexcept {
    const std::uint32_t p = params_.p;
    if (p == 2) return a;
    std::uint32_t x = a.v, out = 0, place = 1;
    while (x != 0) {
        out += (p - x % p) % p * place;
        x /= p;
        place *= p;
    }
    return Elt{out};
}

Elt Field::sub(Elt a, Elt b) const noexcept { return add(a, neg(b)); }

Elt Field::scale(std::uint32_t c, Elt a) const noexcept {
    const std::uint32_t p = params_.p;
    c %= p;
    if (c == 0) return zero();
    if (c == 1) return a;
    std::uint32_t x = a.v, out = 0, place = 1;
    while (x != 0) {
        out += x % p * c % p * place;
        x /= p;
        place *= p;
    }
    return Elt{out};
}

Elt Field::mul(Elt a, Elt b) const noexcept {
    if (a.is_zero() || b.is_zero()) return zero();
    std::uint64_t e = std::uint64_t{log_[a.v]} + log_[b.v];
    if (e >= order_) e -= order_;
    return Elt{antilog_[e]};
}

Elt Field::inv(Elt a) const {
    if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    const std::uint64_t e = log_[a.v];
    return Elt{antilog_[e == 0 ? 0 : order_ - e]};
}

Elt Field::div(Elt a, Elt b) const {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    if (a.is_zero()) return zero();
    std::uint64_t e = std::uint64_t{log_[a.v]} + order_ - log_[b.v];
    if (e >= order_) e -= order_;
    return Elt{antilog_[e]};
}

Elt Field::pow(Elt a, std::uint64_t e) const noexcept {
    if (a.is_zero()) return e == 0 ? one() : zero();
    return Elt{antilog_[nt::mulmod(log_[a.v], e % order_, order_)]};
}

std::uint64_t Field::log(Elt x) const {
    if (x.is_zero()) throw Error(Errc::LogOfZero, "discrete log of zero");
    return log_[x.v];
}

void Field::check_divisor(std::uint32_t d) const {
    if (d == 0 || params_.r % d != 0) {
        throw Error(Errc::InvalidDivisor, std::to_string(d) + " does not divide r = " +
                                              std::to_string(params_.r));
    }
}

Elt Field::frobenius(Elt x, std::uint32_t d, std::int64_t j) const {
    check_divisor(d);
    if (x.is_zero()) return x;
    const std::int64_t cycle = params_.r / d;
    const std::int64_t jj = ((j % cycle) + cycle) % cycle;
    const std::uint64_t e = nt::powmod(q_ % order_, std::uint64_t{d} * static_cast<std::uint64_t>(jj), order_);
    return Elt{antilog_[nt::mulmod(log_[x.v], e, order_)]};
}

bool Field::in_subfield(Elt x, std::uint32_t d) const {
    check_divisor(d);
    if (x.is_zero()) return true;
    const std::uint64_t qd = nt::checked_pow(q_, d);
    return nt::mulmod(log_[x.v], qd - 1, order_) == 0;
}

std::vector<Elt> Field::subfield_elements(std::uint32_t d) const {
    check_divisor(d);
    const std::uint64_t qd = nt::checked_pow(q_, d);
    const std::uint64_t step = order_ / (qd - 1);
    std::vector<Elt> out;
    out.reserve(qd);
    out.push_back(zero());
    for (std::uint64_t i = 0; i < qd - 1; ++i) out.push_back(exp(i * step));
    std::sort(out.begin(), out.end());
    return out;
}

bool Field::is_primitive(Elt x) const {
    if (x.is_zero()) return false;
    return std::gcd(std::uint64_t{log_[x.v]}, order_) == 1;
}

Elt Field::base_element(std::uint32_t c) const {
    if (c >= q_) throw Error(Errc::DomainError, "base-field index " + std::to_string(c) + " >= q");
    return base_elements_[c];
}

std::uint32_t Field::base_index(Elt x) const {
    const auto it = base_index_.find(x.v);
    if (it == base_index_.end()) throw Error(Errc::DomainError, "element is not in F_q");
    return it->second;
}

std::vector<std::uint32_t> Field::coords(Elt x) const {
    const std::uint32_t p = params_.p;
    const std::uint32_t k = params_.k;
    const std::uint32_t m = degree();
    std::array<std::uint32_t, 32> dig{};
    for (std::uint32_t i = 0; i < m; ++i) dig[i] = digit(x.v, i);

    std::vector<std::uint32_t> out(params_.r, 0);
    for (std::uint32_t row = 0; row < m; ++row) {
        std::uint32_t acc = 0;
        for (std::uint32_t c = 0; c < m; ++c) acc = (acc + to_coords_[row * m + c] * dig[c]) % p;
        out[row / k] += acc * pow_p_[row % k];
    }
    return out;
}

Elt Field::combine(std::span<const std::uint32_t> coords) const {
    if (coords.size() != params_.r) {
        throw Error(Errc::DomainError, "expected " + std::to_string(params_.r) + " coordinates");
    }
    const std::uint32_t k = params_.k;
    Elt x = zero();
    for (std::uint32_t i = 0; i < params_.r; ++i) {
        if (coords[i] >= q_) throw Error(Errc::DomainError, "coordinate out of F_q range");
        for (std::uint32_t j = 0; j < k; ++j) {
            const std::uint32_t c = digit(coords[i], j);
            if (c != 0) x = add(x, scale(c, coord_units_[i * k + j]));
        }
    }
    return x;
}

std::uint32_t Field::weight(Elt x) const {
    const auto c = coords(x);
    return static_cast<std::uint32_t>(std::count_if(c.begin(), c.end(), [](std::uint32_t a) { return a != 0; }));
}

}  // namespace charsum
