#include "charsum/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "charsum/error.hpp"

namespace charsum::nt {

namespace {

constexpr std::uint64_t kFactorLimit = std::uint64_t{1} << 63;

std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, ys = 2, g = 1, q = 1;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = step(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = pollard_brent(n);
    split(d, primes);
    split(n / d, primes);
}

}  // namespace

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization::Factorization(std::uint64_t value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {}

std::uint64_t Factorization::euler_phi() const {
    std::uint64_t phi = value_;
    for (const auto& f : factors_) phi = phi / f.prime * (f.prime - 1);
    return phi;
}

int Factorization::mobius() const {
    for (const auto& f : factors_) {
        if (f.exponent > 1) return 0;
    }
    return factors_.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t Factorization::squarefree_divisor_count() const {
    return std::uint64_t{1} << factors_.size();
}

std::vector<std::uint64_t> Factorization::divisors() const {
    std::vector<std::uint64_t> out{1};
    for (const auto& f : factors_) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (std::uint32_t e = 1; e <= f.exponent; ++e) {
            pk *= f.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> Factorization::squarefree_divisors() const {
    std::vector<std::uint64_t> out{1};
    for (const auto& f : factors_) {
        const std::size_t base = out.size();
        for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * f.prime);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> Factorization::prime_divisors() const {
    std::vector<std::uint64_t> out;
    out.reserve(factors_.size());
    for (const auto& f : factors_) out.push_back(f.prime);
    return out;
}

Factorization factorize(std::uint64_t t) {
    if (t == 0) throw Error(Errc::DomainError, "cannot factorize 0");
    if (t > kFactorLimit) throw Error(Errc::FactorizationTooLarge, "t exceeds 2^63");

    std::vector<std::uint64_t> primes;
    std::uint64_t rest = t;
    for (std::uint64_t p = 2; p < 1000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (rest % p == 0) {
            primes.push_back(p);
            rest /= p;
        }
    }
    split(rest, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<PrimePower> factors;
    for (std::uint64_t p : primes) {
        if (!factors.empty() && factors.back().prime == p) {
            ++factors.back().exponent;
        } else {
            factors.push_back({p, 1});
        }
    }
    return Factorization(t, std::move(factors));
}

std::uint64_t euler_phi(std::uint64_t t) { return factorize(t).euler_phi(); }
int mobius(std::uint64_t t) { return factorize(t).mobius(); }
std::uint64_t squarefree_divisor_count(std::uint64_t t) {
    return factorize(t).squarefree_divisor_count();
}

long double lemma36_bound(long double t) {
    if (!(t >= 3.0L)) throw Error(Errc::DomainError, "lemma36_bound requires t >= 3");
    return std::pow(t, 0.96L / std::log(std::log(t)));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > UINT64_MAX) throw Error(Errc::DomainError, "binomial overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > UINT64_MAX) throw Error(Errc::DomainError, "integer power overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace charsum::nt
