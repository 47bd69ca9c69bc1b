#pragma once

#include <cstdint>
#include <vector>

namespace charsum::nt {

struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer, with the arithmetic functions
/// that only depend on it.
class Factorization {
public:
    Factorization() = default;
    Factorization(std::uint64_t value, std::vector<PrimePower> factors);

    std::uint64_t value() const noexcept { return value_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }

    std::uint64_t euler_phi() const;
    int mobius() const;
    unsigned omega() const noexcept { return static_cast<unsigned>(factors_.size()); }
    /// W(t) = 2^omega(t).
    std::uint64_t squarefree_divisor_count() const;

    std::vector<std::uint64_t> divisors() const;
    std::vector<std::uint64_t> squarefree_divisors() const;
    std::vector<std::uint64_t> prime_divisors() const;

private:
    std::uint64_t value_ = 1;
    std::vector<PrimePower> factors_;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Trial division by small primes, then Pollard-Brent rho on the cofactor.
/// Throws FactorizationTooLarge for t > 2^63, DomainError for t == 0.
Factorization factorize(std::uint64_t t);

std::uint64_t euler_phi(std::uint64_t t);
int mobius(std::uint64_t t);
std::uint64_t squarefree_divisor_count(std::uint64_t t);

/// t^(0.96 / ln ln t), the explicit upper bound on W(t - 1) for t >= 3.
long double lemma36_bound(long double t);

/// Exact binomial coefficient; throws DomainError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Integer power with overflow detection (DomainError).
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace charsum::nt
