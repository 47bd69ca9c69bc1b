#include "charsum/bounds.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include "charsum/error.hpp"
#include "charsum/numtheory.hpp"

namespace charsum::bounds {

static_assert(LDBL_MANT_DIG >= 64, "threshold certification needs 80-bit long double");

namespace {

constexpr long double kLambdaFloor = 1e-7L;
constexpr long double kLambdaStep = 1e-5L;

void require(bool ok, const char* what) {
    if (!ok) throw Error(Errc::DomainError, what);
}

// max(f, g, h) without the domain checks, for the optimizer's inner loop.
long double objective(long double rho, long double h_rho, long double lambda) {
    const long double tail = entropy_star(2 * rho - 2 * lambda);
    const long double f = 0.5L * entropy_star(2 * lambda) + 0.5L * tail;
    const long double g = 0.125L + 0.5L * h_rho + 0.25L * tail;
    const long double h = 0.5L * h_rho + 0.25L;
    return std::max({f, g, h});
}

void check_rho(long double rho) { require(rho > 0 && rho <= 0.5L, "rho must lie in (0, 1/2]"); }

std::uint64_t require_prime_power(std::uint64_t q) {
    require(q >= 2, "q must be a prime power >= 2");
    require(nt::factorize(q).factors().size() == 1, "q must be a prime power");
    return q;
}

}  // namespace

long double entropy(long double x) {
    require(x >= 0 && x <= 1, "entropy argument must lie in [0, 1]");
    if (x == 0 || x == 1) return 0;
    return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
}

long double entropy_star(long double x) {
    require(x >= 0, "entropy_star argument must be nonnegative");
    return x > 0.5L ? 1.0L : entropy(x);
}

long double FGH::max() const { return std::max({f, g, h}); }

FGH fgh(long double rho, long double lambda) {
    check_rho(rho);
    require(lambda > 0 && lambda <= rho / 2 * (1 + 1e-15L), "lambda must lie in (0, rho/2]");
    lambda = std::min(lambda, rho / 2);
    const long double h_rho = entropy(rho);
    const long double tail = entropy_star(2 * rho - 2 * lambda);
    return {0.5L * entropy_star(2 * lambda) + 0.5L * tail, 0.125L + 0.5L * h_rho + 0.25L * tail,
            0.5L * h_rho + 0.25L};
}

EtaPrime eta_prime(long double rho) {
    check_rho(rho);
    const long double h_rho = entropy(rho);
    const long double hi = rho / 2;
    const long double lo = std::min(kLambdaFloor, hi);

    EtaPrime best{objective(rho, h_rho, hi), hi};
    const auto steps = static_cast<std::uint64_t>((hi - lo) / kLambdaStep);
    std::uint64_t best_i = steps + 1;  // the endpoint hi
    for (std::uint64_t i = 0; i <= steps; ++i) {
        const long double lambda = lo + static_cast<long double>(i) * kLambdaStep;
        const long double v = objective(rho, h_rho, lambda);
        if (v < best.value) {
            best = {v, lambda};
            best_i = i;
        }
    }

    // Golden-section refinement inside the neighbouring grid cells; the
    // objective is quasi-convex in lambda (f increasing, g non-increasing).
    long double a = best_i == 0 ? lo : std::max(lo, best.lambda - kLambdaStep);
    long double b = std::min(hi, best.lambda + kLambdaStep);
    const long double inv_phi = (std::sqrt(5.0L) - 1) / 2;
    long double c = b - inv_phi * (b - a);
    long double d = a + inv_phi * (b - a);
    long double fc = objective(rho, h_rho, c);
    long double fd = objective(rho, h_rho, d);
    for (int it = 0; it < 200 && b - a > 1e-16L; ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(rho, h_rho, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(rho, h_rho, d);
        }
    }
    for (long double lambda : {a, b, c, d}) {
        const long double v = objective(rho, h_rho, lambda);
        if (v < best.value) best = {v, lambda};
    }
    return best;
}

EtaPrime eta_prime_on_grid(long double rho, long double step) {
    check_rho(rho);
    require(step > 0 && step <= rho / 2 * (1 + 1e-12L), "grid step must lie in (0, rho/2]");
    const long double h_rho = entropy(rho);
    EtaPrime best{std::numeric_limits<long double>::infinity(), 0};
    for (std::uint64_t i = 1;; ++i) {
        long double lambda = static_cast<long double>(i) * step;
        if (lambda > rho / 2 * (1 + 1e-12L)) break;
        lambda = std::min(lambda, rho / 2);
        const long double v = objective(rho, h_rho, lambda);
        if (v < best.value) best = {v, lambda};
    }
    return best;
}

std::vector<CurveRow> figure1_data(long double step) {
    require(step > 0 && step <= 0.01L * (1 + 1e-9L), "curve step must lie in (0, 0.01]");
    const auto count = static_cast<std::uint64_t>(std::floor(0.5L / step + 1e-9L));
    std::vector<CurveRow> rows;
    rows.reserve(count);
    for (std::uint64_t i = 1; i <= count; ++i) {
        long double rho = static_cast<long double>(i) * step;
        if (std::fabs(rho - 0.5L) < 1e-12L) rho = 0.5L;
        rho = std::min(rho, 0.5L);
        rows.push_back({rho, entropy(rho), eta_prime(rho).value});
    }
    return rows;
}

void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
    out << "rho,H,eta_prime\n";
    for (const auto& ref : kEtaReferences) out << "#eta_ref," << ref.rho << ',' << ref.eta << '\n';
    char line[128];
    for (const auto& row : rows) {
        std::snprintf(line, sizeof line, "%.10Lf,%.10Lf,%.10Lf\n", row.rho, row.entropy, row.eta_prime);
        out << line;
    }
}

long double bound_thm31(std::uint64_t q, std::uint32_t r, long double upper_product, long double ga_size,
                        unsigned D) {
    require(r >= 2 && r % 2 == 0, "r must be even");
    require(q >= 2 && upper_product >= 1 && ga_size >= 1 && D >= 1, "counts must be positive");
    const long double ql = static_cast<long double>(q);
    const long double Dl = D;
    const long double inner = upper_product * (4 * Dl - 1) + 2 * Dl * Dl * std::pow(ql, r / 4.0L);
    return std::sqrt(ga_size) * std::pow(ql, r / 8.0L) * std::sqrt(inner);
}

long double delta() { return 0.75L + std::log(3.0L) / (8 * std::log(2.0L)); }

long double cor32_r_threshold(unsigned D) {
    require(D >= 1, "D must be positive");
    const long double Dl = D;
    return 4 * std::log(2 * Dl * Dl) / std::log(4.0L / 3.0L);
}

long double bound_cor32(unsigned D, std::uint32_t r) {
    if (r % 2 != 0 || !(static_cast<long double>(r) > cor32_r_threshold(D))) {
        throw Error(Errc::PreconditionROutOfRange,
                    "need even r > 4 log(2D^2)/log(4/3) = " + std::to_string(static_cast<double>(cor32_r_threshold(D))));
    }
    return 2 * std::sqrt(static_cast<long double>(D)) * std::exp2(delta() * r);
}

long double bound_eq32(std::uint64_t q, std::uint32_t r) {
    require(q >= 3, "bound (3.2) needs q >= 3");
    require(r >= 10 && r % 2 == 0, "bound (3.2) needs even r >= 10");
    const long double ql = static_cast<long double>(q);
    return 2 * std::pow(ql - 1, 0.75L * r) * std::pow(ql, r / 8.0L);
}

long double bound_eq32_intermediate(std::uint64_t q, std::uint32_t r) {
    require(q >= 3, "needs q >= 3");
    require(r >= 2 && r % 2 == 0, "r must be even");
    const long double ql = static_cast<long double>(q);
    return std::pow(ql - 1, 0.75L * r) * std::pow(ql, r / 8.0L) *
           std::sqrt(3 + 2 * std::pow(ql, r / 4.0L) / std::pow(ql - 1, r / 2.0L));
}

long double bound_lem34(std::uint64_t q, std::uint32_t r) {
    require(q >= 3, "needs q >= 3");
    require(r >= 1, "r must be positive");
    const long double ql = static_cast<long double>(q);
    const std::uint32_t ceil34 = (3 * r + 3) / 4;
    return std::sqrt(3.0L) * std::pow(ql - 1, r / 2.0L) * std::pow(ql, ceil34 / 2.0L);
}

long double Thm35Bound::value() const {
    if (sign == 0) return 0;
    return sign * std::exp(log_abs);
}

Thm35Bound lower_bound_thm35(std::uint64_t q, std::uint32_t r, WMode mode) {
    require_prime_power(q);
    require(r >= 2 && r % 2 == 0, "r must be even");
    const long double ln_q = std::log(static_cast<long double>(q));
    const long double ln_q1 = std::log(static_cast<long double>(q - 1));

    // n = q^r - 1 when it fits the factorizer
    std::optional<nt::Factorization> fact;
    try {
        const std::uint64_t qr = nt::checked_pow(q, r);
        if (qr - 1 <= (std::uint64_t{1} << 63)) fact = nt::factorize(qr - 1);
    } catch (const Error&) {
        // q^r overflows 64 bits
    }

    Thm35Bound out{};
    if (mode == WMode::Exact) {
        if (!fact) throw Error(Errc::FactorizationTooLarge, "q^r - 1 exceeds 2^63");
        out.w_used = static_cast<long double>(fact->squarefree_divisor_count());
        out.log_w_used = std::log(out.w_used);
    } else {
        const long double log_t = r * ln_q;
        out.log_w_used = 0.96L * log_t / std::log(log_t);
        out.w_used = std::exp(out.log_w_used);
    }

    const long double a = r / 4.0L * ln_q1;
    const long double b = std::log(2.0L) + r / 8.0L * ln_q + out.log_w_used;
    out.sign = a > b ? 1 : (a < b ? -1 : 0);
    const long double gap = std::fabs(a - b);
    const long double log_bracket = std::max(a, b) + std::log1p(-std::exp(-gap));

    long double log_phi_ratio = 0;
    if (fact) {
        log_phi_ratio = std::log(static_cast<long double>(fact->euler_phi())) -
                        std::log(static_cast<long double>(fact->value()));
        out.phi_included = true;
    }
    out.log_abs = 0.75L * r * ln_q1 + log_phi_ratio + log_bracket;
    return out;
}

long double threshold_lhs_log(std::uint64_t q, long double r) {
    const long double ln_q = std::log(static_cast<long double>(q));
    const long double log_t = r * ln_q;
    return (std::log(2.0L) + 0.96L * log_t / std::log(log_t)) / r;
}

long double threshold_rhs_log(std::uint64_t q) {
    const long double ql = static_cast<long double>(q);
    return std::log((ql - 1) * (ql - 1) / ql) / 8;
}

ThresholdResult threshold_min_even_r(std::uint64_t q) {
    require_prime_power(q);
    require(q >= 3, "threshold needs q >= 3");
    const long double rhs = threshold_rhs_log(q);
    auto holds = [&](std::uint64_t half) { return threshold_lhs_log(q, 2.0L * half) <= rhs; };

    std::uint64_t lo = 0, hi = 1;  // in units of r/2; holds(lo) false (or lo = 0)
    while (!holds(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (holds(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    ThresholdResult out{};
    out.q = q;
    out.r_min = 2 * hi;
    const long double lhs_min = threshold_lhs_log(q, static_cast<long double>(out.r_min));
    out.lhs_at_rmin = std::exp(lhs_min);
    out.rhs = std::exp(rhs);
    out.margin_at_rmin = rhs - lhs_min;
    out.rounding_bound = 16 * LDBL_EPSILON * (std::fabs(lhs_min) + std::fabs(rhs));
    if (out.r_min > 2) {
        const long double lhs_prev = threshold_lhs_log(q, static_cast<long double>(out.r_min - 2));
        out.lhs_at_rmin_minus_2 = std::exp(lhs_prev);
        out.margin_at_rmin_minus_2 = lhs_prev - rhs;
    } else {
        out.lhs_at_rmin_minus_2 = std::numeric_limits<long double>::infinity();
        out.margin_at_rmin_minus_2 = std::numeric_limits<long double>::infinity();
    }
    out.certified = out.margin_at_rmin > 10 * out.rounding_bound &&
                    out.margin_at_rmin_minus_2 > 10 * out.rounding_bound;
    return out;
}

BinomialCheck lemma41_check(std::uint32_t n, std::uint32_t gamma_num, std::uint32_t gamma_den) {
    require(n >= 1 && n <= 60, "n must lie in [1, 60]");
    require(gamma_den > 0 && gamma_num > 0 && 2 * gamma_num <= gamma_den, "gamma must lie in (0, 1/2]");
    std::uint64_t lhs = 0;
    for (std::uint64_t m = 0; m * gamma_den <= std::uint64_t{gamma_num} * n; ++m) lhs += nt::binomial(n, m);
    const long double gamma = static_cast<long double>(gamma_num) / gamma_den;
    const long double rhs = std::exp2(n * entropy(gamma));
    return {lhs, rhs, static_cast<long double>(lhs) <= rhs};
}

BinomialCheck lemma41_single(std::uint32_t n, std::uint32_t m) {
    require(n >= 1 && n <= 60 && m <= n, "need 0 <= m <= n <= 60");
    const std::uint64_t lhs = nt::binomial(n, m);
    const long double rhs = std::exp2(n * entropy_star(static_cast<long double>(m) / n));
    return {lhs, rhs, static_cast<long double>(lhs) <= rhs};
}

std::optional<std::uint64_t> lemma36_counterexample(std::uint64_t t_max) {
    if (t_max < 3) return std::nullopt;
    // omega via a smallest-prime-factor sieve up to t_max - 1
    const std::uint64_t limit = t_max;
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j <= limit; j += i) {
            if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    for (std::uint64_t t = 3; t <= t_max; ++t) {
        std::uint64_t x = t - 1;
        unsigned omega = 0;
        while (x > 1) {
            const std::uint32_t p = spf[x];
            ++omega;
            while (x % p == 0) x /= p;
        }
        const long double w = std::ldexp(1.0L, static_cast<int>(omega));
        if (!(w < nt::lemma36_bound(static_cast<long double>(t)))) return t;
    }
    return std::nullopt;
}

}  // namespace charsum::bounds
