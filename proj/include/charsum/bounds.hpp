#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace charsum::bounds {

/// Binary entropy, H(0) = H(1) = 0. DomainError outside [0, 1].
long double entropy(long double x);
/// H(x) for x <= 1/2, 1 above. DomainError for x < 0.
long double entropy_star(long double x);

struct FGH {
    long double f;
    long double g;
    long double h;

    long double max() const;
};

/// The three exponent functions of the sparse-set bound, for
/// 0 < lambda <= rho/2, rho <= 1/2.
FGH fgh(long double rho, long double lambda);

struct EtaPrime {
    long double value;
    long double lambda;
};

/// min over lambda in (0, rho/2] of max(f, g, h): a grid of step 1e-5 from
/// lambda = 1e-7, then ternary refinement around the best grid point.
EtaPrime eta_prime(long double rho);

/// The same min-max restricted to lambda in {step, 2 step, ...} <= rho/2.
/// Coarse steps reproduce published tabulations made on such grids.
EtaPrime eta_prime_on_grid(long double rho, long double step);

/// Reference values eta(0.13), eta(0.32) of the earlier sparse-set bound;
/// only these two constants are carried, as the strings they were published as.
struct EtaReference {
    std::string_view rho;
    std::string_view eta;
};
inline constexpr EtaReference kEtaReferences[] = {{"0.13", "0.62751"}, {"0.32", "0.82719"}};

struct CurveRow {
    long double rho;
    long double entropy;
    long double eta_prime;
};

/// Rows rho = step, 2 step, ..., floor(0.5 / step) * step.
std::vector<CurveRow> figure1_data(long double step);
/// header "rho,H,eta_prime", then "#eta_ref,<rho>,<eta>" annotation rows, then data.
void write_curve_csv(std::ostream& out, const std::vector<CurveRow>& rows);

/// (#G_A)^{1/2} q^{r/8} (prod_{i>r/2} #A_i (4D-1) + 2 D^2 q^{r/4})^{1/2}
long double bound_thm31(std::uint64_t q, std::uint32_t r, long double upper_product, long double ga_size,
                        unsigned D);

/// 3/4 + log 3 / (8 log 2)
long double delta();
/// Smallest even r admitted: r > 4 log(2 D^2) / log(4/3).
long double cor32_r_threshold(unsigned D);
/// 2 sqrt(D) 2^{delta r}; PreconditionROutOfRange when r is odd or too small.
long double bound_cor32(unsigned D, std::uint32_t r);

/// 2 (q-1)^{3r/4} q^{r/8}; q >= 3, even r >= 10.
long double bound_eq32(std::uint64_t q, std::uint32_t r);
/// (q-1)^{3r/4} q^{r/8} (3 + 2 q^{r/4} / (q-1)^{r/2})^{1/2}, the D = 1 instance
/// of bound_thm31 for hyperplane-avoiding families.
long double bound_eq32_intermediate(std::uint64_t q, std::uint32_t r);
/// sqrt(3) (q-1)^{r/2} q^{ceil(3r/4)/2}; q >= 3.
long double bound_lem34(std::uint64_t q, std::uint32_t r);

enum class WMode { Exact, Lemma36 };

/// Lower bound on the number of primitive elements in a hyperplane-avoiding
/// G_A:  phi(n)/n (q-1)^{3r/4} ((q-1)^{r/4} - 2 q^{r/8} W(n)),  n = q^r - 1.
/// Evaluated in the log domain. In Lemma36 mode W(n) is replaced by
/// (q^r)^{0.96 / log log q^r}; phi(n)/n is included only when n < 2^63.
struct Thm35Bound {
    int sign;                 // -1, 0, +1
    long double log_abs;      // natural log of |value|
    bool phi_included;
    long double w_used;       // exact W, or its bound (may be +inf if huge)
    long double log_w_used;

    bool positive() const { return sign > 0; }
    /// The value itself; +-inf when it does not fit a long double.
    long double value() const;
};
Thm35Bound lower_bound_thm35(std::uint64_t q, std::uint32_t r, WMode mode);

struct ThresholdResult {
    std::uint64_t q;
    std::uint64_t r_min;
    long double lhs_at_rmin;
    long double rhs;
    long double lhs_at_rmin_minus_2;
    /// log-domain margins: rhs - lhs at r_min, lhs - rhs at r_min - 2
    long double margin_at_rmin;
    long double margin_at_rmin_minus_2;
    long double rounding_bound;
    bool certified;
};

/// log of (2 q^{0.96 r / log log q^r})^{1/r}
long double threshold_lhs_log(std::uint64_t q, long double r);
/// log of ((q-1)^2 / q)^{1/8}
long double threshold_rhs_log(std::uint64_t q);
/// Smallest even r with lhs <= rhs; exponential bracket then binary search.
ThresholdResult threshold_min_even_r(std::uint64_t q);

/// sum_{0 <= m <= gamma n} C(n, m) <= 2^{n H(gamma)} with gamma = num/den.
struct BinomialCheck {
    std::uint64_t lhs;
    long double rhs;
    bool holds;
};
BinomialCheck lemma41_check(std::uint32_t n, std::uint32_t gamma_num, std::uint32_t gamma_den);
/// C(n, m) <= 2^{n H*(m/n)}
BinomialCheck lemma41_single(std::uint32_t n, std::uint32_t m);

/// First t in [3, t_max] with W(t-1) >= t^{0.96/log log t}, if any.
std::optional<std::uint64_t> lemma36_counterexample(std::uint64_t t_max);

}  // namespace charsum::bounds
