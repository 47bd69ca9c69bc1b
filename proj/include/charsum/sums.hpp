#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charsum/character.hpp"
#include "charsum/field.hpp"
#include "charsum/poly.hpp"
#include "charsum/subsets.hpp"

namespace charsum {

/// S(G, chi, f) with its exact accumulator.
struct SumResult {
    SumAccumulator acc;
    long double magnitude = 0;
    std::uint64_t term_count = 0;
    std::uint64_t zero_hits = 0;
};

SumResult make_result(SumAccumulator acc);

/// sum over G_A, evaluated as sum_w sum_v chi(f(v + w)) with G_A = V + W;
/// the W side is split across workers.
SumResult char_sum(const Field& field, const RestrictedFamily& family, const MulChar& chi, const Poly& f);
/// sum over G_s, streamed in enumeration order.
SumResult char_sum(const Field& field, SparseSpec spec, const MulChar& chi, const Poly& f);

struct CharPoly {
    MulChar chi;
    Poly f;
};

/// sum_{a in F_q} prod_i chi_i(f_i(a)) with Weil-type bound (r D - 1) q^{1/2},
/// D the squarefree degree of prod f_i. D and bound are absent when the
/// product is constant.
struct WeilSum {
    SumResult sum;
    std::optional<unsigned> D;
    std::optional<long double> bound;
};
WeilSum basefield_weil_sum(const Field& field, const std::vector<CharPoly>& pairs);

/// sum_{a in F_q} chi(f(a + w1)) conj(chi)(f(a + w2)) against (2 r D - 1) q^{1/2}.
/// applicable: chi nontrivial, f has a simple root xi, the shifts share no
/// conjugated roots over F_q and xi - w1 or xi - w2 is a defining element.
struct ShiftPairSum {
    WeilSum weil;
    unsigned D = 0;
    long double bound = 0;
    bool applicable = false;
};
ShiftPairSum shifted_pair_sum(const Field& field, Elt w1, Elt w2, const MulChar& chi, const Poly& f);

/// sum_{a in F_{q^{r/2}}} chi(f(a + w1)) conj(chi)(f(a + w2)) against (4D - 1) q^{r/4}.
/// applicable: chi nontrivial, f has a simple root xi, the shifts share no
/// conjugated roots over F_{q^{r/2}}, and xi - w1 or xi - w2 lies outside
/// F_{q^{r/2}}. Polynomials that do not split are never applicable.
struct CorrelationSum {
    SumResult sum;
    unsigned D = 0;
    long double bound = 0;
    bool applicable = false;
    bool bad_pair = false;  // shares conjugated roots over F_{q^{r/2}}
};
CorrelationSum correlation_sum(const Field& field, Elt w1, Elt w2, const MulChar& chi, const Poly& f);
/// Same, reusing a precomputed sorted list of F_{q^{r/2}}.
CorrelationSum correlation_sum(const Field& field, const std::vector<Elt>& half_field, Elt w1, Elt w2,
                               const MulChar& chi, const Poly& f);

/// M_0..M_s with M_i = sum_{u1 in U1^(i)} sum_{u2 in U2^(s-i)} chi(f(u1 + u2)).
std::vector<SumResult> mi_decomposition(const Field& field, SparseSpec spec, const MulChar& chi, const Poly& f);
SumAccumulator merge_all(const std::vector<SumResult>& parts);

/// #{gamma in G_A : gamma primitive}.
std::uint64_t primitive_count_direct(const Field& field, const RestrictedFamily& family);
/// phi(n)/n * sum_{e | n} mu(e)/phi(e) sum_{chi in Lambda_e} sum_{w in G_A} chi(w).
long double primitive_count_vinogradov(const Field& field, const RestrictedFamily& family);

struct BoundCheck {
    std::string name;
    long double value = 0;
    long double ratio = 0;
    bool hard = true;  // informational checks never count as violations
    bool violated = false;
};

struct BoundReport {
    SumResult sum;
    unsigned D = 0;
    Elt simple_root;
    std::vector<BoundCheck> checks;

    bool any_violation() const;
};

/// Exact sum plus every bound that applies. Throws PrereqUnmet for a trivial
/// character or when f has no simple root in F_{q^r}.
BoundReport bound_audit(const Field& field, const RestrictedFamily& family, const MulChar& chi, const Poly& f);
BoundReport bound_audit(const Field& field, SparseSpec spec, const MulChar& chi, const Poly& f);

}  // namespace charsum
