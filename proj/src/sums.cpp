#include "charsum/sums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "charsum/bounds.hpp"
#include "charsum/error.hpp"
#include "charsum/numtheory.hpp"
#include "charsum/parallel.hpp"

namespace charsum {

namespace {

void check_context(const Field& field, const MulChar& chi, const Poly& f) {
    if (chi.group_order() != field.order()) {
        throw Error(Errc::InconsistentContext, "character defined for group order " +
                                                   std::to_string(chi.group_order()) + ", field has n = " +
                                                   std::to_string(field.order()));
    }
    for (Elt c : f.coeffs()) {
        if (c.v >= field.size()) throw Error(Errc::InconsistentContext, "polynomial coefficient outside the field");
    }
}

std::optional<std::uint64_t> chi_f(const Field& field, const MulChar& chi, const Poly& f, Elt x) {
    return eval_exponent(field, chi, eval(field, f, x));
}

// chi(f(x1)) * conj(chi)(f(x2)) as an exponent of zeta_d.
std::optional<std::uint64_t> chi_f_pair(const Field& field, const MulChar& chi, const Poly& f, Elt x1, Elt x2) {
    const auto e1 = chi_f(field, chi, f, x1);
    if (!e1) return std::nullopt;
    const auto e2 = chi_f(field, chi, f, x2);
    if (!e2) return std::nullopt;
    return (*e1 + chi.order() - *e2) % chi.order();
}

std::optional<unsigned> squarefree_degree_or_none(const Field& field, const Poly& f) {
    if (f.degree() < 1) return std::nullopt;
    return squarefree_degree(field, f);
}

// Defining element of F_{q^r} over F_q: in no maximal proper subfield.
bool is_defining(const Field& field, Elt x) {
    for (std::uint64_t l : nt::factorize(field.r()).prime_divisors()) {
        if (field.in_subfield(x, field.r() / static_cast<std::uint32_t>(l))) return false;
    }
    return true;
}

}  // namespace

SumResult make_result(SumAccumulator acc) {
    SumResult out;
    out.magnitude = magnitude(acc);
    out.term_count = acc.terms();
    out.zero_hits = acc.zero_hits();
    out.acc = std::move(acc);
    return out;
}

SumResult char_sum(const Field& field, const RestrictedFamily& family, const MulChar& chi, const Poly& f) {
    check_context(field, chi, f);
    const auto [v_part, w_part] = split_vw(field, family);
    auto acc = par::reduce_range(w_part.size(), chi.order(), [&](std::uint64_t begin, std::uint64_t end,
                                                                  SumAccumulator& local) {
        for (std::uint64_t j = begin; j < end; ++j) {
            for (Elt v : v_part) local.add(chi_f(field, chi, f, field.add(v, w_part[j])));
        }
    });
    return make_result(std::move(acc));
}

SumResult char_sum(const Field& field, SparseSpec spec, const MulChar& chi, const Poly& f) {
    check_context(field, chi, f);
    const std::vector<Elt> set = SparseSet(field, spec).materialize();
    auto acc = par::reduce_range(set.size(), chi.order(),
                                 [&](std::uint64_t begin, std::uint64_t end, SumAccumulator& local) {
                                     for (std::uint64_t j = begin; j < end; ++j) local.add(chi_f(field, chi, f, set[j]));
                                 });
    return make_result(std::move(acc));
}

WeilSum basefield_weil_sum(const Field& field, const std::vector<CharPoly>& pairs) {
    if (pairs.empty()) throw Error(Errc::EmptyProduct, "need at least one (chi, f) pair");
    std::uint64_t L = 1;
    Poly product = Poly::constant(field.one());
    for (const auto& [chi, f] : pairs) {
        check_context(field, chi, f);
        L = std::lcm(L, chi.order());
        product = mul(field, product, f);
    }
    SumAccumulator acc(L);
    for (std::uint32_t c = 0; c < field.q(); ++c) {
        const Elt a = field.base_element(c);
        std::uint64_t t = 0;
        bool zero = false;
        for (const auto& [chi, f] : pairs) {
            const auto e = chi_f(field, chi, f, a);
            if (!e) {
                zero = true;
                break;
            }
            t = (t + *e * (L / chi.order())) % L;
        }
        if (zero) {
            acc.add_zero();
        } else {
            acc.add(t);
        }
    }
    WeilSum out{make_result(std::move(acc)), squarefree_degree_or_none(field, product), std::nullopt};
    if (out.D) out.bound = (static_cast<long double>(field.r()) * *out.D - 1) * std::sqrt(static_cast<long double>(field.q()));
    return out;
}

ShiftPairSum shifted_pair_sum(const Field& field, Elt w1, Elt w2, const MulChar& chi, const Poly& f) {
    ShiftPairSum out;
    out.weil = basefield_weil_sum(field, {{chi, shift(field, f, w1)}, {conjugate(chi), shift(field, f, w2)}});
    const auto D = squarefree_degree_or_none(field, f);
    if (!D) return out;
    out.D = *D;
    out.bound = (2.0L * field.r() * out.D - 1) * std::sqrt(static_cast<long double>(field.q()));
    const auto xi = has_simple_root(field, f);
    if (chi.is_trivial() || !xi) return out;
    try {
        if (shares_conjugated_roots(field, f, w1, w2, 1)) return out;
    } catch (const Error& e) {
        if (e.code() == Errc::NonSplittingPolynomial) return out;
        throw;
    }
    out.applicable = is_defining(field, field.sub(*xi, w1)) || is_defining(field, field.sub(*xi, w2));
    return out;
}

CorrelationSum correlation_sum(const Field& field, Elt w1, Elt w2, const MulChar& chi, const Poly& f) {
    return correlation_sum(field, field.subfield_elements(field.r() / 2), w1, w2, chi, f);
}

CorrelationSum correlation_sum(const Field& field, const std::vector<Elt>& half_field, Elt w1, Elt w2,
                               const MulChar& chi, const Poly& f) {
    check_context(field, chi, f);
    SumAccumulator acc(chi.order());
    for (Elt a : half_field) acc.add(chi_f_pair(field, chi, f, field.add(a, w1), field.add(a, w2)));

    CorrelationSum out;
    out.sum = make_result(std::move(acc));
    const auto D = squarefree_degree_or_none(field, f);
    if (!D) return out;
    out.D = *D;
    out.bound = (4.0L * out.D - 1) * std::pow(static_cast<long double>(field.q()), field.r() / 4.0L);
    const std::uint32_t half = field.r() / 2;
    try {
        out.bad_pair = shares_conjugated_roots(field, f, w1, w2, half);
    } catch (const Error& e) {
        if (e.code() != Errc::NonSplittingPolynomial) throw;
        return out;
    }
    const auto xi = has_simple_root(field, f);
    if (chi.is_trivial() || !xi || out.bad_pair) return out;
    out.applicable = !field.in_subfield(field.sub(*xi, w1), half) || !field.in_subfield(field.sub(*xi, w2), half);
    return out;
}

std::vector<SumResult> mi_decomposition(const Field& field, SparseSpec spec, const MulChar& chi, const Poly& f) {
    check_context(field, chi, f);
    SparseSet check(field, spec);  // validates s
    std::vector<SumResult> out;
    out.reserve(spec.s + 1);
    for (std::uint32_t i = 0; i <= spec.s; ++i) {
        const auto [u1, u2] = split_sparse(field, spec, i);
        auto acc = par::reduce_range(u2.size(), chi.order(),
                                     [&](std::uint64_t begin, std::uint64_t end, SumAccumulator& local) {
                                         for (std::uint64_t j = begin; j < end; ++j) {
                                             for (Elt a : u1) local.add(chi_f(field, chi, f, field.add(a, u2[j])));
                                         }
                                     });
        out.push_back(make_result(std::move(acc)));
    }
    return out;
}

SumAccumulator merge_all(const std::vector<SumResult>& parts) {
    if (parts.empty()) return SumAccumulator();
    SumAccumulator acc(parts.front().acc.root_order());
    for (const auto& part : parts) acc.merge(part.acc);
    return acc;
}

std::uint64_t primitive_count_direct(const Field& field, const RestrictedFamily& family) {
    const RestrictedSet set(field, family);
    const std::uint64_t total = set.size();
    const int workers = par::worker_count();
    const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, workers));
    std::uint64_t count = 0;
#pragma omp parallel for schedule(static) num_threads(workers) reduction(+ : count) if (parts > 1)
    for (std::int64_t id = 0; id < static_cast<std::int64_t>(parts); ++id) {
        const auto [begin, end] = par::block_range(total, parts, static_cast<std::uint64_t>(id));
        set.for_each(begin, end, [&](Elt x) {
            if (field.is_primitive(x)) ++count;
        });
    }
    return count;
}

long double primitive_count_vinogradov(const Field& field, const RestrictedFamily& family) {
    const Poly x = Poly::x(field);
    const auto& fact = field.order_factorization();
    long double total = 0;
    for (std::uint64_t e : fact.squarefree_divisors()) {
        const nt::Factorization fe = nt::factorize(e);
        long double inner = 0;
        for (const MulChar& chi : characters_of_order(field, e)) inner += value(char_sum(field, family, chi, x).acc).re;
        total += static_cast<long double>(fe.mobius()) / static_cast<long double>(fe.euler_phi()) * inner;
    }
    return static_cast<long double>(fact.euler_phi()) / static_cast<long double>(field.order()) * total;
}

bool BoundReport::any_violation() const {
    return std::any_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.hard && c.violated; });
}

namespace {

void add_check(BoundReport& report, std::string name, long double value, bool hard) {
    BoundCheck c{std::move(name), value, report.sum.magnitude / value, hard, false};
    const long double slack = 1e-9L * std::max<long double>(1, static_cast<long double>(report.sum.term_count));
    c.violated = report.sum.magnitude - value > slack;
    report.checks.push_back(std::move(c));
}

BoundReport audit_prologue(const Field& field, const MulChar& chi, const Poly& f) {
    check_context(field, chi, f);
    if (chi.is_trivial()) throw Error(Errc::PrereqUnmet, "bounds need a nontrivial character");
    if (f.degree() < 1) throw Error(Errc::PrereqUnmet, "bounds need a nonconstant polynomial");
    const auto xi = has_simple_root(field, f);
    if (!xi) throw Error(Errc::PrereqUnmet, "f has no simple root in F_{q^r}");
    BoundReport report;
    report.simple_root = *xi;
    report.D = squarefree_degree(field, f);
    return report;
}

}  // namespace

BoundReport bound_audit(const Field& field, const RestrictedFamily& family, const MulChar& chi, const Poly& f) {
    BoundReport report = audit_prologue(field, chi, f);
    const RestrictedFamily fam = normalize(field, family);
    report.sum = char_sum(field, fam, chi, f);

    const std::uint64_t q = field.q();
    const std::uint32_t r = field.r();
    long double upper = 1;
    for (std::uint32_t i = r / 2; i < r; ++i) upper *= static_cast<long double>(fam.sets[i].size());
    const long double ga = static_cast<long double>(family_size(fam));

    add_check(report, "trivial", ga, true);
    add_check(report, "thm31", bounds::bound_thm31(q, r, upper, ga, report.D), true);

    const bool all_pairs = std::all_of(fam.sets.begin(), fam.sets.end(), [](const auto& a) { return a.size() == 2; });
    if (q == 3 && all_pairs && static_cast<long double>(r) > bounds::cor32_r_threshold(report.D)) {
        add_check(report, "cor32", bounds::bound_cor32(report.D, r), true);
    }
    const bool f_is_x = f == Poly::x(field);
    if (f_is_x && q >= 3 && is_hyperplane_avoiding(field, fam)) {
        add_check(report, "lem34", bounds::bound_lem34(q, r), true);
        if (r >= 10) add_check(report, "eq32", bounds::bound_eq32(q, r), true);
    }
    return report;
}

BoundReport bound_audit(const Field& field, SparseSpec spec, const MulChar& chi, const Poly& f) {
    BoundReport report = audit_prologue(field, chi, f);
    report.sum = char_sum(field, spec, chi, f);
    add_check(report, "trivial", static_cast<long double>(report.sum.term_count), true);
    if (field.q() == 2) {
        const long double rho = spec.rho(field.r());
        add_check(report, "thm42_leading", std::exp2(bounds::eta_prime(rho).value * field.r()), false);
    }
    return report;
}

}  // namespace charsum
