#include "charsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "charsum/bounds.hpp"
#include "charsum/error.hpp"
#include "charsum/numtheory.hpp"
#include "charsum/reference.hpp"
#include "charsum/sums.hpp"
#include "charsum/text.hpp"

namespace charsum::verify {

using nlohmann::json;

namespace {

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    bool check(bool ok, const std::function<json()>& detail) {
        ++result_.checks;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.counterexample = detail();
        }
        return ok;
    }

    SuiteResult finish(std::string summary) {
        result_.summary = std::move(summary);
        return std::move(result_);
    }

private:
    SuiteResult result_;
};

json field_json(const Field& f) { return {{"p", f.p()}, {"k", f.k()}, {"r", f.r()}}; }

json family_json(const RestrictedFamily& fam) { return fam.sets; }

// All nontrivial characters when n is small, otherwise a fixed spread that
// still covers every prime order.
std::vector<MulChar> sample_characters(const Field& field, std::uint64_t limit) {
    const std::uint64_t n = field.order();
    std::set<std::uint64_t> idx;
    if (n - 1 <= limit) {
        for (std::uint64_t j = 1; j < n; ++j) idx.insert(j);
    } else {
        idx.insert(1);
        idx.insert(n - 1);
        for (std::uint64_t l : field.order_factorization().prime_divisors()) idx.insert(n / l);
        const std::uint64_t stride = n / limit;
        for (std::uint64_t j = 1; j < n && idx.size() < limit; j += stride) idx.insert(j);
    }
    std::vector<MulChar> out;
    for (std::uint64_t j : idx) out.emplace_back(n, j);
    return out;
}

// Deterministic assortment of polynomials, split and non-split.
std::vector<Poly> sample_polys(const Field& field, unsigned count) {
    std::vector<Poly> out;
    const Elt one = field.one();
    const Poly x = Poly::x(field);
    for (unsigned i = 0; out.size() < count; ++i) {
        const Elt a = field.exp(i + 1), b = field.exp(3 * i + 2);
        switch (i % 5) {
            case 0: out.push_back(Poly::from_roots(field, std::vector<Elt>{a, b})); break;
            case 1: out.push_back(add(field, pow(field, x, 1 + i % 3), Poly::constant(a))); break;
            case 2: out.push_back(Poly::from_roots(field, std::vector<Elt>{field.zero(), a, one})); break;
            case 3: out.push_back(mul(field, x, pow(field, Poly::from_roots(field, std::vector<Elt>{a}), 2))); break;
            default: out.push_back(add(field, Poly::from_roots(field, std::vector<Elt>{b, b, a}), Poly::constant(one))); break;
        }
    }
    return out;
}

// Split polynomials with a simple root and D <= 3.
std::vector<Poly> split_polys(const Field& field) {
    const Elt g = field.generator();
    const Elt zero = field.zero(), one = field.one();
    const Elt g5 = field.pow(g, 5);
    const std::vector<std::vector<Elt>> roots = {{zero}, {one}, {g}, {zero, one}, {zero, zero, one},
                                                 {g, g5, one}, {zero, one, g}, {g, g, g5}};
    std::vector<Poly> out;
    for (const auto& rs : roots) out.push_back(Poly::from_roots(field, rs));
    return out;
}

std::vector<RestrictedFamily> sample_families(const Field& field) {
    const std::uint32_t q = static_cast<std::uint32_t>(field.q()), r = field.r();
    std::vector<RestrictedFamily> out;
    out.push_back(whole_field_family(field));
    out.push_back(RestrictedFamily{std::vector<std::vector<std::uint32_t>>(r, {0})});
    std::vector<std::uint32_t> c0(r, 0), c1(r, 1 % q), calt(r);
    for (std::uint32_t i = 0; i < r; ++i) calt[i] = i % q;
    out.push_back(hyperplane_avoiding_family(field, c0));
    out.push_back(hyperplane_avoiding_family(field, c1));
    out.push_back(hyperplane_avoiding_family(field, calt));
    RestrictedFamily mixed;
    for (std::uint32_t i = 0; i < r; ++i) {
        std::vector<std::uint32_t> a{i % q};
        if (q > 2 || i % 2 == 0) a.push_back((i + 1) % q);
        mixed.sets.push_back(a);
    }
    out.push_back(mixed);
    return out;
}

// ---------------------------------------------------------------------------

SuiteResult suite_orthogonality() {
    Recorder rec("orthogonality");
    const std::vector<TowerParams> fields = {{2, 1, 2}, {2, 1, 4}, {2, 1, 6}, {2, 1, 8},  {2, 1, 10}, {2, 1, 12},
                                             {3, 1, 2}, {3, 1, 4}, {3, 1, 6}, {5, 1, 2},  {5, 1, 4},  {7, 1, 2},
                                             {2, 2, 4}, {3, 2, 2}, {11, 1, 2}, {13, 1, 2}};
    std::uint64_t chars = 0;
    for (const auto& params : fields) {
        const Field field(params);
        for (std::uint64_t j = 1; j < field.order(); ++j) {
            const MulChar chi(field.order(), j);
            SumAccumulator acc(chi.order());
            for (std::uint64_t v = 1; v < field.size(); ++v) acc.add(eval_exponent(field, chi, field.element(v)));
            const long double m = magnitude(acc);
            rec.check(m <= 1e-6L, [&] {
                return json{{"field", field_json(field)}, {"chi", j}, {"magnitude", static_cast<double>(m)}};
            });
            ++chars;
        }
    }
    return rec.finish(std::to_string(chars) + " nontrivial characters over " + std::to_string(fields.size()) +
                      " fields, every |sum| <= 1e-6");
}

SuiteResult suite_wan() {
    Recorder rec("wan");
    const std::vector<TowerParams> fields = {{3, 1, 2}, {2, 1, 4}, {3, 1, 4}, {5, 1, 2}, {2, 1, 6}, {2, 2, 2}};
    std::uint64_t applicable = 0, skipped = 0;
    for (const auto& params : fields) {
        const Field field(params);
        const auto chars = sample_characters(field, 24);
        const std::uint64_t span = std::min<std::uint64_t>(field.size(), 12);
        for (const Poly& f : split_polys(field)) {
            for (const MulChar& chi : chars) {
                for (std::uint64_t a = 0; a < span; ++a) {
                    for (std::uint64_t b = 0; b < span; ++b) {
                        const Elt w1 = field.element(a), w2 = field.element(b);
                        const auto s = shifted_pair_sum(field, w1, w2, chi, f);
                        if (!s.applicable) {
                            ++skipped;
                            continue;
                        }
                        ++applicable;
                        const long double m = s.weil.sum.magnitude;
                        rec.check(m <= s.bound + 1e-9L, [&] {
                            return json{{"field", field_json(field)}, {"chi", chi.index()},
                                        {"f", text::format_poly(f)}, {"w1", w1.v}, {"w2", w2.v},
                                        {"magnitude", static_cast<double>(m)}, {"bound", static_cast<double>(s.bound)}};
                        });
                    }
                }
            }
        }
    }
    rec.check(applicable > 0, [] { return json{{"reason", "no applicable instance"}}; });
    return rec.finish(std::to_string(applicable) + " applicable shifted pairs within (2rD-1)q^(1/2); " +
                      std::to_string(skipped) + " pairs outside the hypotheses");
}

SuiteResult suite_cor24() {
    Recorder rec("cor24");
    const std::vector<TowerParams> fields = {{2, 1, 8}, {2, 2, 4}, {3, 1, 4}};
    std::uint64_t applicable = 0, oracle = 0;
    for (const auto& params : fields) {
        const Field field(params);
        const auto half = field.subfield_elements(field.r() / 2);
        const auto h = split_vw(field, whole_field_family(field)).second;
        const auto chars = sample_characters(field, 300);
        for (const Poly& f : split_polys(field)) {
            const unsigned D = squarefree_degree(field, f);
            std::uint64_t bad = 0;
            for (Elt w1 : h) {
                for (Elt w2 : h) {
                    if (shares_conjugated_roots(field, f, w1, w2, field.r() / 2)) ++bad;
                }
            }
            rec.check(bad <= 2ull * D * D * h.size(), [&] {
                return json{{"field", field_json(field)}, {"f", text::format_poly(f)}, {"bad_pairs", bad},
                            {"limit", 2ull * D * D * h.size()}};
            });
            for (const MulChar& chi : chars) {
                for (Elt w1 : h) {
                    for (Elt w2 : h) {
                        const auto c = correlation_sum(field, half, w1, w2, chi, f);
                        if (!c.applicable) continue;
                        ++applicable;
                        rec.check(c.sum.magnitude <= c.bound + 1e-9L, [&] {
                            return json{{"field", field_json(field)}, {"chi", chi.index()},
                                        {"f", text::format_poly(f)}, {"w1", w1.v}, {"w2", w2.v},
                                        {"magnitude", static_cast<double>(c.sum.magnitude)},
                                        {"bound", static_cast<double>(c.bound)}};
                        });
                        if (w1 < w2) {
                            const auto back = correlation_sum(field, half, w2, w1, chi, f);
                            rec.check(std::fabs(back.sum.magnitude - c.sum.magnitude) <= 1e-9L, [&] {
                                return json{{"field", field_json(field)}, {"chi", chi.index()},
                                            {"f", text::format_poly(f)}, {"w1", w1.v}, {"w2", w2.v},
                                            {"asymmetry", static_cast<double>(back.sum.magnitude - c.sum.magnitude)}};
                            });
                        }
                    }
                }
            }
            // naive oracle on the first character
            const MulChar& chi = chars.front();
            for (std::size_t i = 0; i < h.size(); i += 3) {
                const Elt w1 = h[i], w2 = h[(i * 7 + 1) % h.size()];
                ++oracle;
                rec.check(correlation_sum(field, half, w1, w2, chi, f).sum.acc ==
                              reference::correlation_sum(field, w1, w2, chi, f),
                          [&] {
                              return json{{"field", field_json(field)}, {"chi", chi.index()},
                                          {"f", text::format_poly(f)}, {"w1", w1.v}, {"w2", w2.v},
                                          {"reason", "structured and naive correlation sums differ"}};
                          });
            }
        }
    }
    rec.check(applicable > 0, [] { return json{{"reason", "no applicable instance"}}; });
    return rec.finish(std::to_string(applicable) + " applicable correlation sums within (4D-1)q^(r/4), " +
                      std::to_string(oracle) + " naive-oracle comparisons, #B <= 2D^2 #W on every polynomial");
}

SuiteResult suite_vinogradov() {
    Recorder rec("vinogradov");
    const std::vector<TowerParams> fields = {{3, 1, 2}, {3, 1, 4}, {2, 1, 8}, {3, 1, 6}, {3, 1, 8}};
    std::uint64_t families = 0, positive = 0;
    for (const auto& params : fields) {
        const Field field(params);
        for (const auto& fam : sample_families(field)) {
            ++families;
            const std::uint64_t direct = primitive_count_direct(field, fam);
            const long double vin = primitive_count_vinogradov(field, fam);
            const std::uint64_t naive = reference::primitive_count(field, fam);
            auto detail = [&] {
                return json{{"field", field_json(field)}, {"family", family_json(fam)}, {"direct", direct},
                            {"vinogradov", static_cast<double>(vin)}, {"naive", naive}};
            };
            rec.check(std::fabs(static_cast<long double>(direct) - vin) <= 1e-6L, detail);
            rec.check(direct == naive, detail);
            if (field.q() >= 3 && is_hyperplane_avoiding(field, normalize(field, fam))) {
                const auto lb = bounds::lower_bound_thm35(field.q(), field.r(), bounds::WMode::Exact);
                if (lb.positive()) {
                    ++positive;
                    rec.check(static_cast<long double>(direct) >= lb.value(), detail);
                }
            }
        }
    }
    return rec.finish(std::to_string(families) + " families: direct = naive = Vinogradov within 1e-6; " +
                      std::to_string(positive) + " positive thm35 lower bounds respected");
}

SuiteResult suite_lemma41() {
    Recorder rec("lemma41");
    for (std::uint32_t n = 1; n <= 30; ++n) {
        for (std::uint32_t num = 5; num <= 50; num += 5) {
            const auto c = bounds::lemma41_check(n, num, 100);
            rec.check(c.holds, [&] {
                return json{{"n", n}, {"gamma", num / 100.0}, {"lhs", c.lhs}, {"rhs", static_cast<double>(c.rhs)}};
            });
        }
        for (std::uint32_t m = 0; m <= n; ++m) {
            const auto c = bounds::lemma41_single(n, m);
            rec.check(c.holds, [&] {
                return json{{"n", n}, {"m", m}, {"lhs", c.lhs}, {"rhs", static_cast<double>(c.rhs)}};
            });
        }
    }
    return rec.finish("partial binomial sums for n <= 30, gamma in {0.05, ..., 0.5}, and single coefficients");
}

SuiteResult suite_lemma36() {
    Recorder rec("lemma36");
    const auto bad = bounds::lemma36_counterexample(100000);
    rec.check(!bad, [&] { return json{{"t", *bad}}; });
    rec.check(nt::squarefree_divisor_count(80) == 4 && 4.0L < nt::lemma36_bound(81), [] {
        return json{{"t", 81}};
    });
    return rec.finish("W(t-1) < t^(0.96/log log t) for 3 <= t <= 100000");
}

SuiteResult suite_eq32() {
    Recorder rec("eq32");
    for (std::uint64_t q : {3, 4, 5}) {
        for (std::uint32_t r = 10; r <= 40; r += 2) {
            const long double e = bounds::bound_eq32(q, r), l = bounds::bound_lem34(q, r);
            const long double mid = bounds::bound_eq32_intermediate(q, r);
            const long double ql = static_cast<long double>(q);
            auto detail = [&] {
                return json{{"q", q}, {"r", r}, {"eq32", static_cast<double>(e)}, {"lem34", static_cast<double>(l)},
                            {"intermediate", static_cast<double>(mid)}};
            };
            rec.check(e < l, detail);
            rec.check(mid < e, detail);
            rec.check(2 * std::pow(ql, r / 4.0L) < std::pow(ql - 1, r / 2.0L), detail);
        }
    }
    return rec.finish("eq32 bound below lem34 for q in {3,4,5}, even r in [10,40]");
}

SuiteResult suite_decomposition() {
    Recorder rec("decomposition");
    std::uint64_t instances = 0;
    for (std::uint32_t r = 2; r <= 12; r += 2) {
        const Field field({2, 1, r});
        const std::vector<MulChar> chars = {MulChar(field.order(), 1), MulChar(field.order(), field.order() / 3)};
        for (const Poly& f : sample_polys(field, 20)) {
            for (const MulChar& chi : chars) {
                for (std::uint32_t s = 1; s < r; ++s) {
                    ++instances;
                    const auto parts = mi_decomposition(field, SparseSpec{s}, chi, f);
                    const SumAccumulator merged = merge_all(parts);
                    const SumResult direct = char_sum(field, SparseSpec{s}, chi, f);
                    const SumAccumulator naive = reference::char_sum(field, SparseSpec{s}, chi, f);
                    auto detail = [&] {
                        return json{{"r", r}, {"s", s}, {"chi", chi.index()}, {"f", text::format_poly(f)}};
                    };
                    rec.check(merged == direct.acc, detail);
                    rec.check(direct.acc == naive, detail);
                    rec.check(direct.term_count == nt::binomial(r, s), detail);
                }
            }
        }
    }
    return rec.finish(std::to_string(instances) +
                      " (r, s, chi, f) instances, q = 2, even r <= 12: merged M_i = direct = naive");
}

SuiteResult suite_audit_sweep() {
    Recorder rec("audit-sweep");
    std::uint64_t audits = 0, informational_exceeded = 0;
    std::map<std::string, std::uint64_t> per_check;
    auto record = [&](const Field& field, const BoundReport& rep, const json& what) {
        ++audits;
        for (const auto& c : rep.checks) {
            ++per_check[c.name];
            if (!c.hard) {
                if (c.violated) ++informational_exceeded;
                continue;
            }
            rec.check(!c.violated, [&] {
                json d = what;
                d["field"] = field_json(field);
                d["check"] = c.name;
                d["magnitude"] = static_cast<double>(rep.sum.magnitude);
                d["bound"] = static_cast<double>(c.value);
                return d;
            });
        }
    };

    {
        const Field field({3, 1, 4});
        const Poly x = Poly::x(field);
        const auto fam = hyperplane_avoiding_family(field, {0, 0, 0, 0});
        for (std::uint64_t j = 1; j < field.order(); ++j) {
            record(field, bound_audit(field, fam, MulChar(field.order(), j), x), {{"chi", j}, {"f", "0,1"}});
        }
        for (const auto& family : sample_families(field)) {
            for (const Poly& f : split_polys(field)) {
                for (const MulChar& chi : sample_characters(field, 20)) {
                    record(field, bound_audit(field, family, chi, f),
                           {{"chi", chi.index()}, {"f", text::format_poly(f)}, {"family", family_json(family)}});
                }
            }
        }
        bool threw = false;
        try {
            bound_audit(field, fam, MulChar(field.order(), 0), x);
        } catch (const Error& e) {
            threw = e.code() == Errc::PrereqUnmet;
        }
        rec.check(threw, [] { return json{{"reason", "trivial character accepted"}}; });
    }
    {
        const Field field({3, 1, 10});
        const Poly x = Poly::x(field);
        const auto fam = hyperplane_avoiding_family(field, std::vector<std::uint32_t>(10, 0));
        for (const MulChar& chi : sample_characters(field, 40)) {
            record(field, bound_audit(field, fam, chi, x), {{"chi", chi.index()}, {"f", "0,1"}});
        }
    }
    {
        const Field field({2, 1, 8});
        for (const Poly& f : split_polys(field)) {
            for (const MulChar& chi : sample_characters(field, 30)) {
                for (std::uint32_t s = 1; s < 8; ++s) {
                    record(field, bound_audit(field, SparseSpec{s}, chi, f),
                           {{"chi", chi.index()}, {"f", text::format_poly(f)}, {"s", s}});
                }
            }
        }
    }
    std::string summary = std::to_string(audits) + " audits, zero hard violations required;";
    for (const auto& [name, n] : per_check) summary += " " + name + "=" + std::to_string(n);
    summary += "; informational thm42 leading-term exceedances: " + std::to_string(informational_exceeded);
    return rec.finish(summary);
}

SuiteResult suite_oracle() {
    Recorder rec("oracle");
    const std::vector<TowerParams> fields = {{2, 1, 4}, {2, 1, 6}, {3, 1, 2}, {3, 1, 4}, {5, 1, 2}, {2, 2, 4}, {2, 1, 8}};
    std::uint64_t instances = 0;
    for (const auto& params : fields) {
        const Field field(params);
        const auto chars = sample_characters(field, 4);
        std::vector<MulChar> with_trivial = chars;
        with_trivial.emplace_back(field.order(), 0);
        for (const auto& fam : sample_families(field)) {
            for (const Poly& f : sample_polys(field, 2)) {
                for (const MulChar& chi : with_trivial) {
                    ++instances;
                    rec.check(char_sum(field, fam, chi, f).acc == reference::char_sum(field, fam, chi, f), [&] {
                        return json{{"field", field_json(field)}, {"family", family_json(fam)},
                                    {"chi", chi.index()}, {"f", text::format_poly(f)}};
                    });
                }
            }
        }
    }
    return rec.finish(std::to_string(instances) + " (set, chi, f) instances: structured = naive accumulators");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"orthogonality", "wan",           "cor24",       "vinogradov",
                                                   "lemma41",       "lemma36",       "eq32",        "decomposition",
                                                   "audit-sweep",   "oracle"};
    return names;
}

SuiteResult run_suite(std::string_view name) {
    if (name == "orthogonality") return suite_orthogonality();
    if (name == "wan") return suite_wan();
    if (name == "cor24") return suite_cor24();
    if (name == "vinogradov") return suite_vinogradov();
    if (name == "lemma41") return suite_lemma41();
    if (name == "lemma36") return suite_lemma36();
    if (name == "eq32") return suite_eq32();
    if (name == "decomposition") return suite_decomposition();
    if (name == "audit-sweep") return suite_audit_sweep();
    if (name == "oracle") return suite_oracle();
    throw Error(Errc::InvalidParams, "unknown suite '" + std::string(name) + "'");
}

}  // namespace charsum::verify
