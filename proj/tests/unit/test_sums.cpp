#include <cmath>
#include <cstdlib>

#include "test_support.hpp"

#include "charsum/bounds.hpp"
#include "charsum/numtheory.hpp"
#include "charsum/reference.hpp"
#include "charsum/sums.hpp"

using namespace charsum;

namespace {

struct ThreadsEnv {
    explicit ThreadsEnv(const char* v) { setenv("CHARSUM_THREADS", v, 1); }
    ~ThreadsEnv() { unsetenv("CHARSUM_THREADS"); }
};

}  // namespace

TEST_CASE("whole-field sums") {
    Field f({3, 1, 4});
    const auto fam = whole_field_family(f);
    for (std::uint64_t j = 1; j < f.order(); j += 7) {
        const auto s = char_sum(f, fam, char_of_index(f, j), Poly::x(f));
        CHECK(s.magnitude <= 1e-6L);
        CHECK(s.term_count == 81);
        CHECK(s.zero_hits == 1);
    }
    const auto t = char_sum(f, fam, char_of_index(f, 0), Poly::x(f));
    CHECK(t.magnitude == doctest::Approx(80.0));
}

TEST_CASE("chi_1 on {1,2}^4 over F_{3^4} equals the naive oracle") {
    Field f({3, 1, 4});
    const RestrictedFamily fam{{{1, 2}, {1, 2}, {1, 2}, {1, 2}}};
    for (std::uint64_t j : {1, 2, 3, 8, 16, 40, 79}) {
        const MulChar chi = char_of_index(f, j);
        const auto s = char_sum(f, fam, chi, Poly::x(f));
        CHECK(s.acc == reference::char_sum(f, fam, chi, Poly::x(f)));
        CHECK(s.term_count == 16);
    }
}

TEST_CASE("structured sums equal the oracle on assorted instances") {
    for (const TowerParams tp : {TowerParams{2, 1, 6}, TowerParams{3, 1, 4}, TowerParams{2, 2, 2}, TowerParams{5, 1, 2}}) {
        Field f(tp);
        std::vector<std::uint32_t> c(f.r(), 0);
        const std::vector<RestrictedFamily> fams = {whole_field_family(f), hyperplane_avoiding_family(f, c)};
        const std::vector<Poly> polys = {Poly::x(f), Poly({f.generator(), f.one()}),
                                         Poly::from_roots(f, std::vector<Elt>{f.zero(), f.one(), f.one()}),
                                         Poly({f.one(), f.zero(), f.zero(), f.one()})};
        for (const auto& fam : fams)
            for (const auto& p : polys)
                for (std::uint64_t j = 0; j < f.order(); j += 1 + f.order() / 5) {
                    const MulChar chi = char_of_index(f, j);
                    CHECK(char_sum(f, fam, chi, p).acc == reference::char_sum(f, fam, chi, p));
                }
        for (std::uint32_t s = 1; s < f.r(); ++s) {
            const MulChar chi = char_of_index(f, 1);
            CHECK(char_sum(f, SparseSpec{s}, chi, polys[1]).acc == reference::char_sum(f, SparseSpec{s}, chi, polys[1]));
        }
    }
}

TEST_CASE("result does not depend on the worker count") {
    Field f({2, 1, 10});
    const MulChar chi = char_of_index(f, 11);
    const Poly p({f.generator(), f.element(5), f.one()});
    const auto fam = whole_field_family(f);
    SumAccumulator one, three, seven;
    {
        ThreadsEnv env("1");
        one = char_sum(f, fam, chi, p).acc;
    }
    {
        ThreadsEnv env("3");
        three = char_sum(f, fam, chi, p).acc;
        CHECK(char_sum(f, SparseSpec{4}, chi, p).acc == reference::char_sum(f, SparseSpec{4}, chi, p));
    }
    {
        ThreadsEnv env("7");
        seven = char_sum(f, fam, chi, p).acc;
    }
    CHECK(one == three);
    CHECK(one == seven);
}

TEST_CASE("context checks") {
    Field f({3, 1, 2}), g({2, 1, 4});
    CHECK_ERRC(char_sum(f, whole_field_family(f), char_of_index(g, 1), Poly::x(f)), Errc::InconsistentContext);
    CHECK_ERRC(char_sum(f, whole_field_family(f), char_of_index(f, 1), Poly::constant(Elt{200})), Errc::InconsistentContext);
}

TEST_CASE("base-field Weil sums") {
    Field f({3, 1, 2});
    const MulChar chi = char_of_index(f, 1);
    const auto w = basefield_weil_sum(f, {{chi, Poly::x(f)}});
    REQUIRE(w.bound.has_value());
    CHECK(*w.bound == doctest::Approx(std::sqrt(3.0)));
    CHECK(w.sum.magnitude <= *w.bound + 1e-9L);
    SumAccumulator direct(8);
    for (std::uint32_t c = 0; c < 3; ++c) direct.add(eval_exponent(f, chi, f.base_element(c)));
    CHECK(w.sum.acc == direct);

    const auto triv = basefield_weil_sum(f, {{char_of_index(f, 0), Poly::x(f)}});
    CHECK(triv.sum.magnitude == doctest::Approx(2.0));
    const auto cst = basefield_weil_sum(f, {{chi, Poly::constant(f.generator())}});
    CHECK_FALSE(cst.D.has_value());
    CHECK(cst.sum.magnitude == doctest::Approx(3.0));
    CHECK_ERRC(basefield_weil_sum(f, {}), Errc::EmptyProduct);
}

TEST_CASE("shifted pair sums respect (2rD - 1) sqrt(q)") {
    Field f({2, 1, 8});
    const Poly p = Poly::from_roots(f, std::vector<Elt>{f.element(3), f.element(200)});
    for (std::uint64_t j : {1, 5, 17, 85}) {
        const MulChar chi = char_of_index(f, j);
        for (std::uint32_t a = 0; a < 256; a += 23)
            for (std::uint32_t b = 1; b < 256; b += 31) {
                const auto s = shifted_pair_sum(f, Elt{a}, Elt{b}, chi, p);
                if (s.applicable) CHECK(s.weil.sum.magnitude <= s.bound + 1e-9L);
            }
    }
}

TEST_CASE("correlation sums") {
    Field f({2, 1, 8});
    const MulChar chi = char_of_index(f, 1);
    const Poly x = Poly::x(f);

    const Elt w = f.element(77);
    const auto diag = correlation_sum(f, w, w, chi, x);
    std::uint64_t nonzero = 0;
    for (auto a : f.subfield_elements(4)) nonzero += !f.add(a, w).is_zero();
    CHECK(diag.sum.acc.counts()[0] == nonzero);
    CHECK(diag.sum.acc.zero_hits() + nonzero == 16);

    const auto cs = correlation_sum(f, f.zero(), f.generator(), chi, x);
    CHECK(cs.applicable);
    CHECK(cs.bound == doctest::Approx(12.0));
    CHECK(cs.sum.magnitude <= 12.0L);
    CHECK(cs.sum.acc == reference::correlation_sum(f, f.zero(), f.generator(), chi, x));

    const auto back = correlation_sum(f, f.generator(), f.zero(), chi, x);
    CHECK(back.sum.magnitude == doctest::Approx(static_cast<double>(cs.sum.magnitude)));

    const auto cst = correlation_sum(f, f.zero(), f.generator(), chi, Poly::constant(f.one()));
    CHECK_FALSE(cst.applicable);
    CHECK(cst.sum.magnitude == doctest::Approx(16.0));
}

TEST_CASE("M_i decomposition") {
    Field f({2, 1, 4});
    const auto m = mi_decomposition(f, SparseSpec{1}, char_of_index(f, 1), Poly::x(f));
    REQUIRE(m.size() == 2);
    CHECK(m[0].term_count == 2);
    CHECK(m[1].term_count == 2);

    Field g({2, 1, 8});
    const auto parts = mi_decomposition(g, SparseSpec{3}, char_of_index(g, 3), Poly::x(g));
    std::uint64_t terms = 0;
    for (const auto& part : parts) terms += part.term_count;
    CHECK(terms == nt::binomial(8, 3));

    Field h({2, 1, 10});
    const Poly p = Poly::from_roots(h, std::vector<Elt>{h.zero(), h.one()});
    const MulChar chi = char_of_index(h, 33);
    const auto merged = merge_all(mi_decomposition(h, SparseSpec{4}, chi, p));
    CHECK(merged == char_sum(h, SparseSpec{4}, chi, p).acc);
    CHECK(merged == reference::char_sum(h, SparseSpec{4}, chi, p));
}

TEST_CASE("primitive counts") {
    Field f({3, 1, 2});
    CHECK(primitive_count_direct(f, whole_field_family(f)) == nt::euler_phi(8));
    CHECK(primitive_count_direct(f, RestrictedFamily{{{0}, {0}}}) == 0);
    const RestrictedFamily fam{{{1, 2}, {1, 2}}};
    std::uint64_t oracle = 0;
    for (auto x : RestrictedSet(f, fam).materialize()) oracle += reference::is_primitive_by_order(f, x);
    CHECK(primitive_count_direct(f, fam) == oracle);
    CHECK(std::fabs(static_cast<double>(primitive_count_vinogradov(f, fam)) - oracle) <= 1e-6);

    Field g({3, 1, 4});
    CHECK(std::fabs(static_cast<double>(primitive_count_vinogradov(g, whole_field_family(g))) - 32) <= 1e-6);
    CHECK(std::fabs(static_cast<double>(primitive_count_vinogradov(g, RestrictedFamily{{{0}, {0}, {0}, {0}}}))) <= 1e-6);
    const auto avoid = hyperplane_avoiding_family(g, {0, 0, 0, 0});
    const auto direct = primitive_count_direct(g, avoid);
    CHECK(direct == reference::primitive_count(g, avoid));
    CHECK(std::fabs(static_cast<double>(primitive_count_vinogradov(g, avoid)) - direct) <= 1e-6);
    const auto lb = bounds::lower_bound_thm35(3, 4, bounds::WMode::Exact);
    CHECK_FALSE(lb.positive());
}

TEST_CASE("bound audit on F_{3^4}") {
    Field f({3, 1, 4});
    const auto fam = hyperplane_avoiding_family(f, {0, 0, 0, 0});
    int violations = 0;
    for (std::uint64_t j = 1; j < f.order(); ++j) {
        const auto rep = bound_audit(f, fam, char_of_index(f, j), Poly::x(f));
        violations += rep.any_violation();
        for (const auto& c : rep.checks)
            if (c.hard) CHECK(c.ratio <= 1.0L + 1e-12L);
        CHECK(rep.D == 1);
    }
    CHECK(violations == 0);
    CHECK_ERRC(bound_audit(f, fam, char_of_index(f, 0), Poly::x(f)), Errc::PrereqUnmet);
    CHECK_ERRC(bound_audit(f, fam, char_of_index(f, 1), Poly::constant(f.one())), Errc::PrereqUnmet);
    Field g({2, 1, 4});
    CHECK_ERRC(bound_audit(g, whole_field_family(g), char_of_index(g, 1), Poly({g.zero(), g.zero(), g.one()})),
               Errc::PrereqUnmet);
}

TEST_CASE("sparse audit carries the leading-term check for q = 2") {
    Field f({2, 1, 8});
    const auto rep = bound_audit(f, SparseSpec{3}, char_of_index(f, 1), Poly::x(f));
    bool informational = false;
    for (const auto& c : rep.checks) informational = informational || !c.hard;
    CHECK(informational);
    CHECK_FALSE(rep.any_violation());
}
