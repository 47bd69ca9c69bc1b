#include <map>
#include <set>

#include "test_support.hpp"

using namespace charsum;
using testing::slow_pow;

namespace {

const std::vector<TowerParams> kFields = {{2, 1, 2}, {2, 1, 4}, {2, 1, 6}, {2, 1, 8}, {3, 1, 2},
                                           {3, 1, 4}, {5, 1, 2}, {7, 1, 2}, {2, 2, 2}, {2, 2, 4},
                                           {3, 2, 2}, {2, 3, 2}, {2, 1, 10}};

}  // namespace

TEST_CASE("sizes and orders") {
    Field f9({3, 1, 2});
    CHECK(f9.size() == 9);
    CHECK(f9.order() == 8);
    CHECK(f9.q() == 3);
    Field f16({2, 1, 4});
    CHECK(f16.size() == 16);
    CHECK(f16.order() == 15);
    Field f16b({2, 2, 2});
    CHECK(f16b.q() == 4);
    CHECK(f16b.size() == 16);
}

TEST_CASE("construction errors") {
    CHECK_ERRC(Field({4, 1, 2}), Errc::NonPrime);
    CHECK_ERRC(Field({1, 1, 2}), Errc::NonPrime);
    CHECK_ERRC(Field({2, 1, 3}), Errc::InvalidParams);
    CHECK_ERRC(Field({2, 1, 0}), Errc::InvalidParams);
    CHECK_ERRC(Field({2, 1, 28}), Errc::SizeCapExceeded);
    CHECK_ERRC(Field({3, 1, 18}), Errc::SizeCapExceeded);
}

TEST_CASE("generator of F_{3^4} has order exactly 80") {
    Field f({3, 1, 4});
    const Elt g = f.generator();
    CHECK(slow_pow(f, g, 40) != f.one());
    CHECK(slow_pow(f, g, 16) != f.one());
    CHECK(slow_pow(f, g, 80) == f.one());
}

TEST_CASE("generator order on every test field") {
    for (const auto& tp : kFields) {
        Field f(tp);
        INFO("p=" << tp.p << " k=" << tp.k << " r=" << tp.r);
        CHECK(f.pow(f.generator(), f.order()) == f.one());
        for (auto l : f.order_factorization().prime_divisors()) CHECK(f.pow(f.generator(), f.order() / l) != f.one());
        CHECK(f.is_primitive(f.generator()));
    }
}

TEST_CASE("field axioms, exhaustive on small fields") {
    for (const TowerParams tp : {TowerParams{3, 1, 2}, TowerParams{2, 1, 4}, TowerParams{2, 2, 2}, TowerParams{5, 1, 2}}) {
        Field f(tp);
        const auto els = testing::all_elements(f);
        for (auto a : els) {
            CHECK(f.add(a, f.zero()) == a);
            CHECK(f.mul(a, f.one()) == a);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            if (!a.is_zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
            for (auto b : els) {
                CHECK(f.sub(f.add(a, b), b) == a);
                CHECK(f.mul(a, b) == f.mul(b, a));
                if (!b.is_zero()) CHECK(f.mul(f.div(a, b), b) == a);
            }
        }
    }
}

TEST_CASE("distributivity and associativity on F_{2^6}") {
    Field f({2, 1, 6});
    for (std::uint32_t a = 0; a < 64; a += 3)
        for (std::uint32_t b = 0; b < 64; b += 5)
            for (std::uint32_t c = 0; c < 64; c += 7) {
                const Elt x{a}, y{b}, z{c};
                CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
            }
}

TEST_CASE("arithmetic errors") {
    Field f({3, 1, 2});
    CHECK_ERRC(f.div(f.one(), f.zero()), Errc::DivisionByZero);
    CHECK_ERRC(f.inv(f.zero()), Errc::DivisionByZero);
    CHECK_ERRC(f.log(f.zero()), Errc::LogOfZero);
    CHECK_ERRC(f.element(9), Errc::DomainError);
}

TEST_CASE("log and antilog") {
    Field f({3, 1, 4});
    CHECK(f.log(f.generator()) == 1);
    CHECK(f.log(f.one()) == 0);
    for (std::uint64_t v = 1; v < f.size(); ++v) {
        const Elt x = f.element(v);
        CHECK(f.exp(f.log(x)) == x);
    }
    for (std::uint64_t e = 0; e < 200; ++e) CHECK(f.pow(f.generator(), e) == slow_pow(f, f.generator(), e));
}

TEST_CASE("frobenius") {
    Field f({2, 1, 4});
    for (auto x : testing::all_elements(f)) {
        CHECK(f.frobenius(x, 4, 1) == x);
        CHECK(f.frobenius(x, 1, 1) == slow_pow(f, x, 2));
        CHECK(f.frobenius(x, 2, 1) == slow_pow(f, x, 4));
        CHECK(f.frobenius(f.frobenius(x, 1, 3), 1, -3) == x);
    }
    CHECK(f.frobenius(f.zero(), 2, 1) == f.zero());
    CHECK_ERRC(f.frobenius(f.one(), 3, 1), Errc::InvalidDivisor);
}

TEST_CASE("frobenius is additive and fixes F_q") {
    Field f({3, 1, 4});
    const auto els = testing::all_elements(f);
    for (auto a : els)
        for (std::size_t j = 0; j < els.size(); j += 7) CHECK(f.frobenius(f.add(a, els[j]), 1, 1) == f.add(f.frobenius(a, 1, 1), f.frobenius(els[j], 1, 1)));
    for (std::uint32_t c = 0; c < 3; ++c) CHECK(f.frobenius(f.base_element(c), 1, 1) == f.base_element(c));
}

TEST_CASE("subfield membership matches the closure of F_4 inside F_16") {
    Field f({2, 1, 4});
    const auto sub = testing::closure(f, {f.pow(f.generator(), 5)});
    CHECK(sub.size() == 4);
    for (auto x : testing::all_elements(f)) CHECK(f.in_subfield(x, 2) == (sub.count(x.v) == 1));
    const auto listed = f.subfield_elements(2);
    CHECK(listed.size() == 4);
    for (auto x : listed) CHECK(sub.count(x.v) == 1);
}

TEST_CASE("subfield sizes") {
    Field f({3, 1, 4});
    CHECK(f.in_subfield(f.zero(), 2));
    CHECK_FALSE(f.in_subfield(f.generator(), 2));
    int count = 0;
    for (auto x : testing::all_elements(f)) count += f.in_subfield(x, 2);
    CHECK(count == 9);
    CHECK(f.subfield_elements(1).size() == 3);
    CHECK(f.subfield_elements(4).size() == 81);
}

TEST_CASE("adapted basis") {
    for (const auto& tp : kFields) {
        Field f(tp);
        INFO("p=" << tp.p << " k=" << tp.k << " r=" << tp.r);
        const auto b = f.basis();
        REQUIRE(b.size() == f.r());
        CHECK(b[0] == f.one());
        for (std::uint32_t i = 0; i < f.r() / 2; ++i) CHECK(f.in_subfield(b[i], f.r() / 2));
        for (std::uint32_t i = 0; i < f.r(); ++i) {
            auto c = f.coords(b[i]);
            for (std::uint32_t j = 0; j < f.r(); ++j) CHECK(c[j] == (i == j ? 1u : 0u));
        }
    }
}

TEST_CASE("coordinate map is a bijection") {
    for (const TowerParams tp : {TowerParams{3, 1, 4}, TowerParams{2, 1, 6}, TowerParams{2, 2, 2}, TowerParams{3, 2, 2}}) {
        Field f(tp);
        INFO("p=" << tp.p << " k=" << tp.k << " r=" << tp.r);
        std::set<std::uint32_t> seen;
        for (auto x : testing::all_elements(f)) {
            const auto c = f.coords(x);
            CHECK(f.combine(c) == x);
            seen.insert(f.combine(c).v);
        }
        CHECK(seen.size() == f.size());
        CHECK(f.coords(f.zero()) == std::vector<std::uint32_t>(f.r(), 0));
    }
}

TEST_CASE("coordinates are F_q-linear") {
    for (const TowerParams tp : {TowerParams{3, 1, 4}, TowerParams{2, 2, 2}}) {
        Field f(tp);
        const auto els = testing::all_elements(f);
        for (std::size_t i = 0; i < els.size(); i += 3)
            for (std::size_t j = 0; j < els.size(); j += 5) {
                const auto cx = f.coords(els[i]), cy = f.coords(els[j]), cs = f.coords(f.add(els[i], els[j]));
                for (std::uint32_t l = 0; l < f.r(); ++l)
                    CHECK(cs[l] == f.base_index(f.add(f.base_element(cx[l]), f.base_element(cy[l]))));
            }
    }
}

TEST_CASE("base field indices") {
    Field f({2, 2, 2});
    std::set<std::uint32_t> seen;
    for (std::uint32_t c = 0; c < f.q(); ++c) {
        const Elt x = f.base_element(c);
        CHECK(f.in_subfield(x, 1));
        CHECK(f.base_index(x) == c);
        seen.insert(x.v);
    }
    CHECK(seen.size() == 4);
    CHECK(f.base_element(0) == f.zero());
    CHECK(f.base_element(1) == f.one());
    CHECK_ERRC(f.base_index(f.generator()), Errc::DomainError);
}

TEST_CASE("weight") {
    Field f({2, 1, 6});
    const auto b = f.basis();
    CHECK(f.weight(f.zero()) == 0);
    CHECK(f.weight(f.add(b[0], b[5])) == 2);
    std::map<std::uint32_t, int> hist;
    for (auto x : testing::all_elements(f)) hist[f.weight(x)]++;
    CHECK(hist[0] == 1);
    CHECK(hist[1] == 6);
    CHECK(hist[3] == 20);
    CHECK(hist[6] == 1);
}

TEST_CASE("construction is deterministic") {
    for (const auto& tp : kFields) {
        Field a(tp), b(tp);
        CHECK(std::vector<std::uint32_t>(a.modulus().begin(), a.modulus().end()) ==
              std::vector<std::uint32_t>(b.modulus().begin(), b.modulus().end()));
        CHECK(a.generator() == b.generator());
        CHECK(std::vector<Elt>(a.basis().begin(), a.basis().end()) == std::vector<Elt>(b.basis().begin(), b.basis().end()));
        for (std::uint64_t e = 0; e < a.order(); e += 17) CHECK(a.exp(e) == b.exp(e));
    }
}
