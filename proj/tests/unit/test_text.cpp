#include "test_support.hpp"

#include "charsum/text.hpp"

using namespace charsum;

TEST_CASE("uint lists") {
    CHECK(text::parse_uint_list("9,8,7") == std::vector<std::uint64_t>{9, 8, 7});
    CHECK(text::parse_uint_list("3") == std::vector<std::uint64_t>{3});
    CHECK_ERRC(text::parse_uint_list(""), Errc::ParseError);
    CHECK_ERRC(text::parse_uint_list("3,,4"), Errc::ParseError);
    CHECK_ERRC(text::parse_uint_list("3,x"), Errc::ParseError);
    CHECK_ERRC(text::parse_uint_list("-1"), Errc::ParseError);
}

TEST_CASE("families") {
    Field f({3, 1, 4});
    const auto fam = text::parse_family(f, "*;!0;2,1;0");
    CHECK(fam.sets == std::vector<std::vector<std::uint32_t>>{{0, 1, 2}, {1, 2}, {1, 2}, {0}});
    CHECK_ERRC(text::parse_family(f, "*;*;*"), Errc::ParseError);
    CHECK_ERRC(text::parse_family(f, "*;*;*;3"), Errc::ParseError);
    CHECK_ERRC(text::parse_family(f, "*;*;*;!5"), Errc::ParseError);
    CHECK_ERRC(text::parse_family(f, "*;*;*;a"), Errc::ParseError);
}

TEST_CASE("polynomials") {
    Field f({3, 1, 2});
    CHECK(text::parse_poly(f, "0,1") == Poly::x(f));
    CHECK(text::parse_poly(f, "4") == Poly::constant(f.element(4)));
    CHECK(text::parse_poly(f, "1,0,0") == Poly::constant(f.one()));
    CHECK_ERRC(text::parse_poly(f, "0,9"), Errc::ParseError);
    CHECK_ERRC(text::parse_poly(f, ""), Errc::ParseError);
    for (const char* s : {"0,1", "2,0,5", "8"}) CHECK(text::format_poly(text::parse_poly(f, s)) == s);
    CHECK(text::format_poly(Poly()) == "0");
}
