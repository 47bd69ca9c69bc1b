#include <sstream>

#include "test_support.hpp"

#include "commands.hpp"

#include "charsum/reference.hpp"
#include "charsum/text.hpp"
#include "json.hpp"

using namespace charsum;
using nlohmann::json;

namespace {

struct Run {
    int code;
    json doc;
    std::string out;
    std::string err;
};

template <class Fn>
Run run(Fn&& fn) {
    std::ostringstream out, err;
    const int code = fn(out, err);
    Run r{code, nullptr, out.str(), err.str()};
    if (!r.out.empty() && r.out[0] == '{') r.doc = json::parse(r.out);
    return r;
}

cli::CharsumOpts charsum_opts(std::uint32_t p, std::uint32_t r, std::uint64_t chi, std::string f, std::string set) {
    cli::CharsumOpts o;
    o.field = {p, 1, r};
    o.chi = chi;
    o.f = std::move(f);
    o.set = std::move(set);
    return o;
}

}  // namespace

TEST_CASE("field-info") {
    const auto r = run([](auto& o, auto& e) { return cli::cmd_field_info({3, 1, 2}, {"charsum", "field-info"}, o, e); });
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["field"]["n"] == 8);
    CHECK(r.doc["field"]["q"] == 3);
    CHECK(r.doc["manifest"]["tool"] == "charsum");
    const auto bad = run([](auto& o, auto& e) { return cli::cmd_field_info({4, 1, 2}, {}, o, e); });
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("NonPrime") != std::string::npos);
}

TEST_CASE("field-info is reproducible apart from the timestamp") {
    auto once = [] {
        auto r = run([](auto& o, auto& e) { return cli::cmd_field_info({2, 1, 8}, {"x"}, o, e); });
        r.doc["manifest"].erase("timestamp");
        return r.doc;
    };
    CHECK(once() == once());
}

TEST_CASE("charsum magnitude equals the naive oracle") {
    const auto o = charsum_opts(3, 4, 1, "0,1", "1,2;1,2;1,2;1,2");
    const auto r = run([&](auto& out, auto& err) { return cli::cmd_charsum(o, {}, out, err); });
    REQUIRE(r.code == cli::kOk);
    Field f({3, 1, 4});
    const auto acc = reference::char_sum(f, text::parse_family(f, o.set.value()), char_of_index(f, 1), Poly::x(f));
    CHECK(r.doc["sum"]["magnitude"].get<double>() == doctest::Approx(static_cast<double>(magnitude(acc))));
    CHECK(r.doc["sum"]["counts"].get<std::vector<std::uint64_t>>() == acc.counts());
}

TEST_CASE("charsum audit") {
    auto o = charsum_opts(3, 4, 1, "0,1", "!0;!0;!0;!0");
    o.audit = true;
    const auto r = run([&](auto& out, auto& err) { return cli::cmd_charsum(o, {}, out, err); });
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["audit"]["violation"] == false);
    for (const auto& c : r.doc["audit"]["checks"])
        if (c["hard"].get<bool>()) CHECK(c["ratio"].get<double>() <= 1.0);

    auto triv = o;
    triv.chi = 0;
    CHECK(run([&](auto& out, auto& err) { return cli::cmd_charsum(triv, {}, out, err); }).code == cli::kPrereq);
    auto badset = o;
    badset.set = "*;*";
    CHECK(run([&](auto& out, auto& err) { return cli::cmd_charsum(badset, {}, out, err); }).code == cli::kUsage);
}

TEST_CASE("sparse charsum") {
    cli::CharsumOpts o;
    o.field = {2, 1, 8};
    o.chi = 3;
    o.f = "0,1";
    o.sparse = 3;
    const auto r = run([&](auto& out, auto& err) { return cli::cmd_charsum(o, {}, out, err); });
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["sum"]["term_count"] == 56);
}

TEST_CASE("thresholds") {
    cli::ThresholdOpts o;
    o.q_list = "8,4";
    const auto r = run([&](auto& out, auto& err) { return cli::cmd_thresholds(o, {}, out, err); });
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["thresholds"][0]["r_min"] == 3256);
    CHECK(r.doc["thresholds"][1]["r_min"] == 363184);
    o.csv = true;
    const auto c = run([&](auto& out, auto& err) { return cli::cmd_thresholds(o, {}, out, err); });
    CHECK(c.out.rfind("q,r_min,", 0) == 0);
    CHECK(c.out.find("\n8,3256,") != std::string::npos);
    o.q_list = "6";
    CHECK(run([&](auto& out, auto& err) { return cli::cmd_thresholds(o, {}, out, err); }).code == cli::kUsage);
}

TEST_CASE("eta reflection") {
    auto eta = [](double rho) {
        cli::EtaOpts o;
        o.rho = rho;
        return run([&](auto& out, auto& err) { return cli::cmd_eta(o, {}, out, err); });
    };
    const auto a = eta(0.13), b = eta(0.87);
    CHECK(a.code == cli::kOk);
    CHECK(b.doc["rho"].get<double>() == doctest::Approx(0.13));
    CHECK(a.doc["eta_prime"].get<double>() == doctest::Approx(b.doc["eta_prime"].get<double>()).epsilon(1e-9));
    CHECK(eta(0).code == cli::kUsage);
    CHECK(eta(1.5).code == cli::kUsage);
}

TEST_CASE("eta curve") {
    cli::EtaOpts o;
    o.curve = true;
    o.step = 0.01;
    const auto r = run([&](auto& out, auto& err) { return cli::cmd_eta(o, {}, out, err); });
    CHECK(r.code == cli::kOk);
    std::istringstream in(r.out);
    std::string line;
    int data = 0, refs = 0;
    while (std::getline(in, line)) {
        if (line.rfind("#eta_ref", 0) == 0) ++refs;
        else if (line != "rho,H,eta_prime") ++data;
    }
    CHECK(data == 50);
    CHECK(refs == 2);
}

TEST_CASE("verify") {
    const auto r = run([](auto& out, auto& err) { return cli::cmd_verify("lemma41", {}, out, err); });
    CHECK(r.code == cli::kOk);
    CHECK(r.doc["passed"] == true);
    CHECK(run([](auto& out, auto& err) { return cli::cmd_verify("nope", {}, out, err); }).code == cli::kUsage);
}

TEST_CASE("primitive") {
    for (std::uint32_t r : {2u, 4u, 6u, 8u}) {
        cli::PrimitiveOpts o;
        o.field = {3, 1, r};
        o.avoid = std::string("0");
        for (std::uint32_t i = 1; i < r; ++i) *o.avoid += ",0";
        const auto res = run([&](auto& out, auto& err) { return cli::cmd_primitive(o, {}, out, err); });
        CHECK(res.code == cli::kOk);
        CHECK(res.doc["consistent"] == true);
        CHECK(res.doc["N_vinogradov"].get<double>() == doctest::Approx(res.doc["N_direct"].get<double>()));
    }
    cli::PrimitiveOpts w;
    w.field = {2, 1, 8};
    w.family = "*;*;*;*;*;*;*;*";
    const auto res = run([&](auto& out, auto& err) { return cli::cmd_primitive(w, {}, out, err); });
    CHECK(res.doc["N_direct"] == 128);
}
