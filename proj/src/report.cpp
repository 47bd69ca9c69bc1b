#include "charsum/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>

namespace charsum::report {

namespace {

double num(long double x) { return static_cast<double>(x); }

}  // namespace

json field_manifest(const Field& field) {
    json basis = json::array();
    for (Elt a : field.basis()) basis.push_back(a.v);
    return {{"p", field.p()},
            {"k", field.k()},
            {"r", field.r()},
            {"q", field.q()},
            {"n", field.order()},
            {"modulus", std::vector<std::uint32_t>(field.modulus().begin(), field.modulus().end())},
            {"generator", field.generator().v},
            {"basis", basis}};
}

json run_manifest(const std::vector<std::string>& argv) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return {{"tool", "charsum"},
            {"version", kToolVersion},
            {"command_line", argv},
            {"timestamp", stamp},
            {"seed", "none (deterministic)"}};
}

json to_json(const SumResult& sum) {
    return {{"root_order", sum.acc.root_order()},
            {"counts", sum.acc.counts()},
            {"magnitude", num(sum.magnitude)},
            {"term_count", sum.term_count},
            {"zero_hits", sum.zero_hits}};
}

json to_json(const BoundReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"value", num(c.value)},
                          {"ratio", num(c.ratio)},
                          {"hard", c.hard},
                          {"violated", c.violated}});
    }
    return {{"D", report.D},
            {"simple_root", report.simple_root.v},
            {"checks", checks},
            {"violation", report.any_violation()}};
}

json to_json(const bounds::ThresholdResult& t) {
    return {{"q", t.q},
            {"r_min", t.r_min},
            {"lhs_at_rmin", num(t.lhs_at_rmin)},
            {"rhs", num(t.rhs)},
            {"lhs_at_rmin_minus_2", num(t.lhs_at_rmin_minus_2)},
            {"log_margin_at_rmin", num(t.margin_at_rmin)},
            {"log_margin_at_rmin_minus_2", num(t.margin_at_rmin_minus_2)},
            {"rounding_bound", num(t.rounding_bound)},
            {"certified", t.certified}};
}

json to_json(const bounds::Thm35Bound& b) {
    json out = {{"sign", b.sign},
                {"log_abs", num(b.log_abs)},
                {"phi_included", b.phi_included},
                {"log_w", num(b.log_w_used)},
                {"positive", b.positive()}};
    const long double v = b.value();
    out["value"] = std::isfinite(v) ? json(num(v)) : json(nullptr);
    return out;
}

}  // namespace charsum::report
