// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "charsum/bounds.hpp"
#include "charsum/sums.hpp"
#include "charsum/verify.hpp"

using namespace charsum;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome suites(std::initializer_list<const char*> names) {
    Outcome o{true, ""};
    for (const char* n : names) {
        const auto r = verify::run_suite(n);
        o.pass = o.pass && r.passed;
        if (!o.detail.empty()) o.detail += "; ";
        o.detail += r.name + ": " + r.summary;
    }
    return o;
}

Outcome c1_eta() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto a = bounds::eta_prime(0.13L);
    const auto t1 = std::chrono::steady_clock::now();
    const auto b = bounds::eta_prime(0.32L);
    const auto t2 = std::chrono::steady_clock::now();
    const double sa = std::chrono::duration<double>(t1 - t0).count(), sb = std::chrono::duration<double>(t2 - t1).count();
    const bool pass = std::fabs(static_cast<double>(a.value) - 0.55680) <= 5e-5 &&
                      std::fabs(static_cast<double>(b.value) - 0.82690) <= 5e-5 && sa < 1 && sb < 1;
    const auto ga = bounds::eta_prime_on_grid(0.13L, 0.01L), gb = bounds::eta_prime_on_grid(0.32L, 0.01L);
    return {pass, fmt("eta'(0.13)=%.7Lf (want 0.55680), eta'(0.32)=%.7Lf (want 0.82690), %.3fs/%.3fs; "
                      "lambda-grid 0.01 gives %.7Lf, %.7Lf",
                      a.value, b.value, sa, sb, ga.value, gb.value)};
}

Outcome c2_entropy() {
    const auto a = bounds::entropy(0.13L), b = bounds::entropy(0.32L);
    return {std::fabs(static_cast<double>(a) - 0.55743) <= 5e-5 && std::fabs(static_cast<double>(b) - 0.90438) <= 5e-5,
            fmt("H(0.13)=%.7Lf, H(0.32)=%.7Lf", a, b)};
}

Outcome c3_curve_header() {
    std::ostringstream os;
    bounds::write_curve_csv(os, bounds::figure1_data(0.01L));
    const std::string s = os.str();
    const bool pass = s.find("#eta_ref,0.13,0.62751\n") != std::string::npos &&
                      s.find("#eta_ref,0.32,0.82719\n") != std::string::npos;
    return {pass, "annotation rows #eta_ref,0.13,0.62751 and #eta_ref,0.32,0.82719"};
}

Outcome c4_thresholds() {
    struct Want {
        std::uint64_t q;
        std::uint64_t r;
    };
    const Want exact[] = {{9, 2504}, {8, 3256}, {7, 4754}, {5, 25662}, {4, 363184}};
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    for (const auto& w : exact) {
        const auto t = bounds::threshold_min_even_r(w.q);
        const bool ok = t.r_min == w.r && t.certified;
        pass = pass && ok;
        detail += fmt("q=%llu:%llu%s ", static_cast<unsigned long long>(w.q), static_cast<unsigned long long>(t.r_min),
                      ok ? "" : fmt("(want %llu)", static_cast<unsigned long long>(w.r)).c_str());
    }
    const auto t3 = bounds::threshold_min_even_r(3);
    const double rel = std::fabs(static_cast<double>(t3.r_min) / 7.951e11 - 1);
    const bool ok3 = rel < 5e-4 && t3.certified;
    pass = pass && ok3;
    detail += fmt("q=3:%.4e%s", static_cast<double>(t3.r_min), ok3 ? "" : "(want 7.951e11)");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pass = pass && secs < 5;
    return {pass, detail + fmt(", %.3fs", secs)};
}

Outcome c5_delta() {
    const auto d = bounds::delta();
    return {std::fabs(static_cast<double>(d) - 0.94812) <= 1e-5, fmt("delta=%.7Lf", d)};
}

Outcome c6_compliance() {
    const auto t0 = std::chrono::steady_clock::now();
    Field f({3, 1, 4});
    const auto fam = hyperplane_avoiding_family(f, {0, 0, 0, 0});
    int violations = 0;
    long double worst = 0;
    for (std::uint64_t j = 1; j < f.order(); ++j) {
        const auto rep = bound_audit(f, fam, char_of_index(f, j), Poly::x(f));
        violations += rep.any_violation();
        for (const auto& c : rep.checks)
            if (c.name == "thm31") worst = std::max(worst, c.ratio);
    }
    Outcome o = suites({"cor24"});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.pass = o.pass && violations == 0 && secs < 60;
    o.detail = fmt("F_{3^4} 79 chars: %d violations, max |S|/thm31 = %.4Lf; ", violations, worst) + o.detail +
               fmt("; %.1fs", secs);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"eta-prime values", c1_eta},
        {"entropy values", c2_entropy},
        {"reference constants in curve header", c3_curve_header},
        {"thresholds", c4_thresholds},
        {"delta constant", c5_delta},
        {"bound compliance sweep", c6_compliance},
        {"oracle equivalence", [] { return suites({"oracle"}); }},
        {"vinogradov identity", [] { return suites({"vinogradov"}); }},
        {"M_i decomposition", [] { return suites({"decomposition"}); }},
        {"inequality suites", [] { return suites({"lemma41", "lemma36", "eq32"}); }},
        {"orthogonality", [] { return suites({"orthogonality"}); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        const Outcome o = criteria[i].second();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("%s  %2zu  %-36s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
