#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include "charsum/bounds.hpp"
#include "charsum/error.hpp"
#include "charsum/report.hpp"
#include "charsum/sums.hpp"
#include "charsum/text.hpp"
#include "charsum/verify.hpp"

namespace charsum::cli {

using report::json;

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
            case Errc::PrereqUnmet:
            case Errc::PreconditionROutOfRange:
            case Errc::FactorizationTooLarge: return kPrereq;
            default: return kUsage;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

Field make_field(const FieldOpts& o) { return Field(TowerParams{o.p, o.k, o.r}); }

json manifest_with_field(const std::vector<std::string>& argv, const Field& field) {
    json m = report::run_manifest(argv);
    m["field"] = report::field_manifest(field);
    return m;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

double num(long double x) { return static_cast<double>(x); }

}  // namespace

int cmd_field_info(const FieldOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Field field = make_field(o);
        emit(out, {{"manifest", report::run_manifest(argv)}, {"field", report::field_manifest(field)}});
        return kOk;
    });
}

int cmd_charsum(const CharsumOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Field field = make_field(o.field);
        const Poly f = text::parse_poly(field, o.f);
        const MulChar chi = char_of_index(field, o.chi);
        json doc = {{"manifest", manifest_with_field(argv, field)},
                    {"chi", {{"index", chi.index()}, {"order", chi.order()}}},
                    {"f", text::format_poly(f)}};

        std::optional<RestrictedFamily> family;
        std::optional<SparseSpec> sparse;
        if (o.set) {
            family = text::parse_family(field, *o.set);
            doc["set"] = {{"kind", "restricted"}, {"spec", *o.set}, {"family", family->sets}};
        } else if (o.sparse) {
            sparse = SparseSpec{*o.sparse};
            SparseSet check(field, *sparse);
            doc["set"] = {{"kind", "sparse"}, {"s", sparse->s}, {"rho", num(sparse->rho(field.r()))}};
        } else {
            throw Error(Errc::ParseError, "need --set or --sparse");
        }

        if (!o.audit) {
            const SumResult sum = family ? char_sum(field, *family, chi, f) : char_sum(field, *sparse, chi, f);
            doc["sum"] = report::to_json(sum);
            emit(out, doc);
            return kOk;
        }
        const BoundReport rep = family ? bound_audit(field, *family, chi, f) : bound_audit(field, *sparse, chi, f);
        doc["sum"] = report::to_json(rep.sum);
        doc["audit"] = report::to_json(rep);
        emit(out, doc);
        return rep.any_violation() ? kVerifyFailed : kOk;
    });
}

int cmd_thresholds(const ThresholdOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<bounds::ThresholdResult> rows;
        for (std::uint64_t q : text::parse_uint_list(o.q_list)) rows.push_back(bounds::threshold_min_even_r(q));
        if (o.csv) {
            out << "q,r_min,lhs_at_rmin,rhs,lhs_at_rmin_minus_2,certified\n";
            char line[256];
            for (const auto& t : rows) {
                std::snprintf(line, sizeof line, "%llu,%llu,%.21Lg,%.21Lg,%.21Lg,%d\n",
                              static_cast<unsigned long long>(t.q), static_cast<unsigned long long>(t.r_min),
                              t.lhs_at_rmin, t.rhs, t.lhs_at_rmin_minus_2, t.certified ? 1 : 0);
                out << line;
            }
            return kOk;
        }
        json list = json::array();
        for (const auto& t : rows) list.push_back(report::to_json(t));
        emit(out, {{"manifest", report::run_manifest(argv)}, {"thresholds", list}});
        return kOk;
    });
}

int cmd_eta(const EtaOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (o.curve) {
            const auto rows = bounds::figure1_data(o.step);
            if (!o.out) {
                bounds::write_curve_csv(out, rows);
                return kOk;
            }
            std::ofstream file(*o.out);
            if (!file) throw Error(Errc::InvalidParams, "cannot open " + *o.out);
            bounds::write_curve_csv(file, rows);
            emit(out, {{"manifest", report::run_manifest(argv)}, {"rows", rows.size()}, {"out", *o.out}});
            return kOk;
        }
        if (!o.rho) throw Error(Errc::ParseError, "need --rho or --curve");
        const long double x = *o.rho;
        if (!(x > 0 && x <= 1)) throw Error(Errc::DomainError, "rho must lie in (0, 1]");
        const long double rho = std::min(x, 1 - x);
        const auto e = bounds::eta_prime(rho);
        emit(out, {{"manifest", report::run_manifest(argv)},
                   {"rho_input", num(x)},
                   {"rho", num(rho)},
                   {"eta_prime", num(e.value)},
                   {"lambda", num(e.lambda)},
                   {"entropy", num(bounds::entropy(rho))}});
        return kOk;
    });
}

int cmd_verify(const std::string& suite, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<std::string> names;
        if (suite == "all") {
            names = verify::suite_names();
        } else {
            names.push_back(suite);
        }
        json list = json::array();
        bool all_passed = true;
        for (const auto& name : names) {
            const auto r = verify::run_suite(name);
            all_passed = all_passed && r.passed;
            list.push_back({{"suite", r.name},
                            {"passed", r.passed},
                            {"checks", r.checks},
                            {"summary", r.summary},
                            {"counterexample", r.counterexample}});
        }
        emit(out, {{"manifest", report::run_manifest(argv)}, {"suites", list}, {"passed", all_passed}});
        return all_passed ? kOk : kVerifyFailed;
    });
}

int cmd_primitive(const PrimitiveOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Field field = make_field(o.field);
        RestrictedFamily family;
        if (o.family) {
            family = text::parse_family(field, *o.family);
        } else if (o.avoid) {
            std::vector<std::uint32_t> c;
            for (std::uint64_t v : text::parse_uint_list(*o.avoid)) {
                if (v >= field.q()) throw Error(Errc::ParseError, "c_i must be a base-field index < q");
                c.push_back(static_cast<std::uint32_t>(v));
            }
            if (c.size() != field.r()) throw Error(Errc::ParseError, "--avoid needs exactly r values");
            family = hyperplane_avoiding_family(field, c);
        } else {
            throw Error(Errc::ParseError, "need --family or --avoid");
        }

        const std::uint64_t direct = primitive_count_direct(field, family);
        const long double vin = primitive_count_vinogradov(field, family);
        json doc = {{"manifest", manifest_with_field(argv, field)},
                    {"family", family.sets},
                    {"N_direct", direct},
                    {"N_vinogradov", num(vin)},
                    {"thm35_lower_bound", nullptr}};
        bool consistent = std::fabs(static_cast<long double>(direct) - vin) <= 1e-6L;
        if (field.q() >= 3 && is_hyperplane_avoiding(field, family)) {
            const auto lb = bounds::lower_bound_thm35(field.q(), field.r(), bounds::WMode::Exact);
            doc["thm35_lower_bound"] = report::to_json(lb);
            if (lb.positive()) consistent = consistent && static_cast<long double>(direct) >= lb.value();
        }
        doc["consistent"] = consistent;
        emit(out, doc);
        return consistent ? kOk : kVerifyFailed;
    });
}

}  // namespace charsum::cli
