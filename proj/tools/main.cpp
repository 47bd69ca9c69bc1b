#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charsum/report.hpp"
#include "commands.hpp"

namespace {

void add_field_opts(CLI::App* cmd, charsum::cli::FieldOpts& o) {
    cmd->add_option("--p", o.p, "characteristic")->required();
    cmd->add_option("--k", o.k, "q = p^k")->default_val(1);
    cmd->add_option("--r", o.r, "even extension degree over F_q")->required();
}

bool threads_env_ok() {
    const char* env = std::getenv("CHARSUM_THREADS");
    if (env == nullptr) return true;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    return end != env && *end == '\0' && v > 0;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace charsum::cli;
    const std::vector<std::string> args(argv, argv + argc);

    CLI::App app{"Exact multiplicative character sums over restricted and sparse subsets of F_{q^r}"};
    app.set_version_flag("--version", charsum::report::kToolVersion);
    app.require_subcommand(1);

    FieldOpts field_opts;
    auto* field_cmd = app.add_subcommand("field-info", "print the field context manifest");
    add_field_opts(field_cmd, field_opts);

    CharsumOpts sum_opts;
    auto* sum_cmd = app.add_subcommand("charsum", "exact S(G, chi, f) with bound audit");
    add_field_opts(sum_cmd, sum_opts.field);
    auto* set_opt = sum_cmd->add_option("--set", sum_opts.set, "family spec, e.g. \"!0;!0;!0;!0\"");
    auto* sparse_opt = sum_cmd->add_option("--sparse", sum_opts.sparse, "weight s of G_s");
    set_opt->excludes(sparse_opt);
    sum_cmd->add_option("--chi", sum_opts.chi, "character index j in [0, n)")->default_val(1);
    sum_cmd->add_option("--f", sum_opts.f, "packed coefficients, low degree first")->default_val("0,1");
    sum_cmd->add_flag("!--no-audit", sum_opts.audit, "skip the bound audit");

    ThresholdOpts thr_opts;
    auto* thr_cmd = app.add_subcommand("thresholds", "smallest even r where the W(q^r - 1) condition holds");
    thr_cmd->add_option("--q", thr_opts.q_list, "comma-separated prime powers >= 3")->default_val("9,8,7,5,4,3");
    thr_cmd->add_flag("--csv", thr_opts.csv, "CSV instead of JSON");

    EtaOpts eta_opts;
    auto* eta_cmd = app.add_subcommand("eta", "eta'(rho) or the (rho, H, eta') curve");
    auto* rho_opt = eta_cmd->add_option("--rho", eta_opts.rho, "rho in (0, 1], reflected to min(rho, 1 - rho)");
    auto* curve_opt = eta_cmd->add_flag("--curve", eta_opts.curve, "emit the curve CSV");
    rho_opt->excludes(curve_opt);
    eta_cmd->add_option("--step", eta_opts.step, "curve step in (0, 0.01]")->default_val(0.001);
    eta_cmd->add_option("--out", eta_opts.out, "curve CSV path (stdout if absent)");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "suite name or 'all'")->required();

    PrimitiveOpts prim_opts;
    auto* prim_cmd = app.add_subcommand("primitive", "primitive elements of G_A, directly and via Vinogradov");
    add_field_opts(prim_cmd, prim_opts.field);
    auto* fam_opt = prim_cmd->add_option("--family", prim_opts.family, "family spec");
    auto* avoid_opt = prim_cmd->add_option("--avoid", prim_opts.avoid, "c_1,...,c_r for A_i = F_q \\ {c_i}");
    fam_opt->excludes(avoid_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    if (!threads_env_ok()) {
        std::cerr << "error: CHARSUM_THREADS must be a positive integer\n";
        return kUsage;
    }

    if (*field_cmd) return cmd_field_info(field_opts, args, std::cout, std::cerr);
    if (*sum_cmd) return cmd_charsum(sum_opts, args, std::cout, std::cerr);
    if (*thr_cmd) return cmd_thresholds(thr_opts, args, std::cout, std::cerr);
    if (*eta_cmd) return cmd_eta(eta_opts, args, std::cout, std::cerr);
    if (*verify_cmd) return cmd_verify(suite, args, std::cout, std::cerr);
    if (*prim_cmd) return cmd_primitive(prim_opts, args, std::cout, std::cerr);
    return kUsage;
}
