#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace charsum::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kPrereq = 3 };

struct FieldOpts {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::uint32_t r = 2;
};

struct CharsumOpts {
    FieldOpts field;
    std::optional<std::string> set;
    std::optional<std::uint32_t> sparse;
    std::uint64_t chi = 1;
    std::string f = "0,1";
    bool audit = true;
};

struct ThresholdOpts {
    std::string q_list = "9,8,7,5,4,3";
    bool csv = false;
};

struct EtaOpts {
    std::optional<double> rho;
    bool curve = false;
    double step = 0.001;
    std::optional<std::string> out;
};

struct PrimitiveOpts {
    FieldOpts field;
    std::optional<std::string> family;
    std::optional<std::string> avoid;
};

/// Each command writes its payload to `out` and diagnostics to `err`, and
/// returns the process exit code. `argv` goes into the run manifest.
int cmd_field_info(const FieldOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int cmd_charsum(const CharsumOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int cmd_thresholds(const ThresholdOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int cmd_eta(const EtaOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& suite, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int cmd_primitive(const PrimitiveOpts& o, const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace charsum::cli
