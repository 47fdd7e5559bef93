#pragma once

#include "dldeg/hermitian.hpp"
#include "dldeg/report.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace dldeg {

/// Bad flags or out-of-range parameters; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

enum class DegreeMethod { closed, schubert, coeff, all };

DegreeMethod parse_method(const std::string& s);

/// Caps on d; max_d_override replaces the per-method defaults
/// (coeff 5, schubert 6, closed unbounded).
RunReport cmd_degree(int d, DegreeMethod method, std::optional<int> max_d_override = std::nullopt);
RunReport cmd_class(int d);
RunReport cmd_syt(int d, std::optional<int> l = std::nullopt);
RunReport cmd_cauchy(int d, std::optional<int> max_d_override = std::nullopt);
/// check is isotropic|special (use n) or dl|pairs (use d).
RunReport cmd_finite(int q, const std::string& check, std::optional<int> n, std::optional<int> d,
                     std::uint64_t budget = kDefaultBudget);
RunReport cmd_verify(int max_d, bool with_finite, std::uint64_t budget = kDefaultBudget);

/// Prints the report as text or JSON and returns its exit code
/// (0 when every check passes, 1 otherwise).
int emit_report(const RunReport& report, const std::string& format, std::ostream& out);

/// Full command-line entry point: parses argv, runs the command, prints the
/// report to out in text or JSON, and returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dldeg
