#pragma once

#include "isostrat/errors.hpp"
#include "isostrat/session.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isostrat {

enum class ReportFormat { Text, Json };

struct CommandOptions {
    std::optional<std::string> subgroup;
    std::optional<std::string> target;
    std::optional<unsigned> max_degree;
    std::optional<std::string> point; // comma-separated rationals
};

struct Report {
    std::string command;
    Json data;
    std::string text;
    int exit_code = 0;
};

inline const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names{"invariants", "strata",      "fixed-locus", "monodromy",
                                                "rationalize", "slice",      "verify"};
    return names;
}

/// Throws InputError (exit code 1) or MathOutcome (exit code 2). A report
/// whose exit_code is 2 carries a negative answer, e.g. a failed
/// invariance check.
Report run_command(const Session& session, const std::string& command, const CommandOptions& options);

/// Report for an error raised by run_command.
Report error_report(const std::string& command, const Error& error);

std::string emit_report(const Report& report, ReportFormat format);

} // namespace isostrat
