#ifndef QUATLIN_COMMANDS_HPP
#define QUATLIN_COMMANDS_HPP

#include "quatlin/io.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace quatlin::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 2;
inline constexpr int singular_frame = 3;
inline constexpr int precondition = 4;
} // namespace exit_code

enum class OutputFormat { Pretty, Json };

struct OutputOptions {
    OutputFormat format = OutputFormat::Pretty;
    /// Adds floating-point views next to exact values. Display only.
    bool approx = false;
};

/// Reads QUATLIN_OUTPUT ("json" or "pretty", default pretty).
/// Throws ParseError on any other value.
OutputFormat format_from_env();

struct CommandResult {
    int exit_code = exit_code::ok;
    std::string out;
    std::string err;
};

std::string render(const io::Json& doc, OutputFormat format);

CommandResult cmd_decompose(std::string_view document_json, std::string_view frame,
                            const OutputOptions& opts);
CommandResult cmd_check(std::string_view document_json, const OutputOptions& opts);
CommandResult cmd_recover(std::string_view document_json, const OutputOptions& opts);
CommandResult cmd_rank(std::string_view spec, const OutputOptions& opts);
CommandResult cmd_catalog(const OutputOptions& opts);
/// a defaults to (1, 2, 3, 4); otherwise "w,x,y,z".
CommandResult cmd_demo(std::optional<std::string_view> a, const OutputOptions& opts);

} // namespace quatlin::cli

#endif
