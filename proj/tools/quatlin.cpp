#include "quatlin/commands.hpp"
#include "quatlin/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using quatlin::cli::CommandResult;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CommandResult with_file(const std::string& path,
                        const std::function<CommandResult(const std::string&)>& run) {
    const auto text = read_file(path);
    if (!text) return {quatlin::cli::exit_code::parse, {}, "error: cannot read '" + path + "'\n"};
    return run(*text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quatlin: exact operator calculus on the quaternion algebra"};
    app.require_subcommand(1);

    bool approx = false;
    app.add_flag("--approx", approx, "Also print floating-point approximations");

    std::string frame = "RIGHT_UNITS";
    std::string input;
    auto* decompose = app.add_subcommand("decompose", "Expand a 4x4 matrix over a frame");
    decompose->add_option("--frame", frame, "Builtin frame name or frame spec")->capture_default_str();
    decompose->add_option("file", input, "Matrix document (JSON)")->required();

    auto* check = app.add_subcommand("check", "Classify a matrix as (anti)linear automorphism");
    check->add_option("file", input, "Matrix document (JSON)")->required();

    auto* recover = app.add_subcommand("recover", "Recover q with f(x) = q x q^-1");
    recover->add_option("file", input, "Matrix document (JSON)")->required();

    std::string spec;
    auto* rank = app.add_subcommand("rank", "Rank report for a family of frame terms");
    rank->add_option("--spec", spec, "Frame spec, e.g. \"L:id L:A1 L:A1A1 L:I\"")->required();

    auto* catalog = app.add_subcommand("catalog", "Print the automorphism catalog");

    std::string a_text;
    auto* demo = app.add_subcommand("demo", "Worked expansion examples");
    demo->add_option("--a", a_text, "Quaternion \"w,x,y,z\" (default 1,2,3,4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : quatlin::cli::exit_code::parse;
    }

    quatlin::cli::OutputOptions opts;
    opts.approx = approx;
    try {
        opts.format = quatlin::cli::format_from_env();
    } catch (const quatlin::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return quatlin::cli::exit_code::parse;
    }

    CommandResult result;
    if (*decompose) {
        result = with_file(input, [&](const std::string& text) {
            return quatlin::cli::cmd_decompose(text, frame, opts);
        });
    } else if (*check) {
        result = with_file(input, [&](const std::string& text) { return quatlin::cli::cmd_check(text, opts); });
    } else if (*recover) {
        result = with_file(input, [&](const std::string& text) { return quatlin::cli::cmd_recover(text, opts); });
    } else if (*rank) {
        result = quatlin::cli::cmd_rank(spec, opts);
    } else if (*catalog) {
        result = quatlin::cli::cmd_catalog(opts);
    } else if (*demo) {
        result = quatlin::cli::cmd_demo(demo->count("--a") ? std::optional<std::string_view>(a_text)
                                                            : std::nullopt,
                                        opts);
    }
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
