#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mellin::cli {

enum class Command { list, verify, verify_all, sweep, figure };
enum class Format { text, json, csv };

struct RunConfig {
    Command command = Command::list;
    std::string id;
    std::string group;
    // In the order given; repeated keys are kept.
    std::vector<std::pair<std::string, std::string>> params;
    int digits = 30;
    int max_digits = 10000;
    int jobs = 0;  // 0: OpenMP default
    Format format = Format::text;
    std::string out_path;
    std::string figure_b = "1";
    std::string figure_n = "2..10";
};

// Parses argv (argv[0] is the program name). Throws ConfigError; a help
// request is reported through `help` with the text in `help_text`.
RunConfig parse_args(int argc, const char* const* argv, bool& help, std::string& help_text);

// Applies MELLIN_SUM_MAX_DIGITS and the digit rules. Throws ConfigError.
void validate(RunConfig& cfg);

// Expands a sweep value: comma-separated items, each a number or
// start..stop[:step] with exact rational stepping.
std::vector<std::string> expand_grid(const std::string& text);

// Exit status: 0 all pass, 1 any failure, 2 configuration error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// parse_args + validate + run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mellin::cli
