#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rgc/methods.hpp"
#include "rgc/scaled_real.hpp"

namespace rgc::cli {

enum class Format { csv, json, markdown };

/// A report cell; keeps the numeric payload typed so every output format
/// renders the same digits.
struct Cell {
    enum class Kind { text, integer, number, scaled, boolean, error } kind = Kind::text;
    std::string text;
    long long integer = 0;
    double number = 0.0;
    ScaledReal scaled;
    bool boolean = false;

    static Cell of_text(std::string s);
    static Cell of_int(long long v);
    static Cell of_number(double v);
    static Cell of_scaled(const ScaledReal& v);
    static Cell of_bool(bool v);
    static Cell of_error(std::string marker);
};

struct Report {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    bool had_row_errors = false;
};

struct CliRequest {
    enum class Command { compute, table, compare, bn } command = Command::compute;
    std::vector<int> ns;                  // expanded -n / --range
    std::vector<Method> methods;
    std::optional<std::string> against;   // compare target: method name or "exact"
    int which_table = 0;                  // table subcommand
    int bn_max = 0;                       // bn subcommand
    Format format = Format::markdown;
    int digits = 10;
    bool parallel = false;
    MethodConfig config;
};

/// Evaluate one (n, method) pair under a config.  Exceptions from the
/// method layer are translated into error-marked rows by the runners.
CoefficientEstimate evaluate(Method m, int n, const MethodConfig& cfg);

Report run_compute(const CliRequest& req);
Report run_table(const CliRequest& req);
Report run_compare(const CliRequest& req);
Report run_bn(const CliRequest& req);

void render(const Report& report, Format format, int digits, std::ostream& out);

/// Full argv-level entry point; returns the process exit code
/// (0 ok, 1 usage error, 2 partial computational failure).
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rgc::cli
