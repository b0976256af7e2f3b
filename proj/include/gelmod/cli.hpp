#pragma once

// Command-line surface, kept binary-free so the python bindings can reuse
// it: group-expression parsing, subcommand drivers, three output formats.

#include "gelmod/coxeter.hpp"

#include <optional>
#include <string>

namespace gelmod::cli {

// "A2xD6xE7", "I2(7)", "H3", "B3xB3". Throws ParseError (with a position in
// the message) for malformed text, UnknownType for an unrecognized family.
ProductDescriptor parse_group(const std::string& text);

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s); // "text" | "json" | "csv"

struct Options {
    Format format = Format::Text;
    std::optional<int> maxDegree; // overrides the default degree window
    Int cap = 10000;              // element-enumeration ceiling
};

struct RunResult {
    int exitCode = 0;
    std::string output; // complete report, trailing newline included
};

RunResult run_fake_degrees(const std::string& groupExpr, const Options& opt);
RunResult run_verdict(const std::string& groupExpr, const Options& opt);
RunResult run_model(const std::string& groupExpr, const Options& opt);
RunResult run_oracle(const std::string& groupExpr, const Options& opt);
RunResult run_dihedral_model(const std::string& groupExpr, const Options& opt);
RunResult run_check(const std::string& groupExpr, const Options& opt);

// Dispatch by subcommand name. Library errors are caught and rendered in the
// requested format (a machine-readable object in JSON mode) with exit code 2;
// an unknown subcommand is reported the same way.
RunResult run_command(const std::string& subcommand, const std::string& groupExpr,
                      const Options& opt);

} // namespace gelmod::cli
