#ifndef SCHMIDT_CLI_HPP
#define SCHMIDT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace schmidt::cli {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

/// Runs one command. `args` excludes the program name.
///
///   verify <id> [--m --s --i --n --q-cap --s-cap --literal] [--json]
///   coeff --identity <id> --side <sum|product|enum|recurrence|quotient> --mono q=6,t1=1,t2=2
///   witness --identity <id> --mono ...
///   map --bijection <psi|mork|glaisher|decompose> [--m --s] --partition ... [--removed ...] [--inverse]
///   enumerate --class <P|D|F|R|cs|over> --n N [--m --s --top] [--schmidt-weight]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schmidt::cli

#endif  // SCHMIDT_CLI_HPP
