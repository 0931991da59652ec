#ifndef WILFKIT_CLI_HPP
#define WILFKIT_CLI_HPP

#include <iosfwd>

namespace wilfkit::cli {

/*
 * Command-line front end.  Thin: every subcommand parses flags, calls one
 * library operation and formats the result as text, json or csv.
 *
 * Exit codes:
 *   0  success
 *   1  verification failure (--expect-equal not met, nonzero residual)
 *   2  usage error or invalid input
 *   3  node budget exceeded
 */
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wilfkit::cli

#endif
