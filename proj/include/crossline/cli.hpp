#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossline {

/**
 * Command-line front end: subcommands cr, ratio, construct, verify,
 * conformance, render. Returns the process exit code: 0 success / all
 * checks passed, 1 verification failure, 2 usage or input error.
 * The environment variable CROSSLINE_SEED supplies the default seed.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace crossline
