//===-- memlab/cli.hpp - Command-line driver -------------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_CLI_HPP
#define MEMLAB_CLI_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace memlab {

/// Runs the `memlab` command line. `args` excludes the program name.
/// Returns the process exit status.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

/// Parses `key = value` lines; `#` starts a comment.
std::map<std::string, std::string> parse_config_file(std::string_view text);

} // namespace memlab

#endif // MEMLAB_CLI_HPP
