/**
 * @file
 * @brief The `linsvm` command line: train, compare, predict, gen-data.
 */

#pragma once

#include <iosfwd>  // std::ostream
#include <string>  // std::string
#include <vector>  // std::vector

namespace linsvm {

/**
 * @brief Run the command line with @p args (program name excluded).
 * @return the process exit status: 0 on success, nonzero on invalid flags or input errors
 */
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace linsvm
