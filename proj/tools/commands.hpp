// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef THERMOSEMI_TOOLS_COMMANDS_HPP
#define THERMOSEMI_TOOLS_COMMANDS_HPP

#include <ostream>
#include "run_config.hpp"

namespace thermosemi::cli
{

// Validates, then runs the selected command, writing config.ini and the command's CSV/JSON
// (and SVG with plot) artifacts into config.out_dir. Progress lines go to log.
void run(const RunConfig &config, std::ostream &log);

// 0 success, 2 input error, 3 numerical error, 1 anything else.
int exit_code_for(const std::exception &e);

}  // namespace thermosemi::cli

#endif  // THERMOSEMI_TOOLS_COMMANDS_HPP
