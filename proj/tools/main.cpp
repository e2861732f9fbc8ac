// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include "commands.hpp"
#include "run_config.hpp"

int main(int argc, char *argv[])
{
  using namespace thermosemi::cli;
  try
  {
    const RunConfig config = parse_arguments({argv + 1, argv + argc});
    run(config, std::cout);
    return 0;
  }
  catch (const HelpRequested &help)
  {
    std::cout << help.text;
    return 0;
  }
  catch (const std::exception &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
