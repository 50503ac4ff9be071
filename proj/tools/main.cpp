#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace stanleychar::cli;
  const ParseOutcome parsed = parse_command_line(std::vector<std::string>(argv + 1, argv + argc));
  if (!parsed.job) {
    (parsed.exit_code == kExitOk ? std::cout : std::cerr) << parsed.message;
    return parsed.exit_code;
  }
  return run(*parsed.job, std::cout, std::cerr);
}
