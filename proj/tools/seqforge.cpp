#include "seqforge/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<std::string> env_limit;
  if (const char* v = std::getenv(seqforge::cli::kLimitEnvVar)) env_limit = v;
  return seqforge::cli::run(args, std::cout, std::cerr, env_limit);
}
