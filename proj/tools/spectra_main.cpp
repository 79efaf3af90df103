#include <string>
#include <vector>

#include "spectra/cli.hpp"

int main(int argc, char** argv) {
  return spectra::cli::runCli(std::vector<std::string>(argv + 1, argv + argc));
}
