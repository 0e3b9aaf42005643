#include <iostream>
#include <string>
#include <vector>

#include "exclugraph/cli.hpp"

int main(int argc, char** argv) {
  return exclugraph::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
