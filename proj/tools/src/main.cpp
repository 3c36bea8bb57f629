#include <iostream>

#include "qmcshake/cli/app.hpp"

int main(int argc, char** argv) {
  return qmcshake::cli::main_entry(argc, argv, std::cout, std::cerr);
}
