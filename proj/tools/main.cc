#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  return fullcover::cli::Run(argc, argv, std::cout, std::cerr);
}
