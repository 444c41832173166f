#include <iostream>

#include "rcpower/cli.hpp"

int main(int argc, char** argv) { return rcpower::cli::run(argc, argv, std::cout, std::cerr); }
