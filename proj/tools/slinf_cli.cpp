#include <iostream>

#include "slinf/cli.hpp"

int main(int argc, char** argv) { return slinf::cli::run(argc, argv, std::cout, std::cerr); }
