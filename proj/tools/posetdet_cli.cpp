#include <iostream>

#include "posetdet/cli.hpp"

int main(int argc, char** argv) { return posetdet::cli::run(argc, argv, std::cout, std::cerr); }
