#include <iostream>

#include "arcforge/cli.hpp"

int main(int argc, char** argv) { return arcforge::cli::run(argc, argv, std::cout, std::cerr); }
