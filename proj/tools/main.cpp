#include <iostream>

#include "hecke/cli/commands.hpp"

int main(int argc, char** argv) { return hecke::cli::main(argc, argv, std::cout, std::cerr); }
