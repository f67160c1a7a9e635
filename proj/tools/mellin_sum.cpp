#include <iostream>

#include "mellin/cli.hpp"

int main(int argc, char** argv) { return mellin::cli::main_entry(argc, argv, std::cout, std::cerr); }
