#include <iostream>

#include "kekulattice/cli.hpp"

int main(int argc, char** argv) { return kekulattice::cli::main_entry(argc, argv, std::cout, std::cerr); }
