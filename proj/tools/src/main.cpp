#include <iostream>

#include "cupcap/cli/cli.hpp"

int main(int argc, char** argv) { return cupcap::cli::main_entry(argc, argv, std::cout, std::cerr); }
