#include <iostream>

#include "wormlab_cli/run.hpp"

int main(int argc, char** argv) { return wormlab::cli::main_entry(argc, argv, std::cout, std::cerr); }
