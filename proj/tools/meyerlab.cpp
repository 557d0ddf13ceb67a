#include "meyerlab/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return meyerlab::cli::run(argc, argv, std::cout, std::cerr); }
