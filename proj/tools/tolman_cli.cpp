#include <iostream>

#include "tolman/cli.hpp"

int main(int argc, char** argv) { return tolman::cli::run(argc, argv, std::cout, std::cerr); }
