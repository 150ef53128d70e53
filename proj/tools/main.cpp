#include <iostream>

#include "jarnik/cli.hpp"

int main(int argc, char** argv) { return jarnik::cli::run(argc, argv, std::cout, std::cerr); }
