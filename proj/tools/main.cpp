#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return goesv::cli::run(argc, argv, std::cout, std::cerr); }
