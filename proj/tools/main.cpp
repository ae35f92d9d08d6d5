#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return cateval::cli::run(argc, argv, std::cout, std::cerr); }
