#include <iostream>

#include "sqfd/cli.hpp"

int main(int argc, char** argv) { return sqfd::cli::run(argc, argv, std::cout, std::cerr); }
