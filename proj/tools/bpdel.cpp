#include <iostream>

#include "bpdel/cli.hpp"

int main(int argc, char** argv) { return bpdel::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
