#include <iostream>

#include "rskop/cli.hpp"

int main(int argc, char** argv) { return rskop::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
