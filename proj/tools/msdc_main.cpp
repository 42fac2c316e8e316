#include <iostream>

#include "msdc/cli.hpp"

int main(int argc, char** argv) { return msdc::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
