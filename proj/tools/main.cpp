#include <iostream>

#include "oriftl/cli.hpp"

int main(int argc, char** argv) { return oriftl::cli::run(argc, argv, std::cout, std::cerr); }
