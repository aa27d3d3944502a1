#include <iostream>

#include "swcheck/cli.hpp"

int main(int argc, char** argv) { return swcheck::cli::run(argc, argv, std::cout, std::cerr); }
