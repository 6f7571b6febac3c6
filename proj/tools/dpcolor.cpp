#include <iostream>

#include "dpcolor/cli.hpp"

int main(int argc, char** argv) { return dpcolor::cli::run(argc, argv, std::cout, std::cerr); }
