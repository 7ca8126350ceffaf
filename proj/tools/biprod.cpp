#include <iostream>

#include "biprod/cli.hpp"

int main(int argc, char** argv) { return biprod::cli::run_cli(argc, argv, std::cout, std::cerr); }
