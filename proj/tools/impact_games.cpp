#include <iostream>

#include "impact/cli.hpp"

int main(int argc, char** argv) { return impact::cli::run_cli(argc, argv, std::cout, std::cerr); }
