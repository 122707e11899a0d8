#include <iostream>

#include "spg/cli.hpp"

int main(int argc, char** argv) { return spg::run_cli(argc, argv, std::cout, std::cerr); }
