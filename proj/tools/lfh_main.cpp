#include <iostream>

#include "lfh/cli.hpp"

int main(int argc, char** argv) { return lfh::run_cli(argc, argv, std::cout, std::cerr); }
