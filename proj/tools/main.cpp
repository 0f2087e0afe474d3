#include <iostream>

#include "sp16/cli.hpp"

int main(int argc, char** argv) { return sp16::run_cli(argc, argv, std::cout, std::cerr); }
