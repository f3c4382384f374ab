#include <iostream>

#include "dncrystal/cli.hpp"

int main(int argc, char** argv) { return dncrystal::run_cli(argc, argv, std::cout, std::cerr); }
