#include "qmat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qmat::run_cli(argc, argv, std::cout, std::cerr); }
