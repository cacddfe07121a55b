#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return sympow::run_cli(argc, argv, std::cout, std::cerr); }
