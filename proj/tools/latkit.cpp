#include <iostream>

#include "latkit/cli.hpp"

int main(int argc, char** argv) { return latkit::run_cli(argc, argv, std::cout, std::cerr); }
