#include <iostream>

#include "hgsat/cli.hpp"

int main(int argc, char** argv) { return hgsat::run_cli(argc, argv, std::cout, std::cerr); }
