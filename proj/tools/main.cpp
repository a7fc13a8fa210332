#include "quadinc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return quadinc::run_cli(argc, argv, std::cout, std::cerr); }
