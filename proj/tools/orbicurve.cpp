#include "orbicurve/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return orbicurve::run_cli(argc, argv, std::cout, std::cerr); }
