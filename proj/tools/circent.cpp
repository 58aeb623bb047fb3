#include "circent/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return circent::run_cli(argc, argv, std::cout, std::cerr); }
