#include <iostream>

#include "ncalg/cli.hpp"

int main(int argc, char** argv) { return ncalg::run_cli(argc, argv, std::cout, std::cerr); }
