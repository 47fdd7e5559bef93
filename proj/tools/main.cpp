#include "dldeg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dldeg::run_cli(argc, argv, std::cout, std::cerr); }
