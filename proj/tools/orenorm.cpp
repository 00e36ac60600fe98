#include <iostream>

#include "orenorm/cli.hpp"

int main(int argc, char** argv) { return orenorm::run_cli(argc, argv, std::cout, std::cerr); }
