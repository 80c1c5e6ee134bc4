#include <iostream>

#include "anyon/cli.hpp"

int main(int argc, char** argv) { return anyon::run_cli(argc, argv, std::cout, std::cerr); }
