#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return friezelab::cli::run_cli(argc, argv, std::cout, std::cerr); }
