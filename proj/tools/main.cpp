#include <iostream>

#include "starring/cli.hpp"

int main(int argc, char** argv) { return starring::run_cli(argc, argv, std::cout, std::cerr); }
